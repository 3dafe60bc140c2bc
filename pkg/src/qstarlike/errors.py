"""Exception types shared across the package."""


class QStarlikeError(Exception):
    """Base class for all package-specific errors."""


class DomainError(QStarlikeError):
    """Parameter outside the domain of the requested operation."""


class NonConvergence(QStarlikeError):
    """An iterative evaluation hit its cap before stabilizing."""


class BranchError(QStarlikeError):
    """Fractional-power normalization asked for a non-positive radicand."""


class TailTooLarge(QStarlikeError):
    """Truncated series tail exceeds the requested tolerance at this argument."""


class InsufficientCoefficients(QStarlikeError):
    """A coefficient stream is too short for the requested power-sum order."""


class UnsupportedOrder(QStarlikeError):
    """No closed form is printed for the requested power-sum order."""


class NonPositiveSum(QStarlikeError):
    """A power sum that must be positive is not; signals an upstream defect."""


class BracketFailure(QStarlikeError):
    """No sign change found while hunting the first zero."""
