"""Radii of starlikeness of six normalized q-Bessel forms, with certified
power-sum brackets, printed-bound verification, and the classical limits."""

from .bounds import TheoremBoundSet, helper_poly, theorem_bounds
from .classical import (ClassicalBracket, ClassicalZeros, classical_bracket,
                        classical_first_zeros, classical_j_eval,
                        comparison_check, limit_convergence_check)
from .errors import (BracketFailure, BranchError, DomainError,
                     InsufficientCoefficients, NonConvergence, NonPositiveSum,
                     QStarlikeError, TailTooLarge, UnsupportedOrder)
from .euler_rayleigh import (BoundBracket, PowerSums, closed_form_sum,
                             closed_power_sums, er_bracket, newton_power_sums,
                             reconcile)
from .qseries import QDomainParams, norm_constant, q_pochhammer, q_pochhammer_inf
from .radius import RadiusResult, equation_residual, starlike_radius
from .series_core import (CASES, CASE_ORDER, CoefficientStream, FunctionCase,
                          as_case, coefficient_stream, hahn_exton_j3,
                          jackson_j2, normalized_eval, stream_eval)

__version__ = "0.1.0"

__all__ = [
    "QDomainParams", "q_pochhammer", "q_pochhammer_inf", "norm_constant",
    "FunctionCase", "CASES", "CASE_ORDER", "as_case", "CoefficientStream",
    "coefficient_stream", "stream_eval", "jackson_j2", "hahn_exton_j3",
    "normalized_eval",
    "PowerSums", "BoundBracket", "newton_power_sums", "closed_form_sum",
    "closed_power_sums", "er_bracket", "reconcile",
    "TheoremBoundSet", "theorem_bounds", "helper_poly",
    "RadiusResult", "starlike_radius", "equation_residual",
    "ClassicalBracket", "ClassicalZeros", "classical_bracket",
    "classical_first_zeros", "classical_j_eval", "comparison_check",
    "limit_convergence_check",
    "QStarlikeError", "DomainError", "NonConvergence", "BranchError",
    "TailTooLarge", "InsufficientCoefficients", "UnsupportedOrder",
    "NonPositiveSum", "BracketFailure",
    "__version__",
]
