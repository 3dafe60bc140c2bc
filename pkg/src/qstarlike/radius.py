"""Radius of starlikeness as the first positive zero of the case's stream.

The zero is located in the reduced variable on a bracket supplied by the
order-2 power-sum inequalities, then refined by plain interval halving --
the stream is cheap to evaluate and halving keeps the bracket certified.
The returned residual re-evaluates the defining combination r*J' - c*J
through the raw function series, an independent path from the stream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import bracket_in_u, theorem_bounds
from .errors import BracketFailure, DomainError, NonConvergence
from .euler_rayleigh import BoundBracket, er_bracket, newton_power_sums
from .qseries import QDomainParams
from .series_core import (CoefficientStream, FunctionCase, as_case,
                          coefficient_stream, radius_equation_lhs, stream_eval)

MAX_BISECTIONS = 200
BRACKET_GROWTH = 1.25


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius with its certificate."""

    case: FunctionCase
    params: QDomainParams
    radius: float
    u_first_zero: float
    residual: float
    bracket: BoundBracket
    iterations: int
    truncation_order: int

    @property
    def quantity_value(self) -> float:
        """The value of the quantity the case's theorem brackets."""
        if self.case.quantity == "squared_radius":
            return self.u_first_zero
        return self.radius


def equation_residual(case: FunctionCase | str, params: QDomainParams,
                      r: float, tol: float = 1e-15) -> float:
    """Value of the defining equation at r, built from the raw series.

    For the plain-variable (h) cases r lives in the squared scale, so the
    equation is evaluated at sqrt(r).
    """
    case = as_case(case)
    case.check_domain(params)
    if r <= 0.0:
        raise DomainError(f"r must be positive, got {r}")
    w = math.sqrt(r) if case.parity == "plain" else r
    return radius_equation_lhs(case, params, w, tol)


def starlike_radius(case: FunctionCase | str, params: QDomainParams,
                    tol: float = 5e-13) -> RadiusResult:
    """First positive stream zero, bracketed and halved to relative width tol."""
    case = as_case(case)
    case.check_domain(params)
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")

    stream = coefficient_stream(case, params)
    sums = newton_power_sums(stream, 3)
    bracket = er_bracket(sums, 2)
    lo, hi = bracket.lower, bracket.upper

    f_lo = stream_eval(stream, lo)
    if f_lo <= 0.0:
        raise BracketFailure(
            f"stream for {case.id} not positive at the certified lower bound "
            f"u={lo} (value {f_lo:.3e})"
        )
    # Truncation error can push the sign change just past the oracle upper;
    # widen up to 4x the printed bound before giving up.
    theorem_upper = theorem_bounds(case, params).bracket(1).upper
    _, upper_u = bracket_in_u(case, theorem_upper, theorem_upper)
    cap = 4.0 * upper_u
    f_hi = stream_eval(stream, hi)
    while f_hi > 0.0:
        if hi >= cap:
            raise BracketFailure(
                f"no sign change for {case.id} in (0, {cap}] "
                f"(last value {f_hi:.3e} at u={hi})"
            )
        hi = min(hi * BRACKET_GROWTH, cap)
        f_hi = stream_eval(stream, hi)

    iterations = 0
    while hi - lo > tol * hi and iterations < MAX_BISECTIONS:
        mid = 0.5 * (lo + hi)
        if stream_eval(stream, mid) > 0.0:
            lo = mid
        else:
            hi = mid
        iterations += 1
    if hi - lo > tol * hi:
        raise NonConvergence(
            f"bisection for {case.id} stalled after {iterations} halvings"
        )

    u1 = 0.5 * (lo + hi)
    radius = case.radius_from_u(u1)
    residual = equation_residual(case, params, radius)
    return RadiusResult(case, params, radius, u1, residual, bracket,
                        iterations, stream.order)
