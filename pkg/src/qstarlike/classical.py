"""Classical Bessel limit layer.

Holds the ten classical bracket displays the scaled q-bounds converge to,
computes the classical reference zeros by bisection on the ascending
series, verifies the q -> 1 convergence of the scaled bounds, and checks
the closing comparison claims as formula-level inequalities.

The family-3 displays are quarter/half-scale copies of the family-2 ones;
they are tagged as bounding the correspondingly scaled classical quantity
(the Hahn-Exton limit carries a doubled argument), and records touching
them carry a SCALE_TAG flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import theorem_bounds
from .errors import DomainError, NonConvergence
from .qseries import QDomainParams
from .series_core import FunctionCase, as_case

SERIES_TOL = 1e-17
FLAG_SCALE_TAG = "SCALE_TAG"

EQ_IDS = ("2.1", "2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9", "2.10", "2.11")

# What each display brackets, relative to the three computed reference
# quantities: the squared first zero of J', and the starlike radii of the
# g-form z^(1-nu) J(z) and the h-form z^(1-nu/2) J(sqrt z).
TARGETS = {
    "2.1": ("first_deriv_zero_sq", 1.0),
    "2.3": ("radius_g_form", 1.0),
    "2.4": ("radius_g_form", 1.0),
    "2.5": ("radius_h_form", 1.0),
    "2.6": ("radius_h_form", 1.0),
    "2.7": ("first_deriv_zero_sq", 0.25),
    "2.8": ("radius_g_form", 0.5),
    "2.9": ("radius_g_form", 0.5),
    "2.10": ("radius_h_form", 0.25),
    "2.11": ("radius_h_form", 0.25),
}


def classical_j_eval(nu: float, x: float, tol: float = SERIES_TOL) -> float:
    """Bessel function of the first kind by its ascending series."""
    return _weighted_series(nu, x, None, tol)


def _weighted_series(nu: float, x: float, shift: float | None, tol: float) -> float:
    """sum_k (-1)^k w_k (x/2)^(2k+nu) / (k! Gamma(k+nu+1)); w_k = 2k+nu-shift.

    With ``shift`` None the weights are 1 and this is J_nu(x); otherwise it
    is the combination x*J'(x) - shift*J(x).
    """
    if nu <= -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if x < 0.0:
        raise DomainError(f"argument must be nonnegative, got {x}")
    if x == 0.0:
        if nu > 0.0:
            return 0.0
        base = 1.0 / math.gamma(nu + 1.0)
        if shift is not None:
            base *= nu - shift
        return base if nu == 0.0 else math.copysign(math.inf, base)
    half = x / 2.0
    term = half ** nu / math.gamma(nu + 1.0)
    total = 0.0
    peak = abs(term)
    for k in range(1000):
        weighted = term if shift is None else term * (2 * k + nu - shift)
        total += weighted
        term *= -half * half / ((k + 1.0) * (k + nu + 1.0))
        peak = max(peak, abs(term))
        if abs(term) < tol * peak and k >= 2:
            return total
    raise NonConvergence(f"Bessel series at x={x} not converged")


def _first_root(f, start: float = 1e-4, step: float = 0.05,
                cap: float = 80.0) -> float:
    """First sign change of f on (0, cap], refined by bisection."""
    x0, f0 = start, f(start)
    x1 = x0 + step
    while x1 <= cap:
        f1 = f(x1)
        if f0 * f1 <= 0.0:
            lo, hi = x0, x1
            for _ in range(120):
                mid = 0.5 * (lo + hi)
                if f(lo) * f(mid) <= 0.0:
                    hi = mid
                else:
                    lo = mid
            return 0.5 * (lo + hi)
        x0, f0, x1 = x1, f1, x1 + step
    raise NonConvergence(f"no sign change found on (0, {cap}]")


@dataclass(frozen=True)
class ClassicalZeros:
    """Reference quantities entering the classical brackets."""

    nu: float
    first_deriv_zero: float     # first positive zero of J'; nan when nu <= 0
    radius_g_form: float        # first root of x*J' - (nu-1)*J
    radius_h_form: float        # squared first root of x*J' - (nu-2)*J

    def target(self, tag: str) -> float:
        if tag == "first_deriv_zero_sq":
            return self.first_deriv_zero ** 2
        if tag == "radius_g_form":
            return self.radius_g_form
        if tag == "radius_h_form":
            return self.radius_h_form
        raise DomainError(f"unknown target tag {tag!r}")


def classical_first_zeros(nu: float, tol: float = SERIES_TOL) -> ClassicalZeros:
    """Compute the three reference zeros by scan-and-bisect on the series."""
    if nu <= -1.0:
        raise DomainError(f"nu must exceed -1, got {nu}")
    if nu > 0.0:
        jp = _first_root(lambda x: _weighted_series(nu, x, 0.0, tol))
    else:
        jp = math.nan
    rg = _first_root(lambda x: _weighted_series(nu, x, nu - 1.0, tol))
    rh = _first_root(lambda x: _weighted_series(nu, x, nu - 2.0, tol)) ** 2
    return ClassicalZeros(nu, jp, rg, rh)


@dataclass(frozen=True)
class ClassicalBracket:
    eq_id: str
    nu: float
    lower: float
    upper: float
    target: str          # which reference quantity the display brackets
    scale: float         # factor applied to the reference quantity
    flags: tuple[str, ...]


def classical_bracket(eq_id: str, nu: float) -> ClassicalBracket:
    """Exact evaluation of one of the ten classical displays."""
    if eq_id not in EQ_IDS:
        raise DomainError(f"unknown bracket id {eq_id!r}; expected one of {EQ_IDS}")
    if eq_id in ("2.1", "2.7"):
        if nu <= 0.0:
            raise DomainError(f"bracket {eq_id} requires nu > 0, got {nu}")
    elif nu <= -1.0:
        raise DomainError(f"bracket {eq_id} requires nu > -1, got {nu}")
    lower, upper = _classical_display(eq_id, nu)
    target, scale = TARGETS[eq_id]
    flags = (FLAG_SCALE_TAG,) if scale != 1.0 else ()
    return ClassicalBracket(eq_id, nu, lower, upper, target, scale, flags)


def _classical_display(eq_id: str, nu: float) -> tuple[float, float]:
    if eq_id == "2.1":
        return (4 * nu * (nu + 1) / (nu + 2),
                4 * nu * (nu + 1) * (nu + 2) ** 2 / (nu ** 2 + 8 * nu + 8))
    if eq_id == "2.3":
        return (2 * math.sqrt((nu + 1) / 3),
                2 * math.sqrt(3 * (nu + 1) * (nu + 2) / (4 * nu + 13)))
    if eq_id == "2.4":
        return (2 * ((nu + 1) ** 2 * (nu + 2) / (4 * nu + 13)) ** 0.25,
                2 * math.sqrt((nu + 1) * (nu + 3) * (4 * nu + 13)
                              / (2 * (4 * nu ** 2 + 26 * nu + 49))))
    if eq_id == "2.5":
        return 2 * (nu + 1), 8 * (nu + 1) * (nu + 2) / (nu + 5)
    if eq_id == "2.6":
        return (4 * (nu + 1) * math.sqrt(nu + 2) / math.sqrt(nu + 5),
                4 * (nu + 1) * (nu + 3) * (nu + 5) / (nu ** 2 + 8 * nu + 23))
    if eq_id == "2.7":
        return (nu * (nu + 1) / (nu + 2),
                nu * (nu + 1) * (nu + 2) ** 2 / (nu ** 2 + 8 * nu + 8))
    if eq_id == "2.8":
        return (math.sqrt((nu + 1) / 3),
                math.sqrt(3 * (nu + 1) * (nu + 2) / (4 * nu + 13)))
    if eq_id == "2.9":
        return (((nu + 1) ** 2 * (nu + 2) / (4 * nu + 13)) ** 0.25,
                math.sqrt((nu + 1) * (nu + 3) * (4 * nu + 13)
                          / (2 * (4 * nu ** 2 + 26 * nu + 49))))
    if eq_id == "2.10":
        return (nu + 1) / 2, 2 * (nu + 1) * (nu + 2) / (nu + 5)
    # 2.11
    return ((nu + 1) * math.sqrt((nu + 2) / (nu + 5)),
            (nu + 1) * (nu + 3) * (nu + 5) / (nu ** 2 + 8 * nu + 23))


@dataclass(frozen=True)
class LimitRow:
    """Scaled q-bounds against the classical display, at one q."""

    chain: int
    eq_id: str
    q: float
    scaled_lower: float
    scaled_upper: float
    classical_lower: float
    classical_upper: float
    rel_err: float


@dataclass(frozen=True)
class LimitReport:
    case: FunctionCase
    nu: float
    rows: tuple[LimitRow, ...]
    flags: tuple[str, ...]

    def chain_errors(self, chain: int) -> list[float]:
        return [r.rel_err for r in self.rows if r.chain == chain]

    @property
    def converged(self) -> bool:
        """Errors strictly decreasing along q, final below 2 percent."""
        for chain in sorted({r.chain for r in self.rows}):
            errs = self.chain_errors(chain)
            if any(a <= b for a, b in zip(errs, errs[1:])):
                return False
            if errs[-1] >= 0.02:
                return False
        return True


def limit_convergence_check(case: FunctionCase | str, nu: float,
                            q_list: tuple[float, ...] = (0.9, 0.99, 0.999)
                            ) -> LimitReport:
    """Scaled theorem bounds along q_list against the classical displays."""
    case = as_case(case)
    if list(q_list) != sorted(q_list) or not q_list:
        raise DomainError("q_list must be a nonempty increasing sequence")
    power = case.limit_scale_power
    rows = []
    for chain, eq_id in enumerate(case.classical_eq_ids, start=1):
        cb = classical_bracket(eq_id, nu)
        for q in q_list:
            bound = theorem_bounds(case, QDomainParams(nu, q)).bracket(chain)
            scale = (1.0 - q) ** power
            slo, sup = bound.lower / scale, bound.upper / scale
            err = max(abs(slo - cb.lower) / cb.lower,
                      abs(sup - cb.upper) / cb.upper)
            rows.append(LimitRow(chain, eq_id, q, slo, sup,
                                 cb.lower, cb.upper, err))
    flags = (FLAG_SCALE_TAG,) if case.family == 3 else ()
    return LimitReport(case, nu, tuple(rows), flags)


@dataclass(frozen=True)
class ComparisonRow:
    """One formula-level inequality between a family-3 and family-2 display."""

    nu: float
    label: str
    left: float
    right: float

    @property
    def holds(self) -> bool:
        return self.left <= self.right


# (scaled display, original display) pairs from the closing comparison.
COMPARISON_PAIRS = (("2.7", "2.1"), ("2.8", "2.3"), ("2.9", "2.4"),
                    ("2.10", "2.5"), ("2.11", "2.6"))


def comparison_check(nu_grid: tuple[float, ...]) -> list[ComparisonRow]:
    """The ten pointwise inequalities, domain-intersected over nu_grid."""
    rows: list[ComparisonRow] = []
    for nu in nu_grid:
        for new, old in COMPARISON_PAIRS:
            if new == "2.7" and nu <= 0.0:
                continue
            nl, nup = _classical_display(new, nu)
            ol, oup = _classical_display(old, nu)
            rows.append(ComparisonRow(nu, f"LHS({new})<=LHS({old})", nl, ol))
            rows.append(ComparisonRow(nu, f"RHS({new})<=RHS({old})", nup, oup))
    return rows
