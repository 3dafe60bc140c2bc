"""Coefficient streams and pointwise evaluation of the q-Bessel kernels.

Six normalized forms are supported, identified as F2, G2, H2 (Jackson
weights q^(n(n+nu))) and F3, G3, H3 (Hahn-Exton weights q^(n(n+1)/2)).
Each has an associated entire function -- the derivative of the normalized
form, divided through so the constant term is 1 -- whose smallest positive
zero determines the radius of starlikeness.  Streams hold the Maclaurin
coefficients of that entire function in the reduced variable u:

    u = z^2 for the even cases (F, G),   u = z for the plain cases (H),

so every stream has the product shape prod_n (1 - u/u_n) with positive
zeros u_n, which is what the power-sum oracle and the root finder consume.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import BranchError, DomainError, NonConvergence, TailTooLarge
from .qseries import QDomainParams, norm_constant

DEFAULT_MAX_TERMS = 500
ENV_MAX_TERMS = "QSTARLIKE_MAX_TERMS"


def max_series_terms() -> int:
    """Series term cap; overridable through the environment."""
    raw = os.environ.get(ENV_MAX_TERMS)
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        value = int(raw)
    except ValueError as exc:
        raise DomainError(f"{ENV_MAX_TERMS} must be an integer, got {raw!r}") from exc
    if value < 8:
        raise DomainError(f"{ENV_MAX_TERMS} must be at least 8, got {value}")
    return value


@dataclass(frozen=True)
class FunctionCase:
    """One of the six normalized forms and its conventions.

    ``family`` selects the term weights (2 = Jackson, 3 = Hahn-Exton),
    ``form`` the normalization ('f': nu-th root, 'g': z^(1-nu) factor,
    'h': z^(1-nu/2) factor with sqrt argument), and ``theorem`` the bound
    family (1..6) whose brackets apply to the case.
    """

    id: str
    family: int
    form: str
    theorem: int

    @property
    def parity(self) -> str:
        """'even' when the stream variable is u = z^2, 'plain' for u = z."""
        return "plain" if self.form == "h" else "even"

    @property
    def min_nu(self) -> float:
        """Exclusive lower bound on nu for this case."""
        return 0.0 if self.form == "f" else -1.0

    @property
    def quantity(self) -> str:
        """Which quantity the theorem brackets: the radius or its square."""
        return "squared_radius" if self.form == "f" else "radius"

    @property
    def limit_scale_power(self) -> int:
        """Power s such that bound/(1-q)^s converges to the classical value."""
        return 1 if self.form == "g" else 2

    @property
    def classical_eq_ids(self) -> tuple[str, ...]:
        """Classical bracket ids matched by the scaled q -> 1 limit, per chain."""
        table = {
            "F2": ("2.1",), "G2": ("2.3", "2.4"), "H2": ("2.5", "2.6"),
            "F3": ("2.7",), "G3": ("2.8", "2.9"), "H3": ("2.10", "2.11"),
        }
        return table[self.id]

    def shift_constant(self, nu: float) -> float:
        """Constant c in the radius equation r*J' - c*J = 0."""
        if self.form == "f":
            return 0.0
        if self.form == "g":
            return nu - 1.0
        return nu - 2.0

    def check_domain(self, params: QDomainParams) -> None:
        if not params.nu > self.min_nu:
            raise DomainError(
                f"case {self.id} requires nu > {self.min_nu}, got {params.nu}"
            )

    def radius_from_u(self, u: float) -> float:
        """Radius of starlikeness from the first stream zero u1."""
        return math.sqrt(u) if self.parity == "even" else u

    def u_from_radius(self, r: float) -> float:
        return r * r if self.parity == "even" else r


CASES: dict[str, FunctionCase] = {
    "F2": FunctionCase("F2", 2, "f", 1),
    "G2": FunctionCase("G2", 2, "g", 2),
    "H2": FunctionCase("H2", 2, "h", 3),
    "F3": FunctionCase("F3", 3, "f", 4),
    "G3": FunctionCase("G3", 3, "g", 5),
    "H3": FunctionCase("H3", 3, "h", 6),
}

CASE_ORDER = tuple(CASES)


def as_case(case: "FunctionCase | str") -> FunctionCase:
    if isinstance(case, FunctionCase):
        return case
    try:
        return CASES[case]
    except KeyError:
        raise DomainError(f"unknown case {case!r}; expected one of {CASE_ORDER}") from None


@dataclass(frozen=True)
class CoefficientStream:
    """Truncated Maclaurin coefficients a_0..a_N in the reduced variable.

    a_0 = 1 and the signs alternate; ``radius_hint`` is the u-range the
    truncation was sized for (about twice the first zero) and ``tail_bound``
    an upper estimate of the dropped tail at that range.
    """

    coeffs: tuple[float, ...]
    case: FunctionCase | None = None
    params: QDomainParams | None = None
    tail_bound: float = 0.0
    radius_hint: float = math.inf

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def tail_at(self, u: float) -> float:
        """Crude tail estimate at |u|: twice the last kept term."""
        n = self.order
        last = abs(self.coeffs[n])
        if u == 0.0 or last == 0.0:
            return 0.0
        # log form avoids overflow of |u|^n when the zero scale is large
        lt = math.log(last) + n * math.log(abs(u))
        return math.inf if lt > 700.0 else 2.0 * math.exp(lt)


def _coeff_ratio(case: FunctionCase, params: QDomainParams, n: int) -> float:
    """Exact ratio a_{n+1}/a_n of consecutive stream coefficients."""
    nu, q = params.nu, params.q
    if case.form == "f":
        weight = (2 * n + nu + 2.0) / (2 * n + nu)
    elif case.form == "g":
        weight = (2 * n + 3.0) / (2 * n + 1.0)
    else:
        weight = (n + 2.0) / (n + 1.0)
    poch = (1.0 - q ** (n + 1.0)) * (1.0 - q ** (nu + n + 1.0))
    if case.family == 2:
        return -weight * q ** (2 * n + nu + 1.0) / (4.0 * poch)
    return -weight * q ** (n + 1.0) / poch


def coefficient_stream(case: FunctionCase | str, params: QDomainParams,
                       n_terms: int | None = None) -> CoefficientStream:
    """Build the stream for ``case`` at ``params``.

    With ``n_terms`` the stream holds exactly coefficients a_0..a_N; otherwise
    it grows until the dropped terms are negligible over u in [0, R] with R
    set to twice the first-order power-sum bracket upper s1/s2 (equal to the
    theorem upper bound for the first zero), capped at max_series_terms().
    """
    case = as_case(case)
    case.check_domain(params)
    if n_terms is not None and n_terms < 2:
        raise DomainError(f"n_terms must be at least 2, got {n_terms}")

    coeffs = [1.0]
    for n in range(2):
        coeffs.append(coeffs[-1] * _coeff_ratio(case, params, n))
    s1 = -coeffs[1]
    s2 = coeffs[1] * coeffs[1] - 2.0 * coeffs[2]
    radius_hint = 2.0 * s1 / s2  # twice the k=1 upper bracket for u1

    cap = max_series_terms()
    target = n_terms if n_terms is not None else cap
    # |a_n| * R^n tracked incrementally; direct R**n can overflow when the
    # first zero is large even though the product stays tiny.
    scaled = abs(coeffs[2]) * radius_hint * radius_hint
    scaled_max = max(1.0, abs(coeffs[1]) * radius_hint, scaled)
    quiet = 0
    n = 2
    while n < target:
        ratio = _coeff_ratio(case, params, n)
        coeffs.append(coeffs[-1] * ratio)
        scaled *= abs(ratio) * radius_hint
        n += 1
        scaled_max = max(scaled_max, scaled)
        if n_terms is None:
            quiet = quiet + 1 if scaled < 1e-17 * scaled_max else 0
            if quiet >= 2 and n >= 8:
                break
    else:
        if n_terms is None:
            raise NonConvergence(
                f"stream for {case.id} not converged within {cap} terms"
            )

    tail = 2.0 * scaled * abs(_coeff_ratio(case, params, n)) * radius_hint
    return CoefficientStream(tuple(coeffs), case, params, tail, radius_hint)


def stream_eval(stream: CoefficientStream, u: float, tol: float = 1e-9) -> float:
    """Evaluate the truncated stream at u by nested multiplication."""
    tail = stream.tail_at(u)
    if tail > tol:
        raise TailTooLarge(
            f"tail estimate {tail:.3e} at u={u} exceeds tolerance {tol:.1e}"
        )
    acc = 0.0
    for c in reversed(stream.coeffs):
        acc = acc * u + c
    return acc


def _q_bessel_series(z: float, params: QDomainParams, family: int,
                     shift: float | None, tol: float) -> float:
    """Weighted series sum_n (-1)^n w_n x^(2n+nu) q^(e_n) / pochhammers.

    x = z/2 for family 2 and x = z for family 3; w_n = 1 when ``shift`` is
    None, else w_n = 2n + nu - shift (the radius-equation combination
    z*J' - shift*J).  Includes the 1/c_nu(q) prefactor of the function.
    """
    nu, q = params.nu, params.q
    if z < 0.0:
        raise DomainError(f"argument must be nonnegative, got {z}")
    pref = 1.0 / norm_constant(params, min(tol, 1e-16))
    if z == 0.0:
        if nu > 0.0:
            return 0.0
        base = pref if shift is None else pref * (nu - shift)
        return base if nu == 0.0 else math.copysign(math.inf, base)
    x = z / 2.0 if family == 2 else z
    term = x ** nu  # n = 0 term before the weight
    total = 0.0
    peak = abs(term)
    quiet = 0
    cap = max_series_terms()
    for n in range(cap):
        weighted = term if shift is None else term * (2 * n + nu - shift)
        total += weighted
        expo = (2 * n + nu + 1.0) if family == 2 else (n + 1.0)
        term *= -x * x * q ** expo / ((1.0 - q ** (n + 1.0)) * (1.0 - q ** (nu + n + 1.0)))
        peak = max(peak, abs(term))
        quiet = quiet + 1 if abs(term) < tol * peak else 0
        if quiet >= 2 and n >= 2:
            return pref * total
    raise NonConvergence(f"series at z={z} not converged within {cap} terms")


def jackson_j2(z: float, params: QDomainParams, tol: float = 1e-15) -> float:
    """Second Jackson q-Bessel function at real z >= 0."""
    return _q_bessel_series(z, params, 2, None, tol)


def hahn_exton_j3(z: float, params: QDomainParams, tol: float = 1e-15) -> float:
    """Hahn-Exton q-Bessel function at real z >= 0."""
    return _q_bessel_series(z, params, 3, None, tol)


def radius_equation_lhs(case: FunctionCase | str, params: QDomainParams,
                        w: float, tol: float = 1e-15) -> float:
    """Value of w*J'(w) - c*J(w) for the case's family and shift c."""
    case = as_case(case)
    return _q_bessel_series(w, params, case.family,
                            case.shift_constant(params.nu), tol)


def normalized_eval(case: FunctionCase | str, params: QDomainParams,
                    z: float, tol: float = 1e-15) -> float:
    """Value of the normalized form at z; behaves like z + O(z^2) near 0.

    The f-forms take the positive real nu-th root, which only exists while
    the radicand is positive (before the first zero of the base series);
    outside that interval BranchError is raised.
    """
    case = as_case(case)
    case.check_domain(params)
    if z < 0.0:
        raise DomainError(f"argument must be nonnegative, got {z}")
    if z == 0.0:
        return 0.0
    u = case.u_from_radius(z)
    base = _base_series_value(case, params, u, tol)
    if case.form == "f":
        if base <= 0.0:
            raise BranchError(
                f"nu-th root of non-positive value at z={z} (base={base:.3e})"
            )
        return z * base ** (1.0 / params.nu)
    return z * base


def _base_series_value(case: FunctionCase, params: QDomainParams,
                       u: float, tol: float) -> float:
    nu, q = params.nu, params.q
    term = 1.0
    total = 0.0
    peak = 1.0
    quiet = 0
    cap = max_series_terms()
    for n in range(cap):
        total += term
        poch = (1.0 - q ** (n + 1.0)) * (1.0 - q ** (nu + n + 1.0))
        if case.family == 2:
            term *= -u * q ** (2 * n + nu + 1.0) / (4.0 * poch)
        else:
            term *= -u * q ** (n + 1.0) / poch
        peak = max(peak, abs(term))
        quiet = quiet + 1 if abs(term) < tol * peak else 0
        if quiet >= 2 and n >= 2:
            return total
    raise NonConvergence(f"base series at u={u} not converged within {cap} terms")
