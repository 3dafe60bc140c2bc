"""q-Pochhammer symbols and the normalization constant of the q-Bessel kernels.

Everything here is a pure function of its arguments; infinite products are
truncated once the multiplicative update is below tolerance, which for a
fixed input gives a deterministic factor count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NonConvergence

# Hard cap on infinite-product factors; factors are 1 - a*q^(k-1), so the
# update decays geometrically and only q -> 1 can get anywhere near this.
PRODUCT_FACTOR_CAP = 10**6

DEFAULT_PRODUCT_TOL = 1e-16


@dataclass(frozen=True)
class QDomainParams:
    """The pair (nu, q): order of the function and base of the q-deformation.

    Requires 0 < q < 1 strictly and nu > -1.  The F-type normalized forms
    additionally need nu > 0; that stricter check is enforced by consumers.
    """

    nu: float
    q: float

    def __post_init__(self) -> None:
        if not (0.0 < self.q < 1.0):
            raise DomainError(f"q must lie strictly in (0, 1), got {self.q}")
        if not self.nu > -1.0:
            raise DomainError(f"nu must exceed -1, got {self.nu}")


def q_pochhammer(a: float, params: QDomainParams, n: int) -> float:
    """Finite product prod_{k=1..n} (1 - a*q^(k-1)); equals 1 for n = 0."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    q = params.q
    prod = 1.0
    apow = a
    for _ in range(n):
        prod *= 1.0 - apow
        apow *= q
    return prod


def q_pochhammer_inf(a: float, params: QDomainParams,
                     tol: float = DEFAULT_PRODUCT_TOL) -> float:
    """Infinite product prod_{k>=1} (1 - a*q^(k-1)).

    Multiplies factors until the update 1 - a*q^(k-1) differs from 1 by less
    than ``tol``.  Raises NonConvergence if PRODUCT_FACTOR_CAP factors were
    not enough (q too close to 1 for the cap).
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    q = params.q
    prod = 1.0
    apow = a
    for _ in range(PRODUCT_FACTOR_CAP):
        if abs(apow) < tol:
            return prod
        prod *= 1.0 - apow
        apow *= q
    raise NonConvergence(
        f"product update still {abs(apow):.3e} after {PRODUCT_FACTOR_CAP} factors"
    )


def norm_constant(params: QDomainParams, tol: float = DEFAULT_PRODUCT_TOL) -> float:
    """Normalization constant (q;q)_inf / (q^(nu+1);q)_inf, strictly positive.

    Evaluated as one product of factor ratios (1-q^k)/(1-q^(nu+k)); the two
    separate products underflow for q near 1 while their ratio stays finite.
    """
    if tol <= 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    nu, q = params.nu, params.q
    prod = 1.0
    qk = q
    qnuk = q ** (nu + 1.0)
    for _ in range(PRODUCT_FACTOR_CAP):
        if qk < tol and qnuk < tol:
            return prod
        prod *= (1.0 - qk) / (1.0 - qnuk)
        qk *= q
        qnuk *= q
    raise NonConvergence(
        f"ratio product still updating after {PRODUCT_FACTOR_CAP} factors"
    )
