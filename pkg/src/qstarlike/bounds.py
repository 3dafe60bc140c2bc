"""Explicit lower/upper bounds for the six bound families (1..6).

The displays are transcribed verbatim.  Any bracket side that evaluates
non-positive (the family-1 upper display has an odd count of negative
factors) is replaced by its magnitude and flagged SIGN_NORM; the magnitudes
of every display were checked against the power-sum oracle, so no further
correction is applied here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _polys
from .errors import DomainError
from .euler_rayleigh import FLAG_SIGN_NORM, BoundBracket
from .qseries import QDomainParams
from .series_core import FunctionCase, as_case

HELPER_NAMES = ("q1s", "q2s", "q3s", "q4s", "a", "b", "th3c", "th3d", "s", "r")

_HELPER_DISPATCH = {
    "q1s": _polys.q1_star,
    "q2s": _polys.q2_star,
    "q3s": _polys.q3_star,
    "q4s": _polys.q4_star,
}

# Helper polynomials entering each family's second-chain upper bound.
_CASE_HELPERS = {
    "F2": (), "F3": (),
    "G2": ("q1s", "a", "b"),
    "H2": ("q2s", "th3c", "th3d"),
    "G3": ("q3s", "s", "r"),
    "H3": ("q4s",),
}


def helper_poly(name: str, params: QDomainParams, method: str = "direct") -> float:
    """Literal evaluation of one named helper polynomial.

    ``method`` selects direct power evaluation or the redundant grouped
    Horner path used to guard the transcription.
    """
    if name in _HELPER_DISPATCH:
        return _HELPER_DISPATCH[name](params.nu, params.q, method)
    if name in HELPER_NAMES:
        return _polys.eval_table(name, params.nu, params.q, method)
    raise DomainError(f"unknown helper {name!r}; expected one of {HELPER_NAMES}")


@dataclass(frozen=True)
class TheoremBoundSet:
    """All printed brackets for one case at one parameter point.

    Families 1 and 4 bracket the squared radius with a single chain;
    families 2, 3, 5, 6 bracket the radius itself with two chains.
    """

    theorem: int
    case: FunctionCase
    params: QDomainParams
    quantity: str  # "squared_radius" | "radius"
    brackets: tuple[BoundBracket, ...]
    helpers: dict[str, float]
    flags: tuple[str, ...]

    def bracket(self, order: int) -> BoundBracket:
        for br in self.brackets:
            if br.order == order:
                return br
        raise DomainError(f"family {self.theorem} has no order-{order} bracket")


def bracket_in_u(case: FunctionCase | str, lower: float, upper: float) -> tuple[float, float]:
    """Map a bracket on the case's bracketed quantity to the reduced variable."""
    case = as_case(case)
    if case.quantity == "radius" and case.parity == "even":
        return lower * lower, upper * upper
    return lower, upper


def theorem_bounds(case: FunctionCase | str, params: QDomainParams) -> TheoremBoundSet:
    """Evaluate the case's printed bound displays with sign normalization."""
    case = as_case(case)
    case.check_domain(params)
    raw = _raw_displays(case, params)
    flags: list[str] = []
    brackets = []
    for order, lo, up in raw:
        if lo <= 0.0 or up <= 0.0:
            if FLAG_SIGN_NORM not in flags:
                flags.append(FLAG_SIGN_NORM)
            lo, up = abs(lo), abs(up)
        brackets.append(BoundBracket(lo, up, order, "theorem_closed_form",
                                     case.theorem))
    helpers = {name: helper_poly(name, params) for name in _CASE_HELPERS[case.id]}
    return TheoremBoundSet(case.theorem, case, params, case.quantity,
                           tuple(brackets), helpers, tuple(flags))


def _raw_displays(case: FunctionCase, params: QDomainParams):
    """Literal bound displays as (order, lower, upper) triples."""
    nu, q = params.nu, params.q
    cid = case.id
    if cid == "F2":
        lo = 4 * nu * (q ** (nu + 1) - 1) * (q - 1) / (q ** (nu + 1) * (nu + 2))
        head = _polys.f2_quadratic(nu, q)
        up = (4 * nu * (nu + 2) * (q ** (nu + 1) - 1) * (q ** (nu + 2) - 1)
              * (q ** 2 - 1) / (q ** (nu + 1) * head))
        return [(1, lo, up)]
    if cid == "G2":
        n2 = _polys.eval_table("n2", nu, q)
        lo1 = 2 * _root((q ** (nu + 1) - 1) * (q - 1) / (3 * q ** (nu + 1)), 2)
        up1 = 2 * _root(3 * (q ** (nu + 1) - 1) * (q ** (nu + 2) - 1)
                        * (1 - q ** 2) / (q ** (nu + 1) * n2), 2)
        lo2 = 2 * _root((q ** (nu + 1) - 1) ** 2 * (1 - q ** (nu + 2))
                        * (q - 1) ** 2 * (q + 1) / (q ** (2 * nu + 2) * n2), 4)
        up2 = (2.0 / 3.0) * _root(
            3 * (1 - q ** (nu + 1)) * (q ** (nu + 3) - 1) * (q - 1)
            / ((q + 1) * q ** (nu + 1)) * _polys.q1_star(nu, q), 2)
        return [(1, lo1, up1), (2, lo2, up2)]
    if cid == "H2":
        n3 = _polys.eval_table("n3", nu, q)
        lo1 = 2 * (1 - q) * (1 - q ** (nu + 1)) / q ** (nu + 1)
        up1 = (4 * (q ** (nu + 1) - 1) * (q ** (nu + 2) - 1) * (1 - q ** 2)
               / (q ** (nu + 1) * n3))
        lo2 = _root(8 * (q ** (nu + 1) - 1) ** 2 * (1 - q ** (nu + 2))
                    * (q - 1) ** 2 * (q + 1) / (q ** (2 * nu + 2) * n3), 2)
        up2 = (4 * (q ** (nu + 1) - 1) * (q ** (nu + 3) - 1) * (q ** 3 - 1)
               / q ** (nu + 1) * _polys.q2_star(nu, q))
        return [(1, lo1, up1), (2, lo2, up2)]
    if cid == "F3":
        lo = nu * (1 - q) * (1 - q ** (nu + 1)) / (q * (nu + 2))
        head = _polys.f3_quadratic(nu, q)
        up = (nu * (nu + 2) * (1 - q ** 2) * (1 - q ** (nu + 1))
              * (1 - q ** (nu + 2)) / (q * head))
        return [(1, lo, up)]
    if cid == "G3":
        m5 = _polys.eval_table("m5", nu, q)
        lo1 = _root((1 - q) * (1 - q ** (nu + 1)) / (3 * q), 2)
        up1 = _root(3 * (q ** (nu + 1) - 1) * (q ** (nu + 2) - 1)
                    * (q ** 2 - 1) / (q * m5), 2)
        lo2 = _root((q ** (nu + 1) - 1) ** 2 * (q - 1) ** 2
                    * (q ** (nu + 2) - 1) * (q + 1) / (q ** 2 * m5), 4)
        up2 = _root((q - 1) * (q ** (nu + 1) - 1) * (q ** (nu + 3) - 1)
                    / (3 * q * (q + 1)) * _polys.q3_star(nu, q), 2)
        return [(1, lo1, up1), (2, lo2, up2)]
    # H3
    m6 = _polys.eval_table("m6", nu, q)
    lo1 = (1 - q) * (1 - q ** (nu + 1)) / (2 * q)
    up1 = ((q ** 2 - 1) * (q ** (nu + 1) - 1) * (q ** (nu + 2) - 1)
           / (q * m6))
    lo2 = ((q - 1) * (q ** (nu + 1) - 1) / (2 * q)
           * _root(2 * (q ** (nu + 2) - 1) * (q + 1) / m6, 2))
    up2 = ((q ** (nu + 1) - 1) * (q ** (nu + 3) - 1) * (1 - q)
           / (q * (q + 1)) * _polys.q4_star(nu, q))
    return [(1, lo1, up1), (2, lo2, up2)]


def _root(x: float, p: int) -> float:
    """Real p-th root carrying the sign through, so sign normalization can
    act on the assembled display value rather than fail inside sqrt."""
    return math.copysign(abs(x) ** (1.0 / p), x)
