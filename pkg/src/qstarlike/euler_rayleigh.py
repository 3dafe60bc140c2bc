"""Power sums of reciprocal stream zeros, two ways, and the brackets they give.

The authoritative route is the classical Newton recurrence driven by the
stream coefficients.  The closed forms printed alongside each bound family
are transcribed verbatim as a redundant cross-check; three of them carry
transcription defects (wrong sign and a missing squared factor in the
order-2 sums of the F2 and H2 families, and an order-1 display for H3 that
contradicts its own bound statement).  For those sites the corrected form
is stored and the reconcile report carries both values plus a flag.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _polys
from .errors import (DomainError, InsufficientCoefficients, NonPositiveSum,
                     UnsupportedOrder)
from .qseries import QDomainParams
from .series_core import CoefficientStream, FunctionCase, as_case

# Highest order with a printed closed form, per case.
PRINTED_ORDERS = {"F2": 2, "G2": 3, "H2": 2, "F3": 2, "G3": 3, "H3": 3}

# Sites where the printed display disagrees with the oracle in magnitude.
TYPO_FLAGS = {("F2", 2): "TYPO_D2", ("H2", 2): "TYPO_T2", ("H3", 1): "TYPO_S1"}

RECONCILE_FLAG_THRESHOLD = 1e-9

FLAG_SIGN_NORM = "SIGN_NORM"


@dataclass(frozen=True)
class PowerSums:
    """Sums s_k = sum_n u_n^(-k) over the stream zeros, k = 1..K."""

    case: FunctionCase | None
    params: QDomainParams | None
    values: tuple[float, ...]
    provenance: str  # "newton" | "closed_form"

    @property
    def max_order(self) -> int:
        return len(self.values)

    def order(self, k: int) -> float:
        if not 1 <= k <= len(self.values):
            raise InsufficientCoefficients(
                f"sum of order {k} not available (have 1..{len(self.values)})"
            )
        return self.values[k - 1]


@dataclass(frozen=True)
class BoundBracket:
    """An interval (lower, upper) certified to contain the first zero."""

    lower: float
    upper: float
    order: int
    source: str  # "euler_rayleigh_oracle" | "theorem_closed_form"
    theorem: int | None = None

    def __post_init__(self) -> None:
        if not 0.0 < self.lower < self.upper:
            raise NonPositiveSum(
                f"degenerate bracket ({self.lower}, {self.upper})"
            )

    def contains(self, x: float, margin: float = 0.0) -> bool:
        w = margin * x
        return self.lower + w < x < self.upper - w


def newton_power_sums(stream: CoefficientStream, order: int) -> PowerSums:
    """Power sums from the coefficients via Newton's recurrence.

    For p(u) = 1 + a_1 u + ... = prod (1 - u/u_n) the sums obey
    s_k = -k a_k - sum_{j<k} a_j s_(k-j).
    """
    if order < 1:
        raise DomainError(f"order must be positive, got {order}")
    if stream.order < order:
        raise InsufficientCoefficients(
            f"stream holds {stream.order} coefficients, need {order}"
        )
    a = stream.coeffs
    s: list[float] = []
    for k in range(1, order + 1):
        acc = -k * a[k]
        for j in range(1, k):
            acc -= a[j] * s[k - j - 1]
        s.append(acc)
    return PowerSums(stream.case, stream.params, tuple(s), "newton")


def closed_form_sum(case: FunctionCase | str, params: QDomainParams, k: int,
                    as_printed: bool = False) -> float:
    """Closed-form power sum of order k for the case.

    By default the stored, oracle-consistent form is returned (positive by
    construction).  ``as_printed=True`` evaluates the verbatim printed
    expression instead, which at the three defect sites differs in sign
    and/or magnitude.
    """
    case = as_case(case)
    case.check_domain(params)
    if not 1 <= k <= PRINTED_ORDERS[case.id]:
        raise UnsupportedOrder(
            f"case {case.id} prints orders 1..{PRINTED_ORDERS[case.id]}, got {k}"
        )
    if as_printed:
        return _printed_sum(case, params, k)
    if (case.id, k) in TYPO_FLAGS:
        return _corrected_sum(case, params, k)
    return _printed_sum(case, params, k)


def closed_power_sums(case: FunctionCase | str, params: QDomainParams,
                      order: int | None = None) -> PowerSums:
    """All printed-order closed-form sums bundled as a PowerSums."""
    case = as_case(case)
    kmax = PRINTED_ORDERS[case.id] if order is None else order
    values = tuple(closed_form_sum(case, params, k) for k in range(1, kmax + 1))
    return PowerSums(case, params, values, "closed_form")


def er_bracket(sums: PowerSums, k: int) -> BoundBracket:
    """Bracket s_k^(-1/k) < u_1 < s_k/s_(k+1) for the first zero."""
    sk = sums.order(k)
    sk1 = sums.order(k + 1)
    if sk <= 0.0 or sk1 <= 0.0:
        raise NonPositiveSum(
            f"power sums must be positive, got s_{k}={sk}, s_{k+1}={sk1}"
        )
    source = ("euler_rayleigh_oracle" if sums.provenance == "newton"
              else "theorem_closed_form")
    theorem = sums.case.theorem if sums.case is not None else None
    return BoundBracket(sk ** (-1.0 / k), sk / sk1, k, source, theorem)


@dataclass(frozen=True)
class ReconcileRow:
    """One order of the oracle-vs-closed-form comparison."""

    order: int
    newton: float
    closed: float          # stored (corrected where needed) form
    printed: float         # verbatim printed expression, sign and all
    closed_rel_diff: float
    printed_rel_diff: float  # |printed| against the oracle
    flags: tuple[str, ...]


@dataclass(frozen=True)
class ReconcileReport:
    case: FunctionCase
    params: QDomainParams
    rows: tuple[ReconcileRow, ...]

    @property
    def flags(self) -> tuple[str, ...]:
        out: list[str] = []
        for row in self.rows:
            out.extend(f for f in row.flags if f not in out)
        return tuple(out)


def reconcile(case: FunctionCase | str, params: QDomainParams,
              order: int | None = None) -> ReconcileReport:
    """Per-order diff between the Newton oracle and the printed closed forms.

    Discrepancies are data, not errors: any order where the printed value
    (after taking its magnitude) strays from the oracle by more than
    RECONCILE_FLAG_THRESHOLD relative is flagged, as is any printed value
    that comes out non-positive.
    """
    from .series_core import coefficient_stream

    case = as_case(case)
    kmax = PRINTED_ORDERS[case.id] if order is None else order
    if not 1 <= kmax <= PRINTED_ORDERS[case.id]:
        raise UnsupportedOrder(
            f"case {case.id} prints orders 1..{PRINTED_ORDERS[case.id]}, got {kmax}"
        )
    stream = coefficient_stream(case, params)
    oracle = newton_power_sums(stream, kmax)
    rows = []
    for k in range(1, kmax + 1):
        s = oracle.order(k)
        printed = closed_form_sum(case, params, k, as_printed=True)
        closed = closed_form_sum(case, params, k)
        flags: list[str] = []
        if printed <= 0.0:
            flags.append(FLAG_SIGN_NORM)
        printed_diff = abs(abs(printed) - s) / abs(s)
        if printed_diff > RECONCILE_FLAG_THRESHOLD:
            flags.append(TYPO_FLAGS.get((case.id, k), f"TYPO_{case.id}_K{k}"))
        rows.append(ReconcileRow(
            order=k,
            newton=s,
            closed=closed,
            printed=printed,
            closed_rel_diff=abs(closed - s) / abs(s),
            printed_rel_diff=printed_diff,
            flags=tuple(flags),
        ))
    return ReconcileReport(case, params, tuple(rows))


def _printed_sum(case: FunctionCase, params: QDomainParams, k: int) -> float:
    """Verbatim transcription of the printed power-sum displays."""
    nu, q = params.nu, params.q
    cid = case.id
    if cid == "F2":
        if k == 1:
            return (nu + 2) * q ** (nu + 1) / (4 * nu * (1 - q) * (1 - q ** (nu + 1)))
        head = _polys.f2_quadratic(params.nu, params.q)
        return q ** (2 * nu + 2) * head / (
            16 * nu ** 2 * (1 - q ** (nu + 1)) * (q ** (nu + 2) - 1)
            * (1 - q) ** 2 * (1 + q))
    if cid == "G2":
        n2 = _polys.eval_table("n2", params.nu, params.q)
        if k == 1:
            return 3 * q ** (nu + 1) / (4 * (q ** (nu + 1) - 1) * (q - 1))
        if k == 2:
            return -q ** (2 * nu + 2) * n2 / (
                16 * (q ** (nu + 1) - 1) ** 2 * (q ** (nu + 2) - 1)
                * (q - 1) ** 2 * (q + 1))
        return 3 * q ** (3 * (nu + 1)) * n2 / (
            64 * (q ** (nu + 1) - 1) ** 3 * (q ** (nu + 2) - 1)
            * (q ** (nu + 3) - 1) * (q - 1) ** 3
            * _polys.q1_star(params.nu, params.q))
    if cid == "H2":
        n3 = _polys.eval_table("n3", params.nu, params.q)
        if k == 1:
            return q ** (nu + 1) / (2 * (1 - q) * (1 - q ** (nu + 1)))
        return q ** (2 * nu + 2) * n3 / (
            8 * (q ** (nu + 1) - 1) * (1 - q ** (nu + 2))
            * (q - 1) ** 2 * (q + 1))
    if cid == "F3":
        if k == 1:
            return q * (nu + 2) / (nu * (1 - q) * (1 - q ** (nu + 1)))
        head = _polys.f3_quadratic(params.nu, params.q)
        return q ** 2 * head / (
            nu ** 2 * (1 - q) ** 2 * (1 + q)
            * (1 - q ** (nu + 1)) ** 2 * (1 - q ** (nu + 2)))
    if cid == "G3":
        m5 = _polys.eval_table("m5", params.nu, params.q)
        if k == 1:
            return 3 * q / ((1 - q) * (1 - q ** (nu + 1)))
        if k == 2:
            return q ** 2 * m5 / (
                (q ** (nu + 1) - 1) ** 2 * (q ** (nu + 2) - 1)
                * (q - 1) ** 2 * (q + 1))
        return 3 * q ** 3 * m5 / (
            (q ** (nu + 1) - 1) ** 3 * (q ** (nu + 2) - 1)
            * (q ** (nu + 3) - 1) * (q - 1) ** 3
            * _polys.q3_star(params.nu, params.q))
    # H3
    m6 = _polys.eval_table("m6", params.nu, params.q)
    if k == 1:
        return 6 * q ** 3 / (
            (q - 1) * (1 - q ** 2) * (1 - q ** (nu + 1)) * (1 - q ** (nu + 2)))
    if k == 2:
        return 2 * q ** 2 * m6 / (
            (q ** (nu + 1) - 1) ** 2 * (q ** (nu + 2) - 1)
            * (q - 1) ** 2 * (q + 1))
    return 2 * q ** 3 * m6 / (
        (q ** (nu + 1) - 1) ** 3 * (q ** (nu + 2) - 1)
        * (1 - q ** (nu + 3)) * (q - 1) ** 3
        * _polys.q4_star(params.nu, params.q))


def _corrected_sum(case: FunctionCase, params: QDomainParams, k: int) -> float:
    """Oracle-consistent replacements for the three defective displays.

    The two order-2 sites regain the square on the (1 - q^(nu+1)) factor and
    an all-positive factor convention; the H3 order-1 form is the one the
    bound statement itself implies (reciprocal of its printed lower bound).
    """
    nu, q = params.nu, params.q
    site = (case.id, k)
    if site == ("F2", 2):
        head = _polys.f2_quadratic(params.nu, params.q)
        return q ** (2 * nu + 2) * head / (
            16 * nu ** 2 * (1 - q) ** 2 * (1 + q)
            * (1 - q ** (nu + 1)) ** 2 * (1 - q ** (nu + 2)))
    if site == ("H2", 2):
        n3 = _polys.eval_table("n3", params.nu, params.q)
        return q ** (2 * nu + 2) * n3 / (
            8 * (1 - q ** (nu + 1)) ** 2 * (1 - q ** (nu + 2))
            * (1 - q) ** 2 * (1 + q))
    if site == ("H3", 1):
        return 2 * q / ((1 - q) * (1 - q ** (nu + 1)))
    raise UnsupportedOrder(f"no corrected form stored for {site}")
