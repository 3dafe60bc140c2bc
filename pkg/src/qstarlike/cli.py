"""Batch driver producing verification tables over (case, nu, q) grids.

Every subcommand emits flat records with one fixed schema,

    case,nu,q,theorem,k,quantity,lower,upper,radius,residual,flags

as CSV (header always present) or a JSON array of objects with identical
keys.  Fields that do not apply to a subcommand are left empty (CSV) or
null (JSON).  Records are buffered and sorted by (case, nu, q, k, quantity)
before emission, so a given configuration always produces byte-identical
output.  Flags are comma-joined short codes forming a grep-able audit trail
of every display discrepancy (SIGN_NORM, TYPO_D2, TYPO_T2, TYPO_S1,
SCALE_TAG, ...).

Exit codes: 0 success; 1 argument error; 2 domain error under --strict;
3 convergence failure.  In the default mode domain problems only flag the
affected record.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from .bounds import theorem_bounds
from .classical import (TARGETS, classical_first_zeros, comparison_check,
                        limit_convergence_check)
from .errors import DomainError, QStarlikeError
from .euler_rayleigh import (PRINTED_ORDERS, er_bracket, newton_power_sums,
                             reconcile)
from .qseries import QDomainParams
from .radius import starlike_radius
from .series_core import CASE_ORDER, CASES, FunctionCase, coefficient_stream

COLUMNS = ("case", "nu", "q", "theorem", "k", "quantity", "lower", "upper",
           "radius", "residual", "flags")

SUBCOMMANDS = ("radius", "bounds", "sums", "reconcile", "limits", "compare",
               "table")

FLAG_DOMAIN_ERROR = "DOMAIN_ERROR"
FLAG_CONV_FAIL = "CONV_FAIL"
FLAG_OUTSIDE_BRACKET = "OUTSIDE_BRACKET"
FLAG_VIOLATION = "VIOLATION"


class CliArgumentError(QStarlikeError):
    """Raised instead of argparse's SystemExit so main can return 1."""


@dataclass
class RunConfig:
    """One parsed invocation."""

    subcommand: str
    cases: tuple[str, ...]
    nus: tuple[float, ...]
    qs: tuple[float, ...]
    order: int = 3
    tol: float = 1e-12
    fmt: str = "csv"
    output: str | None = None
    strict: bool = False

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise CliArgumentError(f"unknown subcommand {self.subcommand!r}")
        if self.subcommand != "compare" and not self.cases:
            raise CliArgumentError("case list must not be empty")
        if not self.nus or not self.qs:
            raise CliArgumentError("nu and q grids must not be empty")
        if not 0.0 < self.tol <= 1e-3:
            raise CliArgumentError(f"tol must lie in (0, 1e-3], got {self.tol}")
        if self.fmt not in ("csv", "json"):
            raise CliArgumentError(f"format must be csv or json, got {self.fmt}")
        if self.order < 1:
            raise CliArgumentError(f"k must be positive, got {self.order}")


@dataclass
class _RunState:
    domain_error: bool = False
    convergence_error: bool = False
    records: list[dict] = field(default_factory=list)

    def add(self, **fields) -> None:
        rec = {c: None for c in COLUMNS}
        rec["flags"] = ()
        rec.update(fields)
        self.records.append(rec)


def _quantity_label(case: FunctionCase) -> str:
    return "(r*)^2" if case.quantity == "squared_radius" else "r*"


def _quantity_bracket(case: FunctionCase, lower: float, upper: float) -> tuple[float, float]:
    """Oracle brackets live on u1; express them on the bracketed quantity."""
    if case.quantity == "radius" and case.parity == "even":
        return lower ** 0.5, upper ** 0.5
    return lower, upper


def _point_rows(config: RunConfig, state: _RunState, handler) -> None:
    for cid in config.cases:
        case = CASES[cid]
        for nu in config.nus:
            for q in config.qs:
                base = dict(case=case.id, nu=nu, q=q, theorem=case.theorem)
                try:
                    params = QDomainParams(nu, q)
                    case.check_domain(params)
                    handler(state, case, params, base)
                except DomainError:
                    state.domain_error = True
                    state.add(**base, flags=(FLAG_DOMAIN_ERROR,))
                except QStarlikeError as exc:
                    # convergence caps, bracket hunts, degenerate sums: the
                    # point is reported and the run keeps going
                    state.convergence_error = True
                    state.add(**base, flags=(FLAG_CONV_FAIL,
                                             type(exc).__name__.upper()))


def _handle_radius(config: RunConfig):
    def handler(state, case, params, base):
        res = starlike_radius(case, params, config.tol)
        lo, up = _quantity_bracket(case, res.bracket.lower, res.bracket.upper)
        state.add(**base, k=res.bracket.order, quantity=_quantity_label(case),
                  lower=lo, upper=up, radius=res.quantity_value,
                  residual=res.residual)
    return handler


def _handle_bounds(config: RunConfig):
    def handler(state, case, params, base):
        bset = theorem_bounds(case, params)
        res = starlike_radius(case, params, config.tol)
        for br in bset.brackets:
            state.add(**base, k=br.order, quantity=_quantity_label(case),
                      lower=br.lower, upper=br.upper,
                      radius=res.quantity_value, residual=res.residual,
                      flags=bset.flags)
    return handler


def _handle_sums(config: RunConfig):
    def handler(state, case, params, base):
        stream = coefficient_stream(case, params)
        if stream.order < config.order + 1:
            stream = coefficient_stream(case, params, n_terms=config.order + 1)
        sums = newton_power_sums(stream, config.order + 1)
        for k in range(1, config.order + 1):
            br = er_bracket(sums, k)
            lo, up = _quantity_bracket(case, br.lower, br.upper)
            state.add(**base, k=k, quantity=_quantity_label(case),
                      lower=lo, upper=up)
    return handler


def _handle_reconcile(config: RunConfig):
    def handler(state, case, params, base):
        order = min(config.order, PRINTED_ORDERS[case.id])
        report = reconcile(case, params, order)
        for row in report.rows:
            state.add(**base, k=row.order, quantity=f"power_sum_{row.order}",
                      lower=row.newton, upper=row.closed,
                      residual=row.printed_rel_diff, flags=row.flags)
    return handler


def _handle_table(config: RunConfig):
    def handler(state, case, params, base):
        bset = theorem_bounds(case, params)
        res = starlike_radius(case, params, config.tol)
        report = reconcile(case, params)
        flags = list(bset.flags)
        flags.extend(f for f in report.flags if f not in flags)
        br = bset.bracket(1)
        if not br.lower < res.quantity_value < br.upper:
            flags.append(FLAG_OUTSIDE_BRACKET)
        state.add(**base, k=1, quantity=_quantity_label(case),
                  lower=br.lower, upper=br.upper,
                  radius=res.quantity_value, residual=res.residual,
                  flags=tuple(flags))
    return handler


def _run_limits(config: RunConfig, state: _RunState) -> None:
    q_list = tuple(sorted(config.qs))
    zero_cache: dict[float, object] = {}
    for cid in config.cases:
        case = CASES[cid]
        for nu in config.nus:
            base = dict(case=case.id, nu=nu, theorem=case.theorem)
            try:
                if nu not in zero_cache:
                    zero_cache[nu] = classical_first_zeros(nu)
                report = limit_convergence_check(case, nu, q_list)
            except DomainError:
                state.domain_error = True
                state.add(**base, flags=(FLAG_DOMAIN_ERROR,))
                continue
            except QStarlikeError as exc:
                state.convergence_error = True
                state.add(**base, flags=(FLAG_CONV_FAIL,
                                         type(exc).__name__.upper()))
                continue
            zeros = zero_cache[nu]
            for row in report.rows:
                tag, scale = TARGETS[row.eq_id]
                state.add(**base, q=row.q, k=row.chain, quantity=row.eq_id,
                          lower=row.scaled_lower, upper=row.scaled_upper,
                          radius=zeros.target(tag) * scale,
                          residual=row.rel_err, flags=report.flags)


def _run_compare(config: RunConfig, state: _RunState) -> None:
    for row in comparison_check(tuple(config.nus)):
        state.add(case="", nu=row.nu, quantity=row.label,
                  lower=row.left, upper=row.right,
                  flags=() if row.holds else (FLAG_VIOLATION,))


def run(config: RunConfig) -> tuple[int, list[dict]]:
    """Execute one configuration; returns (exit_code, sorted records)."""
    state = _RunState()
    if config.subcommand == "compare":
        _run_compare(config, state)
    elif config.subcommand == "limits":
        _run_limits(config, state)
    else:
        handler = {
            "radius": _handle_radius,
            "bounds": _handle_bounds,
            "sums": _handle_sums,
            "reconcile": _handle_reconcile,
            "table": _handle_table,
        }[config.subcommand](config)
        _point_rows(config, state, handler)

    case_rank = {cid: i for i, cid in enumerate(CASE_ORDER)}
    state.records.sort(key=lambda r: (
        case_rank.get(r["case"], -1),
        r["nu"] if r["nu"] is not None else -1.0,
        r["q"] if r["q"] is not None else -1.0,
        r["k"] if r["k"] is not None else -1,
        r["quantity"] or "",
    ))
    code = 0
    if state.convergence_error:
        code = 3
    elif state.domain_error and config.strict:
        code = 2
    return code, state.records


def render_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        row = []
        for col in COLUMNS:
            val = rec[col]
            if col == "flags":
                row.append(",".join(val))
            elif val is None:
                row.append("")
            elif isinstance(val, float):
                row.append(repr(val))
            else:
                row.append(str(val))
        writer.writerow(row)
    return buf.getvalue()


def render_json(records: list[dict]) -> str:
    out = []
    for rec in records:
        obj = dict(rec)
        obj["flags"] = ",".join(rec["flags"])
        out.append(obj)
    return json.dumps(out, indent=2) + "\n"


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(",") if tok.strip())
    except ValueError as exc:
        raise CliArgumentError(f"could not parse {what} list {text!r}") from exc


def _parse_cases(text: str) -> tuple[str, ...]:
    if text.strip().lower() == "all":
        return CASE_ORDER
    out = []
    for tok in text.split(","):
        tok = tok.strip().upper()
        if not tok:
            continue
        if tok not in CASES:
            raise CliArgumentError(
                f"unknown case {tok!r}; expected one of {', '.join(CASE_ORDER)}")
        out.append(tok)
    return tuple(out)


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep exit code 1 for bad arguments
        raise CliArgumentError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="qstarlike",
                     description="Verification tables for the starlikeness "
                                 "radii of six normalized q-Bessel forms.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, doc in (
        ("radius", "computed radius with its oracle bracket"),
        ("bounds", "printed bound chains per case"),
        ("sums", "oracle power-sum brackets of increasing order"),
        ("reconcile", "closed forms against the coefficient oracle"),
        ("limits", "scaled bounds against the classical displays"),
        ("compare", "formula-level comparison inequalities"),
        ("table", "one verification row per grid point"),
    ):
        p = sub.add_parser(name, help=doc, description=doc)
        if name != "compare":
            p.add_argument("--case", default="all",
                           help="comma list of cases, or 'all'")
        if name == "compare":
            p.add_argument("--nu", default="0.25,0.5,1,2,5",
                           help="comma list of orders nu")
        else:
            p.add_argument("--nu", default="1", help="comma list of orders nu")
        if name == "limits":
            p.add_argument("--q", default="0.9,0.99,0.999",
                           help="increasing comma list of bases q")
        elif name != "compare":
            p.add_argument("--q", default="0.5", help="comma list of bases q")
        p.add_argument("--k", type=int, default=3, dest="order",
                       help="power-sum depth (sums/reconcile)")
        p.add_argument("--tol", type=float, default=1e-12,
                       help="relative width for root refinement")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--output", default=None,
                       help="output path (default: standard output)")
        p.add_argument("--strict", action="store_true",
                       help="exit 2 when any grid point is out of domain")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    sub = args.subcommand
    cases = _parse_cases(getattr(args, "case", "all")) if sub != "compare" else ()
    nus = _parse_floats(args.nu, "nu")
    qs = _parse_floats(getattr(args, "q", "0.5"), "q") if sub != "compare" else (0.5,)
    return RunConfig(subcommand=sub, cases=cases, nus=nus, qs=qs,
                     order=args.order, tol=args.tol, fmt=args.format,
                     output=args.output, strict=args.strict)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = config_from_args(args)
        code, records = run(config)
    except CliArgumentError as exc:
        print(f"qstarlike: error: {exc}", file=sys.stderr)
        return 1
    text = render_csv(records) if config.fmt == "csv" else render_json(records)
    if config.output is None:
        sys.stdout.write(text)
    else:
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
