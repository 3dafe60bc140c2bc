"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

The verification grid is every case crossed with nu in {0.5, 1, 2, 5}
(plus nu = -0.5 for the g/h cases) and q in {0.1, 0.25, 0.5, 0.75, 0.9}.
"""

import time
from fractions import Fraction

from qstarlike import (CASES, CASE_ORDER, QDomainParams, classical_bracket,
                       classical_first_zeros, closed_form_sum,
                       coefficient_stream, comparison_check, er_bracket,
                       limit_convergence_check, newton_power_sums, reconcile,
                       starlike_radius, theorem_bounds)
from qstarlike.cli import RunConfig, render_csv, run

GRID_QS = (0.1, 0.25, 0.5, 0.75, 0.9)


def grid_nus(case_id):
    base = (0.5, 1.0, 2.0, 5.0)
    return base if CASES[case_id].form == "f" else base + (-0.5,)


def grid_points():
    for case_id in CASE_ORDER:
        for nu in grid_nus(case_id):
            for q in GRID_QS:
                yield case_id, nu, q


def report(criterion, name, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {criterion} ({name}): {status}")
    assert not failures, f"criterion {criterion}: {failures[:5]}"


def test_criterion_1_bracketing():
    started = time.time()
    failures = []
    for case_id, nu, q in grid_points():
        params = QDomainParams(nu, q)
        value = starlike_radius(case_id, params).quantity_value
        for bracket in theorem_bounds(case_id, params).brackets:
            margin = min(value - bracket.lower, bracket.upper - value) / value
            if margin <= 1e-6:
                failures.append((case_id, nu, q, bracket.order, margin))
    elapsed = time.time() - started
    if elapsed >= 10.0:
        failures.append(("runtime", elapsed))
    report(1, "bracketing", failures)


def test_criterion_2_oracle_equivalence():
    required_flag_sites = {("F2", 2): "TYPO_D2", ("H3", 1): "TYPO_S1",
                           ("H2", 2): "TYPO_T2"}
    failures = []
    for case_id, nu, q in grid_points():
        rep = reconcile(case_id, QDomainParams(nu, q))
        for row in rep.rows:
            if row.closed_rel_diff > 1e-10:
                failures.append(("match", case_id, nu, q, row.order,
                                 row.closed_rel_diff))
            site = (case_id, row.order)
            if site in required_flag_sites:
                if required_flag_sites[site] not in row.flags:
                    failures.append(("missing-flag", case_id, nu, q, row.order))
            elif any(f.startswith("TYPO") for f in row.flags):
                failures.append(("spurious-flag", case_id, nu, q, row.order))
    report(2, "oracle equivalence with flagged defect sites", failures)


def test_criterion_3_exact_spot_values():
    checks = [
        ("order-1 sum F2", closed_form_sum("F2", QDomainParams(1.0, 0.5), 1),
         Fraction(1, 2)),
        ("newton s2 F2",
         newton_power_sums(coefficient_stream("F2", QDomainParams(1.0, 0.5)),
                           2).order(2), Fraction(53, 252)),
        ("order-1 sum H2", closed_form_sum("H2", QDomainParams(0.0, 0.5), 1),
         Fraction(1, 1)),
        ("order-1 sum G3", closed_form_sum("G3", QDomainParams(0.0, 0.5), 1),
         Fraction(6, 1)),
        ("2.1 lower", classical_bracket("2.1", 1.0).lower, Fraction(8, 3)),
        ("2.1 upper", classical_bracket("2.1", 1.0).upper, Fraction(72, 17)),
        ("2.5 lower", classical_bracket("2.5", 0.0).lower, Fraction(2, 1)),
        ("2.5 upper", classical_bracket("2.5", 0.0).upper, Fraction(16, 5)),
    ]
    failures = [(name, got, float(want)) for name, got, want in checks
                if abs(got - float(want)) > 1e-14 * max(1.0, abs(float(want)))]
    report(3, "exact spot values", failures)


def test_criterion_4_classical_reproduction():
    failures = []
    jp_sq = classical_first_zeros(1.0).first_deriv_zero ** 2
    if not (8.0 / 3.0 < jp_sq < 72.0 / 17.0):
        failures.append(("containment", jp_sq))
    if abs(jp_sq - 3.38996) > 1e-4:
        failures.append(("value", jp_sq))
    r_h = classical_first_zeros(0.0).radius_h_form
    if not (2.0 < r_h < 16.0 / 5.0):
        failures.append(("h-form radius", r_h))
    report(4, "classical reproduction", failures)


def test_criterion_5_limit_convergence():
    failures = []
    for case_id in CASE_ORDER:
        for nu in (0.5, 1.0):
            rep = limit_convergence_check(case_id, nu)
            for chain in sorted({r.chain for r in rep.rows}):
                errs = rep.chain_errors(chain)
                if not all(a > b for a, b in zip(errs, errs[1:])):
                    failures.append(("not-decreasing", case_id, nu, chain, errs))
                if errs[-1] >= 0.02:
                    failures.append(("final-error", case_id, nu, chain, errs[-1]))
    report(5, "limit convergence", failures)


def test_criterion_6_chain_monotonicity():
    failures = []
    for case_id, nu, q in grid_points():
        stream = coefficient_stream(case_id, QDomainParams(nu, q))
        sums = newton_power_sums(stream, 4)
        brackets = [er_bracket(sums, k) for k in (1, 2, 3)]
        lowers = [b.lower for b in brackets]
        uppers = [b.upper for b in brackets]
        if not (lowers[0] <= lowers[1] <= lowers[2]):
            failures.append(("lower", case_id, nu, q, lowers))
        if not (uppers[0] >= uppers[1] >= uppers[2]):
            failures.append(("upper", case_id, nu, q, uppers))
        if not all(lo < up for lo in lowers for up in uppers):
            failures.append(("cross", case_id, nu, q))
    report(6, "power-sum chain monotonicity", failures)


def test_criterion_7_comparison_claims():
    rows = comparison_check((0.25, 0.5, 1.0, 2.0, 5.0))
    failures = [(r.nu, r.label, r.left, r.right) for r in rows if not r.holds]
    if len(rows) != 50:
        failures.append(("row-count", len(rows)))
    report(7, "comparison claims", failures)


def test_criterion_8_determinism():
    config = RunConfig("table", CASE_ORDER, (-0.5, 0.5, 1.0, 2.0, 5.0),
                       GRID_QS, tol=1e-12)
    first = render_csv(run(config)[1])
    second = render_csv(run(config)[1])
    failures = [] if first == second else [("csv outputs differ",)]
    report(8, "determinism", failures)
