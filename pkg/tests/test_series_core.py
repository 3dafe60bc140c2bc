import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qstarlike import (CASES, CASE_ORDER, BranchError, CoefficientStream,
                       DomainError, NonConvergence, QDomainParams, TailTooLarge,
                       coefficient_stream, hahn_exton_j3, jackson_j2,
                       norm_constant, normalized_eval, q_pochhammer,
                       stream_eval)
from qstarlike.series_core import max_series_terms

# Frozen from a 40-digit independent summation of the defining series.
J2_AT_01_NU0_QHALF = 0.9950027774943374
J3_AT_02_NU1_QHALF = 0.3789897700427469
J0_AT_2 = 0.2238907791412357


def direct_coefficient(case_id, nu, q, n):
    """Stream coefficient from the printed formula, via explicit products."""
    p = QDomainParams(nu, q)
    poch = q_pochhammer(q, p, n) * q_pochhammer(q ** (nu + 1), p, n)
    if case_id == "F2":
        return (-1) ** n * (2 * n + nu) * q ** (n * (n + nu)) / (nu * 4 ** n * poch)
    if case_id == "G2":
        return (-1) ** n * (2 * n + 1) * q ** (n * (n + nu)) / (4 ** n * poch)
    if case_id == "H2":
        return (-1) ** n * (n + 1) * q ** (n * (n + nu)) / (4 ** n * poch)
    if case_id == "F3":
        return (-1) ** n * (2 * n + nu) * q ** (n * (n + 1) / 2) / (nu * poch)
    if case_id == "G3":
        return (-1) ** n * (2 * n + 1) * q ** (n * (n + 1) / 2) / poch
    return (-1) ** n * (n + 1) * q ** (n * (n + 1) / 2) / poch


def test_f2_leading_coefficients_exact():
    st_ = coefficient_stream("F2", QDomainParams(1.0, 0.5), n_terms=2)
    assert st_.coeffs[0] == 1.0
    assert st_.coeffs[1] == pytest.approx(-0.5, rel=1e-15)
    assert st_.coeffs[2] == pytest.approx(5.0 / 252.0, rel=1e-14)


def test_g3_and_h2_first_coefficients():
    g3 = coefficient_stream("G3", QDomainParams(0.0, 0.5), n_terms=2)
    assert g3.coeffs[1] == pytest.approx(-6.0, rel=1e-14)
    h2 = coefficient_stream("H2", QDomainParams(0.0, 0.5), n_terms=2)
    assert h2.coeffs[1] == pytest.approx(-1.0, rel=1e-14)


@pytest.mark.parametrize("case_id", CASE_ORDER)
def test_recurrence_matches_direct_formula(case_id):
    nu, q = 0.75, 0.35
    stream = coefficient_stream(case_id, QDomainParams(nu, q), n_terms=10)
    for n in range(11):
        assert stream.coeffs[n] == pytest.approx(
            direct_coefficient(case_id, nu, q, n), rel=1e-13)


@given(case_id=st.sampled_from(CASE_ORDER),
       nu=st.floats(0.1, 5.0), q=st.floats(0.05, 0.9))
@settings(max_examples=100, deadline=None)
def test_signs_alternate(case_id, nu, q):
    stream = coefficient_stream(case_id, QDomainParams(nu, q))
    assert stream.coeffs[0] == 1.0
    for n, c in enumerate(stream.coeffs):
        if c != 0.0:
            assert math.copysign(1.0, c) == (-1.0) ** n


@pytest.mark.parametrize("case_id", CASE_ORDER)
@pytest.mark.parametrize("q", [0.1, 0.5, 0.9])
def test_tail_bound_tiny(case_id, q):
    stream = coefficient_stream(case_id, QDomainParams(1.0, q))
    assert stream.tail_bound < 1e-15 * max(abs(c) for c in stream.coeffs)


def test_stream_eval_at_zero_is_one():
    stream = coefficient_stream("G2", QDomainParams(0.0, 0.5))
    assert stream_eval(stream, 0.0) == 1.0


def test_stream_eval_constructed_root():
    # (1 - u/2)(1 - u/3) = 1 - 5u/6 + u^2/6 vanishes at u = 2
    stream = CoefficientStream((1.0, -5.0 / 6.0, 1.0 / 6.0))
    assert stream_eval(stream, 2.0, tol=math.inf) == pytest.approx(0.0, abs=1e-15)


def test_stream_positive_at_lower_bound():
    # first-order bracket lower bound 2 sits below the first zero
    stream = coefficient_stream("F2", QDomainParams(1.0, 0.5))
    assert stream_eval(stream, 2.0) > 0.0


def test_stream_eval_tail_guard():
    stream = coefficient_stream("F2", QDomainParams(1.0, 0.5))
    with pytest.raises(TailTooLarge):
        stream_eval(stream, 80.0 * stream.radius_hint, tol=1e-12)


def test_auto_truncation_within_cap():
    for q in (0.1, 0.5, 0.9):
        stream = coefficient_stream("H3", QDomainParams(5.0, q))
        assert stream.order <= max_series_terms()


def test_n_terms_too_small_rejected():
    with pytest.raises(DomainError):
        coefficient_stream("G2", QDomainParams(0.0, 0.5), n_terms=1)


def test_env_cap_validation(monkeypatch):
    monkeypatch.setenv("QSTARLIKE_MAX_TERMS", "4")
    with pytest.raises(DomainError):
        max_series_terms()
    monkeypatch.setenv("QSTARLIKE_MAX_TERMS", "not-a-number")
    with pytest.raises(DomainError):
        max_series_terms()
    monkeypatch.setenv("QSTARLIKE_MAX_TERMS", "64")
    assert max_series_terms() == 64


def test_env_cap_forces_nonconvergence(monkeypatch):
    monkeypatch.setenv("QSTARLIKE_MAX_TERMS", "8")
    with pytest.raises(NonConvergence):
        coefficient_stream("G2", QDomainParams(0.0, 0.9))


def test_jackson_at_zero():
    assert jackson_j2(0.0, QDomainParams(1.0, 0.5)) == 0.0
    assert jackson_j2(0.0, QDomainParams(0.0, 0.5)) == pytest.approx(1.0, rel=1e-14)


def test_jackson_small_argument_value():
    got = jackson_j2(0.1, QDomainParams(0.0, 0.5))
    assert got == pytest.approx(J2_AT_01_NU0_QHALF, rel=1e-14)


def test_hahn_exton_at_zero():
    assert hahn_exton_j3(0.0, QDomainParams(0.5, 0.3)) == 0.0


def test_hahn_exton_redundant_path():
    nu, q = 1.0, 0.5
    p = QDomainParams(nu, q)
    got = hahn_exton_j3(0.2, p)
    assert got == pytest.approx(J3_AT_02_NU1_QHALF, rel=1e-14)
    # independent summation straight from q_pochhammer
    total = 0.0
    for n in range(40):
        total += ((-1) ** n * 0.2 ** (2 * n + nu) * q ** (n * (n + 1) / 2)
                  / (q_pochhammer(q, p, n) * q_pochhammer(q ** (nu + 1), p, n)))
    assert got == pytest.approx(total / norm_constant(p), rel=1e-14)


@pytest.mark.parametrize("fn,scale", [(jackson_j2, 2.0), (hahn_exton_j3, 1.0)])
def test_scaled_limits_to_classical(fn, scale):
    # f((1-q)*z; q) approaches the classical value J0(2) as q -> 1
    errs = []
    for q in (0.9, 0.99, 0.999):
        got = fn((1.0 - q) * scale, QDomainParams(0.0, q))
        errs.append(abs(got - J0_AT_2))
    assert errs[0] > errs[1] > errs[2]
    assert errs[-1] < 1e-2


def test_negative_argument_rejected():
    with pytest.raises(DomainError):
        jackson_j2(-0.5, QDomainParams(0.5, 0.5))


def test_normalized_eval_class_a():
    for case_id in CASE_ORDER:
        nu = 1.0 if case_id.startswith("F") else -0.5
        val = normalized_eval(case_id, QDomainParams(nu, 0.4), 1e-7)
        assert val / 1e-7 == pytest.approx(1.0, abs=1e-6)
    assert normalized_eval("G2", QDomainParams(0.0, 0.5), 0.0) == 0.0


def test_normalized_eval_h3_redundant_path():
    p = QDomainParams(0.0, 0.5)
    got = normalized_eval("H3", p, 0.01)
    total, term = 0.0, 1.0
    for n in range(30):
        total += term * 0.01 ** n
        term *= -p.q ** (n + 1) / ((1 - p.q ** (n + 1)) * (1 - p.q ** (n + 1)))
    assert got == pytest.approx(0.01 * total, rel=1e-14)


def test_normalized_eval_f2_composes_jackson():
    p = QDomainParams(1.0, 0.5)
    got = normalized_eval("F2", p, 0.1)
    want = 2.0 * norm_constant(p) * jackson_j2(0.1, p)  # nu = 1: root is identity
    assert got == pytest.approx(want, rel=1e-13)


def test_normalized_eval_branch_error_past_first_zero():
    # z = 4 puts u = 16 between the first two zeros of the base series
    # (power sums locate the first at about 7), where it is negative.
    p = QDomainParams(1.0, 0.5)
    with pytest.raises(BranchError):
        normalized_eval("F2", p, 4.0)


def test_f_case_domain():
    with pytest.raises(DomainError):
        coefficient_stream("F2", QDomainParams(-0.5, 0.5))
    with pytest.raises(DomainError):
        normalized_eval("F3", QDomainParams(0.0, 0.5), 0.1)
