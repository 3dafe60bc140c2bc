from fractions import Fraction

import pytest

from qstarlike import (CASES, CASE_ORDER, DomainError, QDomainParams,
                       coefficient_stream, er_bracket, helper_poly,
                       newton_power_sums, theorem_bounds)
from qstarlike.bounds import HELPER_NAMES, bracket_in_u

GRID_NUS = {"f": (0.5, 1.0, 2.0, 5.0), "gh": (-0.5, 0.5, 1.0, 2.0, 5.0)}
GRID_QS = (0.1, 0.25, 0.5, 0.75, 0.9)


def case_nus(case_id):
    return GRID_NUS["f" if CASES[case_id].form == "f" else "gh"]


def test_helper_exact_dyadic_values():
    p = QDomainParams(0.0, 0.5)
    assert helper_poly("b", p) == pytest.approx(float(Fraction(4403, 256)), abs=0)
    assert helper_poly("a", p) == pytest.approx(float(Fraction(-581, 128)), abs=0)
    assert helper_poly("q1s", p) == pytest.approx(float(Fraction(852, 463)), rel=1e-15)
    assert helper_poly("q2s", p) == pytest.approx(float(Fraction(-160, 443)), rel=1e-15)
    assert helper_poly("q3s", p) == pytest.approx(float(Fraction(-732, 365)), rel=1e-15)
    assert helper_poly("q4s", p) == pytest.approx(float(Fraction(168, 155)), rel=1e-15)


@pytest.mark.parametrize("name", HELPER_NAMES)
def test_helper_two_evaluation_paths_agree_dyadic(name):
    # at a dyadic point both paths round identically to the last bit
    p = QDomainParams(0.0, 0.5)
    direct = helper_poly(name, p, method="direct")
    horner = helper_poly(name, p, method="horner")
    assert horner == pytest.approx(direct, rel=1e-15, abs=1e-15)


@pytest.mark.parametrize("name", HELPER_NAMES)
@pytest.mark.parametrize("nu,q", [(-0.5, 0.3), (0.5, 0.5), (2.0, 0.9), (5.0, 0.1)])
def test_helper_two_evaluation_paths_agree(name, nu, q):
    p = QDomainParams(nu, q)
    direct = helper_poly(name, p, method="direct")
    horner = helper_poly(name, p, method="horner")
    assert horner == pytest.approx(direct, rel=1e-14, abs=1e-15)


def test_helper_unknown_name():
    with pytest.raises(DomainError):
        helper_poly("nope", QDomainParams(0.0, 0.5))


def test_family1_bracket_values():
    bset = theorem_bounds("F2", QDomainParams(1.0, 0.5))
    br = bset.bracket(1)
    assert br.lower == pytest.approx(2.0, rel=1e-14)
    assert br.upper == pytest.approx(float(Fraction(126, 53)), rel=1e-14)
    # the printed upper display has an odd count of negative factors
    assert "SIGN_NORM" in bset.flags
    assert bset.quantity == "squared_radius"
    assert bset.helpers == {}


def test_family3_bracket_values():
    bset = theorem_bounds("H2", QDomainParams(0.0, 0.5))
    one, two = bset.bracket(1), bset.bracket(2)
    assert one.lower == pytest.approx(1.0, rel=1e-14)
    assert one.upper == pytest.approx(1.2, rel=1e-14)
    assert two.lower == pytest.approx((5.0 / 6.0) ** -0.5, rel=1e-14)
    assert two.upper == pytest.approx(float(Fraction(490, 443)), rel=1e-14)
    assert bset.flags == ()
    assert set(bset.helpers) == {"q2s", "th3c", "th3d"}


def test_family6_bracket_values():
    bset = theorem_bounds("H3", QDomainParams(0.0, 0.5))
    br = bset.bracket(1)
    assert br.lower == pytest.approx(0.25, rel=1e-14)
    assert br.upper == pytest.approx(0.375, rel=1e-14)


def test_missing_chain_rejected():
    bset = theorem_bounds("F2", QDomainParams(1.0, 0.5))
    with pytest.raises(DomainError):
        bset.bracket(2)


@pytest.mark.parametrize("case_id", CASE_ORDER)
def test_brackets_positive_ordered_and_nested(case_id):
    for nu in case_nus(case_id):
        for q in GRID_QS:
            bset = theorem_bounds(case_id, QDomainParams(nu, q))
            one = bset.bracket(1)
            assert 0.0 < one.lower < one.upper
            if len(bset.brackets) == 2:
                two = bset.bracket(2)
                assert 0.0 < two.lower < two.upper
                assert two.lower >= one.lower
                assert two.upper <= one.upper


@pytest.mark.parametrize("case_id", CASE_ORDER)
def test_first_chain_equals_oracle_bracket(case_id):
    # families whose order-1/order-2 sums are printed correctly must have a
    # first chain identical to the oracle bracket; the two defective sites
    # (orders 2 of F2 and H2) only shift the chain-1 upper, which remains
    # oracle-equal because the bound display itself is magnitude-correct.
    case = CASES[case_id]
    for nu in (0.5, 2.0):
        for q in (0.25, 0.75):
            params = QDomainParams(nu, q)
            bset = theorem_bounds(case_id, params)
            sums = newton_power_sums(coefficient_stream(case_id, params), 2)
            oracle = er_bracket(sums, 1)
            got = bracket_in_u(case, bset.bracket(1).lower, bset.bracket(1).upper)
            assert got[0] == pytest.approx(oracle.lower, rel=1e-10)
            assert got[1] == pytest.approx(oracle.upper, rel=1e-10)


def test_bracket_in_u_conventions():
    assert bracket_in_u("F2", 2.0, 3.0) == (2.0, 3.0)
    assert bracket_in_u("H3", 2.0, 3.0) == (2.0, 3.0)
    assert bracket_in_u("G2", 2.0, 3.0) == (4.0, 9.0)


def test_domain_checks():
    with pytest.raises(DomainError):
        theorem_bounds("F2", QDomainParams(-0.5, 0.5))
    with pytest.raises(DomainError):
        theorem_bounds("F3", QDomainParams(-0.25, 0.5))
