import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qcongruence import padic
from qcongruence.padic import (
    PreconditionError,
    check_divergent,
    check_lift_conjectures,
    check_mao_sun_identity,
    check_sun_binomial,
    check_sun_tauraso,
    v_p,
)
from qcongruence.ring import eval_at
from qcongruence.suites import build_sum


def half_poch_over_factorial(k):
    out = Fraction(1)
    for j in range(k):
        out *= Fraction(2 * j + 1, 2 * (j + 1))
    return out


def test_valuation_examples():
    assert v_p(Fraction(125, 32), 5) == 3
    assert v_p(0, 3) == math.inf
    assert v_p(Fraction(285, 32), 5) == 1
    assert v_p(Fraction(7, 49), 7) == -1
    with pytest.raises(ValueError):
        v_p(10, 4)


@given(st.integers(-(10**12), 10**12).filter(bool), st.sampled_from([2, 3, 5, 7, 11]))
def test_valuation_against_factorization(x, p):
    e = 0
    while x % p == 0:
        x //= p
        e += 1
    assert v_p(x * p**e, p) == e


@pytest.mark.parametrize("k", range(0, 51))
def test_term_identity(k):
    lhs = half_poch_over_factorial(k) ** 3 * (3 * k + 1) * 4**k
    assert lhs == Fraction((3 * k + 1) * padic.central(k) ** 3, 16**k)


def test_div1_worked_value():
    v = check_divergent("div1", 5)
    assert v.lhs == Fraction(285, 32)
    assert v.lhs - 5 == Fraction(125, 32)
    assert v.observed_order == 3 and v.holds


def test_div3_at_three():
    v = check_divergent("div3", 3)
    assert v.lhs == -3 and v.rhs == -3 and v.observed_order == math.inf and v.holds


def test_preconditions():
    with pytest.raises(PreconditionError):
        check_divergent("div1", 2)
    with pytest.raises(PreconditionError):
        check_divergent("div2", 3)
    with pytest.raises(PreconditionError):
        check_divergent("div_gen_r1", 9, 1)
    with pytest.raises(PreconditionError):
        check_sun_tauraso(3)
    with pytest.raises(PreconditionError):
        check_lift_conjectures("swisher_j3", 3, 1)


def test_sun_binomial_examples():
    v = check_sun_binomial("sun1", 1)
    assert (v.total, v.modulus, v.holds) == (48, 24, True)
    v = check_sun_binomial("sun2", 1)
    assert (v.total, v.modulus, v.holds) == (24, 24, True)


def test_sun_binomial_at_zero_is_recorded_not_asserted():
    v = check_sun_binomial("sun1", 0)
    assert (v.total, v.modulus) == (1, 4)
    assert not v.holds


def test_sun_tauraso_examples():
    v = check_sun_tauraso(5)
    assert v.lhs == Fraction(175, 6) and v.observed_order == 2
    assert check_sun_tauraso(7).holds


def test_mao_sun_small_cases():
    lhs, rhs = padic.mao_sun_sides(0)
    assert lhs == rhs
    assert lhs.num.degree == 1
    lhs, rhs = padic.mao_sun_sides(1)
    assert lhs == rhs and lhs.num.degree == 3
    assert check_mao_sun_identity(5)


def test_lift_conjecture_examples():
    a = check_lift_conjectures("conj5a", 5, 1)
    assert a.rhs == 5 and a.holds
    assert a.observed_order == check_divergent("div1", 5).observed_order
    j = check_lift_conjectures("swisher_j3", 5, 1)
    assert j.rhs == 5 and j.required_order == 4 and j.holds
    c = check_lift_conjectures("conj5c", 3, 1)
    assert c.required_order == 4


def test_delta_rule():
    assert check_lift_conjectures("conj5b", 3, 2).required_order == 7
    assert check_lift_conjectures("conj5b", 5, 2).required_order == 8
    assert check_lift_conjectures("conj5c", 3, 2).required_order == 7
    assert check_lift_conjectures("conj5c", 5, 2).required_order == 6


@pytest.mark.parametrize("p", [3, 5, 7])
def test_q_side_specializes_to_padic_sum(p):
    assert eval_at(build_sum("thm1_full", p), 1) == padic.divergent_lhs("div_gen_r2", p)
    assert eval_at(build_sum("thm1_half", p), 1) == padic.divergent_lhs("div1", p)
    assert eval_at(build_sum("thm2", p), 1) == padic.div3_sum(p - 1)


def test_variant_forms_hold():
    assert all(check_divergent("div2_alternating", p).holds for p in (5, 7, 11, 13))
    assert all(check_divergent("div3_pr_power_sign", p, r).holds for p, r in ((3, 2), (3, 3), (5, 2), (7, 2)))
    for cid in ("conj5c", "conj5d"):
        assert check_lift_conjectures(cid, 5, 2, alternating_rhs=True).holds


def test_primes_helper():
    assert padic.primes(5, 30) == [5, 7, 11, 13, 17, 19, 23, 29]
    assert not padic.is_prime(1) and padic.is_prime(2)
