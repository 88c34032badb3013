import random

import pytest

from qcongruence.congruence import Verdict, congruent_mod, congruent_mod_phi_power
from qcongruence.qfactor import cyclotomic, q_binomial, q_int, qpoch
from qcongruence.ring import IntPoly, RationalFn, poly_gcd

ONE = IntPoly([1])


def mono(e, c=1):
    return RationalFn.monomial(e, c)


def thm1_term(k):
    top = q_int(3 * k + 1) * qpoch(1, 2, k) ** 3
    return RationalFn(top, qpoch(1, 1, k) ** 2 * qpoch(2, 2, k)) * mono(-k * (k + 1) // 2)


def test_theorem1_half_sum_at_three_is_identical():
    lhs = thm1_term(0) + thm1_term(1)
    rhs = RationalFn(q_int(3)) * mono(-1)
    rep = congruent_mod(lhs, rhs, q_int(3) * cyclotomic(3) ** 2, indices=[3])
    assert rep.holds and rep.observed_orders == {3: "inf"} and rep.required_orders == {3: 3}


def test_q_power_is_one_mod_phi():
    assert congruent_mod(mono(7), 1, cyclotomic(7)).holds


def test_shared_denominator_is_not_applicable():
    rep = congruent_mod(RationalFn(ONE, IntPoly([1, -1])), 0, IntPoly([-1, 1]))
    assert rep.not_applicable and not rep.holds
    assert rep.verdict == Verdict.NOT_APPLICABLE


def test_failure_reports_orders():
    rep = congruent_mod(RationalFn(q_int(3)), 0, cyclotomic(3) ** 2, indices=[3])
    assert rep.verdict == Verdict.FAILS
    assert rep.observed_orders == {3: 1} and rep.required_orders == {3: 2}


def test_modulus_must_be_nonconstant():
    with pytest.raises(ValueError):
        congruent_mod(1, 0, IntPoly([5]))


def test_theorem2_at_three_via_phi_power():
    terms = [
        RationalFn(q_int(3 * k + 1) * qpoch(1, 2, k) ** 3 * (-1) ** k, qpoch(1, 1, k) ** 3) for k in range(3)
    ]
    lhs = sum(terms[1:], terms[0])
    rhs = RationalFn(q_int(3)) * mono(1, -1)
    rep = congruent_mod_phi_power(lhs, rhs, 3, 2, extra=q_int(3))
    assert rep.holds and rep.cofactor_degree >= 0


def test_identical_sides_hold_for_any_modulus():
    a = RationalFn(IntPoly([3, 1, 4]), IntPoly([1, 5, 9]))
    assert congruent_mod_phi_power(a, a, 11, 3).holds


def test_theorem4_at_three():
    lhs = RationalFn(q_int(3) * q_binomial(2, 1), q_int(2) ** 2) + RationalFn(
        q_int(6) * q_binomial(4, 2), q_int(4) ** 2
    ) * mono(-1)
    rhs = RationalFn(IntPoly([1, -1]) ** 2 * q_int(3), IntPoly([3]))
    assert congruent_mod_phi_power(lhs, rhs, 3, 2).holds


def _random_fn(rng, avoid):
    while True:
        num = IntPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 5))])
        den = IntPoly([rng.randint(-4, 4) for _ in range(rng.randint(1, 4))])
        if num.is_zero() or den.is_zero():
            continue
        f = RationalFn(num, den)
        if poly_gcd(f.den, avoid).is_constant():
            return f


def test_equivalence_relation_on_random_triples():
    rng = random.Random(5)
    P = cyclotomic(5)
    checked = 0
    for _ in range(60):
        a, b = _random_fn(rng, P), _random_fn(rng, P)
        assert congruent_mod(a, a, P).holds
        assert congruent_mod(a, b, P).holds == congruent_mod(b, a, P).holds
        # force a congruent triple: add multiples of P
        c = a + RationalFn(P * IntPoly([rng.randint(-3, 3), 1]), b.den)
        d = c + RationalFn(P, a.den)
        if congruent_mod(a, c, P).holds and congruent_mod(c, d, P).holds:
            assert congruent_mod(a, d, P).holds
            checked += 1
    assert checked > 30


def test_scaling_by_unit_preserves_congruence():
    rng = random.Random(7)
    P = cyclotomic(7)
    for _ in range(40):
        a = _random_fn(rng, P)
        b = a + RationalFn(P * IntPoly([rng.randint(1, 5)]), a.den)
        c = _random_fn(rng, P)
        if not poly_gcd(c.num, P).is_constant():
            continue
        assert congruent_mod(c * a, c * b, P).holds
