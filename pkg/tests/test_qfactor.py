import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qcongruence.qfactor import (
    CyclotomicCache,
    QPochSpec,
    cyclotomic,
    divisors,
    phi_order,
    poch_phi_exponent,
    q_binomial,
    q_int,
    q_pochhammer,
    qpoch,
    radical_qint,
)
from qcongruence.ring import IntPoly, RationalFn, prs_gcd

Q = IntPoly([0, 1])


def naive_poch(sign, shift, step, length):
    out = IntPoly([1])
    for j in range(length):
        out = out * (IntPoly([1]) - sign * IntPoly.monomial(shift + step * j))
    return out


def test_q_int():
    assert q_int(1) == IntPoly([1])
    assert q_int(3) == IntPoly([1, 1, 1])
    assert q_int(0).is_zero()
    with pytest.raises(ValueError):
        q_int(-1)


def test_pochhammer_examples():
    assert q_pochhammer(QPochSpec(1, 1, 2, 2)) == IntPoly([1, -1, 0, -1, 1])
    assert q_pochhammer(QPochSpec(-1, 1, 1, 2)) == IntPoly([1, 1]) * IntPoly([1, 0, 1])
    assert q_pochhammer(QPochSpec(1, 5, 3, 0)) == IntPoly([1])


def test_pochhammer_spec_validation():
    with pytest.raises(ValueError):
        QPochSpec(2, 1, 1, 1)
    with pytest.raises(ValueError):
        QPochSpec(1, 1, 0, 1)
    with pytest.raises(ValueError):
        QPochSpec(1, 1, 1, -1)


@given(st.sampled_from([1, -1]), st.integers(0, 6), st.integers(1, 4), st.integers(0, 8))
def test_pochhammer_matches_naive_product_and_degree(sign, a, b, n):
    p = qpoch(a, b, n, sign)
    assert p == naive_poch(sign, a, b, n)
    if sign == 1 and not p.is_zero():
        assert p.degree == b * n * (n - 1) // 2 + a * n


def test_q_binomial_examples():
    assert q_binomial(2, 1) == IntPoly([1, 1])
    assert q_binomial(4, 2) == IntPoly([1, 1, 2, 1, 1])
    assert q_binomial(1, 2).is_zero()
    assert q_binomial(3, -1).is_zero()
    assert q_binomial(4, 2, 2) == IntPoly([1, 0, 1, 0, 2, 0, 1, 0, 1])


@pytest.mark.parametrize("m", range(0, 31))
def test_q_binomial_pascal_symmetry_and_q1(m):
    for n in range(0, m + 1):
        c = q_binomial(m, n)
        assert c == q_binomial(m, m - n)
        assert c(1) == math.comb(m, n)
        if 1 <= n <= m - 1:
            assert c == q_binomial(m - 1, n - 1) + q_binomial(m - 1, n).shift(n)
            assert c == q_binomial(m - 1, n - 1).shift(m - n) + q_binomial(m - 1, n)


def test_cyclotomic_examples():
    assert cyclotomic(1) == IntPoly([-1, 1])
    assert cyclotomic(5) == IntPoly([1, 1, 1, 1, 1])
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    with pytest.raises(ValueError):
        cyclotomic(0)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_product_and_radical(n):
    prod = IntPoly([1])
    for d in divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == IntPoly.monomial(n) - 1
    assert cyclotomic(n).lc == 1
    assert radical_qint(n) == q_int(n)


def test_cyclotomic_irreducible_factors_are_coprime():
    for a in range(1, 20):
        for b in range(a + 1, 20):
            assert prs_gcd(cyclotomic(a), cyclotomic(b)).is_constant()


def test_radical_examples():
    assert radical_qint(9) == cyclotomic(3) * cyclotomic(9) == q_int(9)
    assert radical_qint(7) == cyclotomic(7)
    assert radical_qint(1) == IntPoly([1])


def test_cache_ceiling_and_consistency():
    cache = CyclotomicCache(max_n=10)
    cache.warm()
    assert sorted(cache.table) == list(range(1, 11))
    assert cache.get(12) == cyclotomic(12)
    assert 12 not in cache.table


def test_phi_order_examples():
    assert phi_order(q_int(5), 5) == 1
    assert phi_order(qpoch(1, 1, 4), 5) == 0
    assert phi_order(q_binomial(6, 3), 4) == 1
    assert phi_order(RationalFn(IntPoly([1]), cyclotomic(3) ** 2), 3) == -2
    with pytest.raises(ValueError):
        phi_order(RationalFn.zero(), 3)


def test_floor_exponent_examples():
    assert poch_phi_exponent(QPochSpec(1, 1, 1, 8), 3) == 2
    assert poch_phi_exponent(QPochSpec(1, 1, 2, 5), 5) == 1
    with pytest.raises(ValueError):
        poch_phi_exponent(QPochSpec(1, 1, 2, 3), 1)
    with pytest.raises(ValueError):
        poch_phi_exponent(QPochSpec(-1, 1, 1, 3), 3)


@pytest.mark.parametrize("n", range(1, 26))
def test_floor_exponent_matches_exact_division(n):
    for t in range(3, 26, 2):
        assert poch_phi_exponent(QPochSpec(1, 1, 1, n), t) == phi_order(qpoch(1, 1, n), t)
        assert poch_phi_exponent(QPochSpec(1, 1, 2, n), t) == phi_order(qpoch(1, 2, n), t)
        for k in (1, 2, 4, 7):
            spec = QPochSpec(1, 2 * k + 1, 2, n)
            assert poch_phi_exponent(spec, t) == phi_order(q_pochhammer(spec), t)


def test_floor_inequality_random_rationals():
    rng = random.Random(20240611)
    for _ in range(10_000):
        xv = Fraction(rng.randint(0, 20 * 97), 97)
        yv = Fraction(rng.randint(0, 20 * 89), 89)
        f = math.floor
        assert f(2 * xv + 2 * yv) + f(yv) >= f(xv) + f(xv + yv) + f(2 * yv)
