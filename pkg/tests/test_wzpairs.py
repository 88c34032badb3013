import math
from fractions import Fraction

import pytest

from qcongruence import wzpairs
from qcongruence.padic import central
from qcongruence.qfactor import q_binomial, q_int
from qcongruence.ring import RationalFn, eval_at
from qcongruence.wzpairs import (
    PAIRS,
    eval_F,
    eval_G,
    staver_symmetry_check,
    subs_checks,
    sun_qbino_checks,
    telescope_check,
    telescope_details,
    verify_relation,
)


def test_boundary_values():
    assert eval_F("divergent1", 0, 0) == RationalFn.one()
    assert eval_F("he", 1, 1).is_zero()
    assert all(eval_F("he", n, k).is_zero() for n in range(6) for k in range(6) if n < 2 * k)
    assert all(eval_G("divergent1", 0, k).is_zero() for k in range(6))


def test_staver_domain_is_enforced():
    with pytest.raises(ValueError):
        eval_F("staver", 3, 0)


@pytest.mark.parametrize("name", sorted(PAIRS))
def test_relation_on_small_grid(name):
    check = verify_relation(name, 8, 8)
    assert check.ok, check.witness
    assert check.points > 0


def test_relation_rejects_empty_grid():
    with pytest.raises(ValueError):
        verify_relation("he", 0, 5)


def test_relation_reports_witness_for_broken_pair():
    good = PAIRS["he"]
    broken = wzpairs.WZPair("broken", good.F, lambda n, k: good.G(n, k) * 2, good.relation_shape,
                            good.in_domain, good.domain_note)
    check = verify_relation(broken, 4, 4)
    assert not check.ok and check.witness is not None


def test_staver_single_step_closed_form():
    closed = RationalFn(q_int(3) * q_binomial(2, 1), q_int(2) ** 2)
    assert wzpairs.staver_F(1, 1) == wzpairs.staver_summand(1) == closed


def test_divergent1_upper_half_at_five():
    details = dict(telescope_details("divergent1", 5))
    assert details["upper=3 k=1"]


def test_he_product_form_at_three():
    assert all(ok for _, ok in telescope_details("he", 3))


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_telescoping_small(m):
    for name in PAIRS:
        assert telescope_check(name, m)


def test_divergent1_telescoping_needs_odd_m():
    with pytest.raises(ValueError):
        telescope_check("divergent1", 4)


@pytest.mark.parametrize("n", range(1, 16))
def test_staver_symmetry(n):
    assert staver_symmetry_check(n)


@pytest.mark.parametrize("m", [3, 5, 7])
def test_subs_closed_form_and_divisibility(m):
    for _, closed_ok, rep in subs_checks(m):
        assert closed_ok and rep.holds


@pytest.mark.parametrize("N", range(1, 7))
def test_product_form_summands_divisible(N):
    assert all(ok for _, ok in sun_qbino_checks(N))


@pytest.mark.parametrize("n", range(0, 11))
def test_q1_specialization_of_divergent1(n):
    half = Fraction(1)
    for j in range(n):
        half *= Fraction(2 * j + 1, 2)
    expected = (3 * n + 1) * (half / math.factorial(n)) ** 3 * 4**n
    value = eval_at(eval_F("divergent1", n, 0), 1)
    assert value == expected == Fraction((3 * n + 1) * central(n) ** 3, 16**n)
