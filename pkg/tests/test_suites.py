import pytest
import sympy
from hypothesis import given, strategies as st

from oracle import congruent, cyclo, hamme_sum, q, qint, thm1_sum
from qcongruence import suites
from qcongruence.congruence import congruent_mod
from qcongruence.qfactor import q_int
from qcongruence.ring import IntPoly, RationalFn
from qcongruence.suites import (
    FractionalExponentError,
    InadmissibleError,
    build_sum,
    exact_exponent,
    scan,
    verify,
    verify_lemma3,
    verify_lemma4,
)


def to_sympy(f):
    def poly(p):
        return sum(c * q**i for i, c in enumerate(p.coeffs))

    return poly(f.num) / poly(f.den)


def same(f, expr):
    return sympy.simplify(to_sympy(f) - expr) == 0


# -- build_sum -----------------------------------------------------------------


def test_thm1_half_at_three():
    assert build_sum("thm1_half", 3) == RationalFn(IntPoly([1, 1, 1]), IntPoly([0, 1]))
    assert same(build_sum("thm1_half", 3), thm1_sum(1))


def test_thm2_single_term():
    assert build_sum("thm2_full", 1) == RationalFn.one()


def test_thm3_at_one():
    expected = -(IntPoly([0, 1]) * IntPoly([1, 1]) ** 3 * q_int(3))
    assert build_sum("thm3", 1) == RationalFn(expected)


def test_build_sum_rejects_inadmissible():
    with pytest.raises(InadmissibleError):
        build_sum("thm1_full", 4)
    with pytest.raises(InadmissibleError):
        build_sum("conj4", 7)
    with pytest.raises(KeyError):
        build_sum("nope", 3)


def test_fractional_exponent_is_an_error():
    assert exact_exponent(-8, 4) == -2
    with pytest.raises(FractionalExponentError):
        exact_exponent(-2, 4)
    # the conj4 exponent at n = 3, k = 1 is -1/2
    with pytest.raises(FractionalExponentError):
        suites._conj4(3)


@given(st.integers(0, 40).map(lambda j: 4 * j + 1))
def test_conj4_exponent_is_integral_when_n_is_1_mod_4(n):
    for k in range((n - 1) // 2 + 1):
        exact_exponent(k * (n * n - 2 * n * k - n - 2), 4)


# -- verify --------------------------------------------------------------------


def test_staver_identity_at_one():
    rep = verify("q_staver", 1)
    assert rep.holds and rep.kind == "identity"
    assert build_sum("q_staver", 1) == RationalFn(q_int(3), q_int(2))


def test_thm1_half_at_five_against_oracle():
    rep = verify("thm1_half", 5)
    assert rep.holds and rep.required_orders == {5: 3}
    assert congruent(thm1_sum(2), qint(5) * q**-2, qint(5) * cyclo(5) ** 2)


def test_hamme_at_three_against_oracle():
    assert verify("q_hamme", 3).holds
    assert congruent(hamme_sum(3), -qint(3) * q, qint(3) ** 3)
    with pytest.raises(InadmissibleError):
        verify("q_hamme", 9)


def test_not_applicable_propagates():
    rep = verify("lemma5", 4)
    assert rep.not_applicable and rep.verdict == "not-applicable"


@pytest.mark.parametrize("sid", ["thm1_half", "thm1_full", "thm2", "thm4", "conj3", "extra7"])
def test_suites_hold_for_small_odd_n(sid):
    for n in (3, 5, 7, 9):
        assert verify(sid, n).holds


# -- lemmas --------------------------------------------------------------------


def test_lemma3_examples():
    assert verify_lemma3(3, 0).holds
    assert verify_lemma3(5, 2, half=True).holds
    with pytest.raises(InadmissibleError):
        verify_lemma3(5, 3, half=True)
    with pytest.raises(InadmissibleError):
        verify_lemma3(4, 0)


@pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
def test_lemma3_orders_match_floor_counts(n):
    for k in range(n + 1):
        rep = verify_lemma3(n, k)
        for t in rep.observed_orders:
            assert suites.lemma3_floor_exponent(n, k, t) == rep.observed_orders[t]


def test_lemma4_examples():
    assert verify_lemma4(5, 1).holds
    assert verify_lemma4(5, 2).holds
    assert verify_lemma4(3, 1).holds
    with pytest.raises(InadmissibleError):
        verify_lemma4(5, 3)


# -- scan ----------------------------------------------------------------------


def test_scan_thm4():
    res = scan("thm4", range(3, 16))
    assert len(res.reports) == 7 and res.passed == 7 and res.all_hold


def test_scan_conj4():
    res = scan("conj4", [5, 9, 13])
    assert [r.n for r in res.reports] == [5, 9, 13] and res.all_hold


def test_scan_without_admissible_n_is_empty():
    assert scan("thm1_full", [2, 4]).reports == []
    with pytest.raises(ValueError):
        scan("thm1_full", [])


def test_scan_parallel_matches_serial():
    a = scan("thm2", range(3, 12), jobs=2)
    b = scan("thm2", range(3, 12))
    assert [(r.n, r.holds, r.observed_orders) for r in a.reports] == [
        (r.n, r.holds, r.observed_orders) for r in b.reports
    ]


# -- invariants ----------------------------------------------------------------


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_half_and_full_agree_at_primes(p):
    assert verify("thm1_half", p).holds == verify("thm1_full", p).holds
    for k in range((p + 1) // 2, p):
        assert congruent_mod(suites.div1_summand(k), 0, q_int(p)).holds


def test_half_and_full_terms_differ_at_composites():
    # at n = 9 the tail terms are no longer individually == 0 mod [9]
    tail = [congruent_mod(suites.div1_summand(k), 0, q_int(9)).holds for k in range(5, 9)]
    assert not all(tail)


@pytest.mark.parametrize("n", range(3, 26, 2))
def test_lemma2_and_remark(n):
    assert verify("lemma2", n).holds
    assert verify("remark_zudilin", n).holds


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 11, 13])
def test_lemma5_both_forms_odd(n):
    assert verify("lemma5", n).holds
    assert verify("lemma5_alt", n).holds


@pytest.mark.parametrize("m", [1, 3, 5, 7, 9, 11])
def test_reduction_chain(m):
    assert verify("reduce3", m).holds
    assert verify("reduce", m).holds
    if m > 1:
        assert verify("thm1_half", m).holds


@pytest.mark.parametrize("n", range(3, 22, 2))
def test_stepping_stones(n):
    assert all(ok for _, ok in suites.stepping_stones(n))
    assert suites.staver_step_check(n).holds


def test_catalogue_ids_are_stable():
    assert {"thm1_half", "thm1_full", "thm2", "conj1", "thm3", "conj2", "thm4", "q_staver", "q_hamme",
            "conj3", "conj4", "extra7", "lemma2", "lemma5"} <= set(suites.SUITES)
    assert set(suites.LEMMA_IDS) == {"lemma3", "lemma3_half", "lemma4"}
