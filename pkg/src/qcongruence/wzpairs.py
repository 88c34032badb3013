"""The three q-WZ certificate pairs and their telescoping consequences.

Pairs are looked up by a stable name (``staver``, ``divergent1``, ``he``);
the CLI uses the same names.  Every check is exact equality of reduced
rational functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .congruence import congruent_mod
from .qfactor import cyclotomic, q_binomial, q_int, q_int_rf, qpoch, qpoch_rf
from .ring import IntPoly, RationalFn, rf_sum

__all__ = [
    "PAIRS",
    "RelationCheck",
    "WZPair",
    "eval_F",
    "eval_G",
    "staver_symmetry_check",
    "subs_checks",
    "sun_qbino_checks",
    "telescope_check",
    "telescope_details",
    "verify_relation",
]

ONE = RationalFn.one()
ZERO = RationalFn.zero()


def binom2(x):
    """x choose 2 for any integer x."""
    return x * (x - 1) // 2


def mono(e, c=1):
    return RationalFn.monomial(e, c)


def one_plus_q(e):
    """1 + q^e for any integer e."""
    return ONE + mono(e)


def rf(num, den=1):
    return RationalFn(num, den)


# -- staver -----------------------------------------------------------------


@lru_cache(maxsize=None)
def staver_F(n, k):
    if not 1 <= k <= n:
        raise ValueError(f"staver F({n},{k}) outside 1 <= k <= n")
    head = rf(q_int(n + 1) * q_binomial(2 * n + 1, n), 2)
    tail = one_plus_q(2 * k - n - 1) * mono(-binom2(n - 2 * k + 1))
    den = q_int(2 * k) ** 2 * q_binomial(n, k, 2) ** 2
    return head * tail / den


@lru_cache(maxsize=None)
def staver_G(n, k):
    if not 1 <= k <= n + 1:
        raise ValueError(f"staver G({n},{k}) outside 1 <= k <= n+1")
    head = rf(-q_int(3 * n - 2 * k + 5) * q_binomial(2 * n + 1, n), 2)
    tail = one_plus_q(n + 1) * mono(-binom2(n - 2 * k + 3))
    den = q_int(2 * k) ** 2 * q_binomial(n + 1, k, 2) ** 2
    return head * tail / den


# -- divergent1 -------------------------------------------------------------


@lru_cache(maxsize=None)
def div1_F(n, k):
    if n < 0:
        return ZERO
    bracket = q_int_rf(3 * n + 2 * k + 1)
    top = qpoch(1, 2, n) * qpoch_rf(2 * k + 1, 2, n) ** 2
    den = qpoch(1, 1, n) ** 2 * qpoch(2, 2, n)
    return bracket * top * mono(-binom2(n + 1) - (2 * n + 1) * k) / den


@lru_cache(maxsize=None)
def div1_G(n, k):
    # 1/(q^2;q^2)_a = 0 for negative a
    if n <= 0:
        return ZERO
    top = one_plus_q(n + 2 * k - 1) * qpoch(1, 2, n) * qpoch_rf(2 * k + 1, 2, n - 1) ** 2
    den = (1 - IntPoly.monomial(1)) * qpoch(1, 1, n - 1) ** 2 * qpoch(2, 2, n - 1)
    return -top * mono(-binom2(n) - (2 * n - 1) * k) / den


# -- he ---------------------------------------------------------------------


@lru_cache(maxsize=None)
def he_F(n, k):
    b = q_binomial(2 * n - 2 * k, n)
    if b.is_zero():
        return ZERO
    top = q_int(3 * n - 2 * k + 1) * b * qpoch(1, 2, n) * qpoch(1, 2, n - k)
    den = qpoch(1, 1, n) * qpoch(2, 2, n - k)
    return rf(top * (-1) ** n, den)


@lru_cache(maxsize=None)
def he_G(n, k):
    b = q_binomial(2 * n - 2 * k, n - 1)
    if b.is_zero() or n == 0:
        return ZERO
    top = q_int(n) * b * qpoch(1, 2, n) * qpoch(1, 2, n - k)
    den = qpoch(1, 1, n) * qpoch(2, 2, n - k)
    return rf(top * (-1) ** (n + 1), den) * mono(n + 1 - 2 * k)


# -- pair metadata ----------------------------------------------------------


@dataclass(frozen=True)
class WZPair:
    name: str
    F: Callable
    G: Callable
    relation_shape: str
    in_domain: Callable
    domain_note: str

    def relation_sides(self, n, k):
        if self.relation_shape == "shift-n":
            return self.F(n + 1, k) - self.F(n, k), self.G(n, k + 1) - self.G(n, k)
        return self.F(n, k - 1) - self.F(n, k), self.G(n + 1, k) - self.G(n, k)


PAIRS = {
    "staver": WZPair(
        "staver",
        staver_F,
        staver_G,
        "shift-n",
        lambda n, k: 1 <= k <= n,
        "F(n+1,k)-F(n,k) = G(n,k+1)-G(n,k) for 1 <= k <= n (F has q^2-binomial denominators)",
    ),
    "divergent1": WZPair(
        "divergent1",
        div1_F,
        div1_G,
        "shift-k",
        lambda n, k: n >= 0 and k >= 0,
        "F(n,k-1)-F(n,k) = G(n+1,k)-G(n,k) for n, k >= 0",
    ),
    "he": WZPair(
        "he",
        he_F,
        he_G,
        "shift-k",
        lambda n, k: n >= 0 and k >= 0,
        "F(n,k-1)-F(n,k) = G(n+1,k)-G(n,k) for n, k >= 0",
    ),
}


def _pair(pair):
    return PAIRS[pair] if isinstance(pair, str) else pair


def eval_F(pair, n, k):
    return _pair(pair).F(n, k)


def eval_G(pair, n, k):
    return _pair(pair).G(n, k)


@dataclass
class RelationCheck:
    ok: bool
    points: int
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def verify_relation(pair, n_max, k_max):
    """Check the pair's difference equation on 0 <= n <= n_max, 0 <= k <= k_max.

    Points outside the pair's natural domain are skipped.
    """
    if n_max < 1 or k_max < 1:
        raise ValueError("grid bounds must be >= 1")
    pair = _pair(pair)
    count = 0
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            if not pair.in_domain(n, k):
                continue
            lhs, rhs = pair.relation_sides(n, k)
            count += 1
            if lhs != rhs:
                return RelationCheck(False, count, (n, k))
    return RelationCheck(True, count)


# -- telescoping ------------------------------------------------------------


def staver_symmetry_check(n):
    """Summands k and n+1-k of the antisymmetrised q-Staver sum cancel."""
    terms = {}
    for k in range(1, n + 1):
        num = (ONE - mono(2 * k - n - 1)) * mono(-binom2(n - 2 * k + 1))
        terms[k] = num / (q_int(2 * k) ** 2 * q_binomial(n, k, 2) ** 2)
    pairs_ok = all((terms[k] + terms[n + 1 - k]).is_zero() for k in range(1, n + 1))
    return pairs_ok and rf_sum(terms.values()).is_zero()


def staver_summand(k):
    """[3k]/[2k]^2 C(2k,k) q^{-C(k,2)}."""
    return rf(q_int(3 * k) * q_binomial(2 * k, k), q_int(2 * k) ** 2) * mono(-binom2(k))


def _staver_details(m):
    out = []
    partial = ZERO
    for n in range(0, m):
        nxt = rf_sum(staver_F(n + 1, k) for k in range(1, n + 2))
        step = nxt - partial
        boundary = staver_F(n + 1, n + 1) + staver_G(n, n + 1) - staver_G(n, 1)
        den = 2 * q_int(2 * n + 2) ** 2
        three = (
            rf(q_int(n + 2) * q_binomial(2 * n + 3, n + 1)) * one_plus_q(n) * mono(-binom2(-n))
            - rf(q_int(n + 3) * q_binomial(2 * n + 1, n)) * one_plus_q(n + 1) * mono(-binom2(1 - n))
            + rf(q_int(3 * n + 3) * q_binomial(2 * n + 1, n)) * one_plus_q(n + 1) * mono(-binom2(n + 1))
        ) / den
        closed = staver_summand(n + 1)
        out.append((f"step n={n}", step == boundary == three == closed))
        partial = nxt
    return out


def _div1_details(m):
    if m % 2 == 0:
        raise ValueError("divergent1 telescoping needs odd m")
    out = []
    half = (m + 1) // 2
    for upper in (half, m):
        for k in range(1, m):
            lhs = rf_sum(div1_F(n, k - 1) for n in range(upper)) - rf_sum(div1_F(n, k) for n in range(upper))
            out.append((f"upper={upper} k={k}", lhs == div1_G(upper, k)))
    return out


def _he_details(N):
    out = []
    s0 = rf_sum(he_F(n, 0) for n in range(N + 1))
    sN = rf_sum(he_F(n, N) for n in range(N + 1))
    g = rf_sum(he_G(N + 1, k) for k in range(1, N + 1))
    out.append((f"N={N} sum F(n,0) - sum F(n,N) = sum G(N+1,k)", s0 - sN == g))
    out.append((f"N={N} F(n,N) vanishes", N == 0 or sN.is_zero()))
    scale = RationalFn(qpoch(1, 1, N, -1) ** 3)
    out.append((f"N={N} product form", scale * s0 == rf_sum(sun_qbino_summands(N))))
    return out


def sun_qbino_summands(N):
    """Summands of the product form of (-q;q)_N^3 * sum_n F(n,0) for the he pair."""
    out = []
    for k in range(1, N + 1):
        top = (
            q_int(N + 1)
            * q_binomial(2 * N + 2, N + 1)
            * q_binomial(2 * N - 2 * k + 2, N)
            * q_binomial(2 * N - 2 * k + 2, N - k + 1)
            * qpoch(1, 1, N, -1) ** 2
        )
        den = (1 + IntPoly.monomial(N + 1)) * qpoch(1, 1, N - k + 1, -1) ** 2
        out.append(rf(top * (-1) ** N, den) * mono(N - 2 * k + 2))
    return out


def sun_qbino_modulus(N):
    """(1+q^N)^2 [2N+1] C(2N,N)."""
    return (1 + IntPoly.monomial(N)) ** 2 * q_int(2 * N + 1) * q_binomial(2 * N, N)


def telescope_details(pair, m):
    """Per-identity outcomes of the pair's summed relations, as (label, ok) pairs."""
    if m < 1:
        raise ValueError("m must be >= 1")
    name = _pair(pair).name
    if name == "staver":
        return _staver_details(m)
    if name == "divergent1":
        return _div1_details(m)
    return _he_details(m)


def telescope_check(pair, m):
    return all(ok for _, ok in telescope_details(pair, m))


def subs_checks(m):
    """G((m+1)/2, k) in closed form and == 0 mod [m] Phi_m^2 for 1 <= k <= (m-1)/2.

    The closed form uses the exponent -(m^2-1)/8 - m*k.
    """
    if m % 2 == 0:
        raise ValueError("m must be odd")
    h = (m - 1) // 2
    modulus = q_int(m) * cyclotomic(m) ** 2
    out = []
    for k in range(1, h + 1):
        g = div1_G(h + 1, k)
        top = (1 + IntPoly.monomial(h + 2 * k)) * qpoch(1, 2, h + 1) * qpoch(2 * k + 1, 2, h) ** 2
        den = (1 - IntPoly.monomial(1)) * qpoch(1, 1, h) ** 3 * qpoch(1, 1, h, -1)
        closed = -RationalFn(top, den) * mono(-(m * m - 1) // 8 - m * k)
        rep = congruent_mod(g, 0, modulus, indices=[m])
        out.append((k, g == closed, rep))
    return out


def sun_qbino_checks(N):
    """Each product-form summand is == 0 mod (1+q^N)^2 [2N+1] C(2N,N)."""
    modulus = sun_qbino_modulus(N)
    return [(k, congruent_mod(t, 0, modulus).holds) for k, t in enumerate(sun_qbino_summands(N), start=1)]
