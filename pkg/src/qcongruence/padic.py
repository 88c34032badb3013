"""Exact q=1 checks: p-adic valuations of hypergeometric partial sums.

All sums are accumulated over the integers with a single power-of-two
denominator, so odd-prime valuations read off the numerator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .ring import IntPoly, RationalFn, eval_at, rf_sum

__all__ = [
    "PADIC_CATALOGUE",
    "PadicVerdict",
    "PreconditionError",
    "SunBinomialVerdict",
    "check",
    "check_divergent",
    "check_lift_conjectures",
    "check_mao_sun_identity",
    "check_sun_binomial",
    "check_sun_tauraso",
    "divergent_lhs",
    "is_prime",
    "primes",
    "v_p",
]


class PreconditionError(ValueError):
    """The prime or exponent falls outside the statement's hypotheses."""


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes(lo, hi):
    """Primes in [lo, hi]."""
    return [p for p in range(max(lo, 2), hi + 1) if is_prime(p)]


def v_p(x, p):
    """p-adic valuation of an integer or rational; ``math.inf`` for zero."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x = Fraction(x)
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@lru_cache(maxsize=None)
def central(k):
    return math.comb(2 * k, k)


# -- sums ---------------------------------------------------------------------


def _weighted_sum(upper, term, base):
    """sum_{k=0}^{upper} term(k) / base^k as an exact rational."""
    if upper < 0:
        return Fraction(0)
    total = sum(term(k) * base ** (upper - k) for k in range(upper + 1))
    return Fraction(total, base**upper)


def div1_sum(upper):
    """sum (3k+1) C(2k,k)^3 / 16^k."""
    return _weighted_sum(upper, lambda k: (3 * k + 1) * central(k) ** 3, 16)


def div3_sum(upper):
    """sum (3k+1) C(2k,k)^3 (-1)^k / 8^k."""
    return _weighted_sum(upper, lambda k: (3 * k + 1) * central(k) ** 3 * (-1) ** k, 8)


def div2_sum(upper):
    """sum (10k^2+6k+1) C(2k,k)^5 / 256^k."""
    return _weighted_sum(upper, lambda k: (10 * k * k + 6 * k + 1) * central(k) ** 5, 256)


def div2_alt_sum(upper):
    """sum (10k^2+6k+1) C(2k,k)^5 (-1)^k / 256^k."""
    return _weighted_sum(upper, lambda k: (10 * k * k + 6 * k + 1) * central(k) ** 5 * (-1) ** k, 256)


def swisher_sum(upper):
    """sum (6k+1) C(2k,k)^3 / 256^k."""
    return _weighted_sum(upper, lambda k: (6 * k + 1) * central(k) ** 3, 256)


def _half(m):
    return (m - 1) // 2


def _full(m):
    return m - 1


def _legendre_m1(p):
    return (-1) ** ((p - 1) // 2)


# -- verdicts -----------------------------------------------------------------


@dataclass
class PadicVerdict:
    id: str
    prime: int
    r: int
    required_order: int
    observed_order: float
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self):
        return self.observed_order >= self.required_order

    def __bool__(self):
        return self.holds


@dataclass
class SunBinomialVerdict:
    id: str
    n: int
    total: int
    modulus: int

    @property
    def holds(self):
        return self.total % self.modulus == 0

    def __bool__(self):
        return self.holds


def _verdict(id, p, r, lhs, rhs, required):
    return PadicVerdict(id, p, r, required, v_p(lhs - rhs, p), lhs, rhs)


def _require(cond, msg):
    if not cond:
        raise PreconditionError(msg)


# (summation, upper-index rule, minimum prime, right side, required order)
_DIVERGENT = {
    "div1": (div1_sum, _half, 3, lambda p, r: p**r, lambda r: r + 2),
    "div2": (div2_sum, _half, 5, lambda p, r: p ** (2 * r), lambda r: 2 * r + 3),
    "div3": (div3_sum, _half, 3, lambda p, r: p**r * _legendre_m1(p), lambda r: r + 2),
    "div_gen_r1": (div1_sum, _half, 3, lambda p, r: p**r, lambda r: r + 2),
    "div_gen_r2": (div1_sum, _full, 3, lambda p, r: p**r, lambda r: r + 2),
    "div3_pr": (div3_sum, _half, 3, lambda p, r: p**r * _legendre_m1(p), lambda r: r + 2),
    "sun_hu": (div1_sum, _full, 5, lambda p, r: p**r, lambda r: r + 3),
    # variants: alternating div2 weight; div3_pr sign taken from p^r instead of p
    "div2_alternating": (div2_alt_sum, _half, 5, lambda p, r: p ** (2 * r), lambda r: 2 * r + 3),
    "div3_pr_power_sign": (div3_sum, _half, 3, lambda p, r: p**r * (-1) ** ((p**r - 1) // 2), lambda r: r + 2),
}

_SINGLE_PRIME = {"div1", "div2", "div3", "div2_alternating"}


def _check_pr(id, p, r, min_p):
    _require(is_prime(p), f"{id}: {p} is not prime")
    _require(p >= min_p, f"{id}: needs p >= {min_p}, got {p}")
    _require(r >= 1, f"{id}: needs r >= 1, got {r}")
    if id in _SINGLE_PRIME:
        _require(r == 1, f"{id}: stated for r = 1 only")


def divergent_lhs(id, p, r=1):
    summation, upper, min_p, _, _ = _DIVERGENT[id]
    _check_pr(id, p, r, min_p)
    return summation(upper(p**r))


def check_divergent(id, p, r=1):
    """v_p(S - RHS) against the stated modulus exponent."""
    if id not in _DIVERGENT:
        raise KeyError(f"unknown divergent check {id!r}")
    _, _, _, rhs, required = _DIVERGENT[id]
    lhs = divergent_lhs(id, p, r)
    return _verdict(id, p, r, lhs, Fraction(rhs(p, r)), required(r))


def check_sun_binomial(id, n):
    """sum (3k+1) C(2k,k)^3 w^{n-k} divisible by 4(2n+1)C(2n,n); w = 16 or -8."""
    weights = {"sun1": 16, "sun2": -8}
    if id not in weights:
        raise KeyError(f"unknown binomial check {id!r}")
    _require(n >= 0, "n must be >= 0")
    w = weights[id]
    total = sum((3 * k + 1) * central(k) ** 3 * w ** (n - k) for k in range(n + 1))
    return SunBinomialVerdict(id, n, total, 4 * (2 * n + 1) * central(n))


def check_sun_tauraso(p):
    """sum_{k=1}^{p-1} C(2k,k)/k has p-adic order >= 2."""
    _require(is_prime(p) and p > 3, f"st: needs a prime p > 3, got {p}")
    s = sum(Fraction(central(k), k) for k in range(1, p))
    return _verdict("st", p, 1, s, Fraction(0), 2)


def check_lift_conjectures(id, p, r, alternating_rhs=False):
    """Prime-power refinements comparing the p^r sum to p times the p^{r-1} sum.

    ``conj5c``/``conj5d`` use the non-alternating sum on the right unless
    ``alternating_rhs`` is set.
    """
    _require(is_prime(p) and p > 2, f"{id}: needs an odd prime, got {p}")
    _require(r >= 1, f"{id}: needs r >= 1, got {r}")
    big, small = p**r, p ** (r - 1)
    d3 = 1 if p == 3 else 0
    eps = _legendre_m1(p)
    if id == "conj5a":
        return _verdict(id, p, r, div1_sum(_half(big)), p * div1_sum(_half(small)), 3 * r)
    if id == "conj5b":
        return _verdict(id, p, r, div1_sum(_full(big)), p * div1_sum(_full(small)), 4 * r - d3)
    short = div3_sum if alternating_rhs else div1_sum
    if id == "conj5c":
        return _verdict(id, p, r, div3_sum(_half(big)), eps * p * short(_half(small)), 3 * r + d3)
    if id == "conj5d":
        return _verdict(id, p, r, div3_sum(_full(big)), eps * p * short(_full(small)), 3 * r)
    if id == "swisher_j3":
        _require(p > 3, f"{id}: needs p > 3, got {p}")
        return _verdict(id, p, r, swisher_sum(_half(big)), eps * p * swisher_sum(_half(small)), 4 * r)
    raise KeyError(f"unknown lift conjecture {id!r}")


# -- Mao-Sun identity ---------------------------------------------------------

X = IntPoly((0, 1))


def binom_x(shift, m):
    """C(x + shift, m) as a polynomial in x with rational coefficients."""
    num = IntPoly((1,))
    for j in range(m):
        num = num * (X + (shift - j))
    return RationalFn(num, IntPoly(math.factorial(m)))


def mao_sun_sides(n):
    lhs = rf_sum(RationalFn(IntPoly(math.comb(n, k) ** 2)) * binom_x(k, 2 * n + 1) for k in range(n + 1))
    inner = rf_sum(
        RationalFn(2 * X - 3 * k) * binom_x(0, k) ** 2 * central(k) for k in range(n + 1)
    )
    rhs = inner / ((4 * n + 2) * central(n))
    return lhs, rhs


def check_mao_sun_identity(n):
    """Both sides agree as polynomials in x, and at x = -1/2 by direct rational sums."""
    _require(n >= 0, "n must be >= 0")
    lhs, rhs = mao_sun_sides(n)
    if lhs != rhs:
        return False
    x = Fraction(-1, 2)
    direct_l = sum(math.comb(n, k) ** 2 * _binom_at(x + k, 2 * n + 1) for k in range(n + 1))
    direct_r = sum((2 * x - 3 * k) * _binom_at(x, k) ** 2 * central(k) for k in range(n + 1))
    direct_r /= (4 * n + 2) * central(n)
    return direct_l == direct_r == eval_at(lhs, x)


def _binom_at(x, m):
    out = Fraction(1)
    for j in range(m):
        out *= x - j
    return out / math.factorial(m)


# -- catalogue ----------------------------------------------------------------

PADIC_CATALOGUE = {
    "div1": ("congruence", "odd prime p, r = 1", "sum_{k=0}^{(p-1)/2} (3k+1) C(2k,k)^3/16^k == p mod p^3"),
    "div2": ("congruence", "prime p > 3, r = 1",
             "sum_{k=0}^{(p-1)/2} (10k^2+6k+1) C(2k,k)^5/256^k == p^2 mod p^5"),
    "div3": ("congruence", "odd prime p, r = 1",
             "sum_{k=0}^{(p-1)/2} (3k+1) C(2k,k)^3 (-1)^k/8^k == p (-1)^{(p-1)/2} mod p^3"),
    "div_gen_r1": ("congruence", "odd prime p, r >= 1",
                   "sum_{k=0}^{(p^r-1)/2} (3k+1) C(2k,k)^3/16^k == p^r mod p^{r+2}"),
    "div_gen_r2": ("congruence", "odd prime p, r >= 1",
                   "sum_{k=0}^{p^r-1} (3k+1) C(2k,k)^3/16^k == p^r mod p^{r+2}"),
    "div3_pr": ("congruence", "odd prime p, r >= 1",
                "sum_{k=0}^{(p^r-1)/2} (3k+1) C(2k,k)^3 (-1)^k/8^k == p^r (-1)^{(p-1)/2} mod p^{r+2}"),
    "sun_hu": ("conjecture", "prime p > 3, r >= 1",
               "sum_{k=0}^{p^r-1} (3k+1) C(2k,k)^3/16^k == p^r mod p^{r+3}"),
    "div2_alternating": ("variant", "prime p > 3, r = 1",
                         "sum_{k=0}^{(p-1)/2} (10k^2+6k+1) C(2k,k)^5 (-1)^k/256^k == p^2 mod p^5"),
    "div3_pr_power_sign": ("variant", "odd prime p, r >= 1",
                           "sum_{k=0}^{(p^r-1)/2} (3k+1) C(2k,k)^3 (-1)^k/8^k == p^r (-1)^{(p^r-1)/2} mod p^{r+2}"),
    "sun1": ("congruence", "n >= 0", "sum_{k=0}^{n} (3k+1) C(2k,k)^3 16^{n-k} == 0 mod 4(2n+1)C(2n,n)"),
    "sun2": ("congruence", "n >= 0", "sum_{k=0}^{n} (3k+1) C(2k,k)^3 (-8)^{n-k} == 0 mod 4(2n+1)C(2n,n)"),
    "st": ("congruence", "prime p > 3", "sum_{k=1}^{p-1} C(2k,k)/k == 0 mod p^2"),
    "mao_sun": ("identity", "n >= 0",
                "sum_k C(n,k)^2 C(x+k,2n+1) = sum_k (2x-3k) C(x,k)^2 C(2k,k) / ((4n+2) C(2n,n))"),
    "conj5a": ("conjecture", "odd prime p, r >= 1",
               "S_half(p^r) == p S_half(p^{r-1}) mod p^{3r}, S = sum (3k+1) C(2k,k)^3/16^k"),
    "conj5b": ("conjecture", "odd prime p, r >= 1",
               "S_full(p^r) == p S_full(p^{r-1}) mod p^{4r - [p=3]}"),
    "conj5c": ("conjecture", "odd prime p, r >= 1",
               "T_half(p^r) == p (-1)^{(p-1)/2} S_half(p^{r-1}) mod p^{3r + [p=3]}, T = sum (3k+1) C(2k,k)^3 (-1)^k/8^k"),
    "conj5d": ("conjecture", "odd prime p, r >= 1",
               "T_full(p^r) == p (-1)^{(p-1)/2} S_full(p^{r-1}) mod p^{3r}"),
    "swisher_j3": ("conjecture", "prime p > 3, r >= 1",
                   "sum_{k=0}^{(p^r-1)/2} (6k+1) C(2k,k)^3/256^k == (-1)^{(p-1)/2} p (same sum to (p^{r-1}-1)/2)"
                   " mod p^{4r}"),
}

PRIME_IDS = ("div1", "div2", "div3", "div_gen_r1", "div_gen_r2", "div3_pr", "sun_hu", "st",
             "div2_alternating", "div3_pr_power_sign",
             "conj5a", "conj5b", "conj5c", "conj5d", "swisher_j3")
N_IDS = ("sun1", "sun2", "mao_sun")


def check(id, p=None, r=1, n=None):
    """Dispatch by catalogue id."""
    if id in _DIVERGENT:
        return check_divergent(id, p, r)
    if id in ("sun1", "sun2"):
        return check_sun_binomial(id, n)
    if id == "st":
        return check_sun_tauraso(p)
    if id == "mao_sun":
        return check_mao_sun_identity(n)
    return check_lift_conjectures(id, p, r)
