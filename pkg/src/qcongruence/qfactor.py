"""q-integers, q-shifted factorials, Gaussian binomials and cyclotomic polynomials."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache

from .ring import IntPoly, RationalFn

__all__ = [
    "CyclotomicCache",
    "QPochSpec",
    "cyclotomic",
    "cyclotomic_cache",
    "divisors",
    "phi_order",
    "poch_phi_exponent",
    "q_binomial",
    "q_int",
    "q_int_rf",
    "q_pochhammer",
    "qpoch",
    "qpoch_rf",
    "radical_qint",
]

ONE = IntPoly((1,))


def divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def q_int(n):
    """[n] = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return IntPoly((1,) * n)


def q_int_rf(n):
    """[n] = (1 - q^n)/(1 - q) for any integer n, as a rational function."""
    if n >= 0:
        return RationalFn(q_int(n))
    # [-m] = -q^{-m} [m]
    return RationalFn.monomial(n, -1) * q_int(-n)


@dataclass(frozen=True)
class QPochSpec:
    """(sign * q^shift; q^step)_length."""

    sign: int = 1
    shift: int = 1
    step: int = 1
    length: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.shift < 0:
            raise ValueError("shift must be >= 0")
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.length < 0:
            raise ValueError("length must be >= 0")


@lru_cache(maxsize=4096)
def qpoch(shift, step, length, sign=1):
    """Expanded product prod_{j<length} (1 - sign*q^(shift + step*j))."""
    if length < 0:
        raise ValueError("negative Pochhammer length")
    if length == 0:
        return ONE
    prev = qpoch(shift, step, length - 1, sign)
    e = shift + step * (length - 1)
    if e < 0:
        raise ValueError("use qpoch_rf for negative exponents")
    # multiply by (1 - sign*q^e) without a general product
    c = list(prev.coeffs) + [0] * e
    for i, x in enumerate(prev.coeffs):
        if x:
            c[i + e] -= sign * x
    return IntPoly(c)


def qpoch_rf(shift, step, length, sign=1):
    """Like :func:`qpoch` but allows negative shifts (Laurent factors)."""
    if shift >= 0:
        return RationalFn(qpoch(shift, step, length, sign))
    out = RationalFn.one()
    for j in range(length):
        e = shift + step * j
        if e >= 0:
            out = out * qpoch(e, step, length - j, sign)
            break
        # 1 - s q^e = (q^{-e} - s) / q^{-e}
        out = out * RationalFn(IntPoly.monomial(-e) - sign, IntPoly.monomial(-e))
    return out


def q_pochhammer(spec):
    return qpoch(spec.shift, spec.step, spec.length, spec.sign)


@lru_cache(maxsize=4096)
def _qbinom(m, n):
    if n > m - n:
        n = m - n
    if n == 0:
        return ONE
    # C(m, n) = C(m-1, n-1) * (1 - q^m) / (1 - q^n)
    prev = _qbinom(m - 1, n - 1)
    num = prev * (ONE - IntPoly.monomial(m))
    out = num.try_div(ONE - IntPoly.monomial(n))
    if out is None:
        raise ArithmeticError(f"inexact q-binomial division at ({m}, {n})")
    return out


def q_binomial(m, n, step=1):
    """Gaussian binomial in base q^step; zero unless 0 <= n <= m."""
    if step < 1:
        raise ValueError("step must be >= 1")
    if n < 0 or m < 0 or n > m:
        return IntPoly(())
    return _qbinom(m, n).inflate(step)


class CyclotomicCache:
    """Phi_n(q) by divisor recursion; thread-safe writes, unbounded reads.

    Indices above ``max_n`` are computed but not stored.
    """

    def __init__(self, max_n=64):
        self.max_n = max_n
        self.table = {}
        self._lock = threading.Lock()

    def get(self, n):
        if n < 1:
            raise ValueError(f"cyclotomic index must be >= 1, got {n}")
        hit = self.table.get(n)
        if hit is not None:
            return hit
        p = IntPoly.monomial(n) - 1
        for d in divisors(n)[:-1]:
            p = p.exact_div(self.get(d))
        if n <= self.max_n:
            with self._lock:
                self.table.setdefault(n, p)
        return p

    def warm(self, upto=None):
        for n in range(1, (upto or self.max_n) + 1):
            self.get(n)
        return self


cyclotomic_cache = CyclotomicCache()


def cyclotomic(n):
    return cyclotomic_cache.get(n)


def radical_qint(n):
    """[n] rebuilt as the product of Phi_t over divisors t > 1 of n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    out = ONE
    for t in divisors(n)[1:]:
        out = out * cyclotomic(t)
    return out


def _poly_order(f, phi):
    k = 0
    while True:
        nxt = f.try_div(phi)
        if nxt is None:
            return k
        f = nxt
        k += 1


def phi_order(f, n):
    """Multiplicity of Phi_n(q) in f (numerator minus denominator)."""
    if isinstance(f, int):
        f = IntPoly(f)
    if isinstance(f, IntPoly):
        f = RationalFn(f)
    if f.is_zero():
        raise ValueError("the order of the zero function is infinite")
    phi = cyclotomic(n)
    return _poly_order(f.num, phi) - _poly_order(f.den, phi)


def poch_phi_exponent(spec, t):
    """Exponent of Phi_t in a q-shifted factorial by floor sums.

    Covers (q;q)_N, (q;q^2)_N and (q^{2k+1};q^2)_N; t must exceed 1 and be
    odd for the step-2 shapes.
    """
    if t <= 1:
        raise ValueError("Phi_1 is excluded; need t > 1")
    n = spec.length
    if spec.sign == 1 and spec.step == 1 and spec.shift == 1:
        return n // t
    if spec.sign == 1 and spec.step == 2 and spec.shift % 2 == 1:
        if t % 2 == 0:
            raise ValueError("step-2 formulas need odd t")
        k = (spec.shift - 1) // 2
        return (2 * n + 2 * k) // t + k // t - (n + k) // t - (2 * k) // t
    raise ValueError(f"no floor formula for {spec}")
