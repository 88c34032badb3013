"""Exact arithmetic in Z[q] and its fraction field.

Polynomials are dense tuples of Python ints, lowest degree first.  Large
products go through Kronecker substitution (pack the coefficients into one
big integer, multiply, unpack), and GCDs use the heuristic integer-image
algorithm with a primitive PRS fallback.  Both lean on CPython/GMP big-int
speed instead of coefficient-by-coefficient loops.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

import gmpy2

__all__ = [
    "IntPoly",
    "RationalFn",
    "PoleError",
    "Q",
    "poly_gcd",
    "prs_gcd",
    "gcd_cofactors",
    "divides_exactly",
    "eval_at",
    "rf_prod",
    "rf_sum",
]

# Below this operand length schoolbook multiplication beats packing.
_KRONECKER_MIN = 24
_HEU_ATTEMPTS = 6


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a root of its denominator."""


def _strip(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _maxnorm(c):
    return max(abs(x) for x in c) if c else 0


# -- Kronecker substitution -------------------------------------------------


def _pack(c, nbytes):
    """Value of the polynomial at q = 2**(8*nbytes); coefficients may overflow a digit."""
    pos = bytearray(len(c) * nbytes)
    neg = bytearray(len(c) * nbytes)
    bits = 8 * nbytes
    extra = 0
    for i, x in enumerate(c):
        if not x:
            continue
        if x.bit_length() > bits:
            extra += x << (bits * i)
        elif x > 0:
            pos[i * nbytes:(i + 1) * nbytes] = x.to_bytes(nbytes, "little")
        else:
            neg[i * nbytes:(i + 1) * nbytes] = (-x).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little") + extra


def _unpack(v, nbytes):
    """Balanced base-2**(8*nbytes) digits of ``v``; digits lie in [-B/2, B/2)."""
    v = int(v)
    if v < 0:
        return tuple(-x for x in _unpack(-v, nbytes))
    bits = 8 * nbytes
    m = v.bit_length() // bits + 2
    half = 1 << (bits - 1)
    offset = int.from_bytes(half.to_bytes(nbytes, "little") * m, "little")
    raw = (v + offset).to_bytes(m * nbytes, "little")
    out = [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") - half for i in range(m)]
    return _strip(out)


def _nbytes_for(bound):
    # digits must satisfy |d| < 2**(bits-1)
    return (bound.bit_length() + 1 + 7) // 8 or 1


def _mul(a, b):
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    nz = [(j, y) for j, y in enumerate(b) if y]
    if len(nz) < _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for j, y in nz:
            for i, x in enumerate(a):
                if x:
                    out[i + j] += x * y
        return _strip(out)
    nbytes = _nbytes_for(len(b) * _maxnorm(a) * _maxnorm(b))
    prod = gmpy2.mpz(_pack(a, nbytes)) * gmpy2.mpz(_pack(b, nbytes))
    return _unpack(prod, nbytes)


def _add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return _strip(out)


def _scale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def _content(c):
    if not c:
        return 0
    g = math.gcd(*c)
    return g


def _exact_quo(f, g):
    """Quotient f/g in Z[q], or None when g does not divide f there."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    if not f:
        return ()
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return None
    lc = g[-1]
    tail = [(j, y) for j, y in enumerate(g[:-1]) if y]
    r = list(f)
    quo = [0] * (len(f) - dg)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = r[i + dg]
        if c:
            qc, rem = divmod(c, lc)
            if rem:
                return None
            quo[i] = qc
            for j, y in tail:
                r[i + j] -= qc * y
    for x in r[:dg]:
        if x:
            return None
    return tuple(quo)


def _divmod_q(f, g):
    """Division with remainder over Q; coefficients are Fractions."""
    dg = len(g) - 1
    lc = g[-1]
    r = [Fraction(x) for x in f]
    if len(f) - 1 < dg:
        return (), tuple(r)
    quo = [Fraction(0)] * (len(f) - dg)
    for i in range(len(f) - 1 - dg, -1, -1):
        c = r[i + dg]
        if c:
            qc = c / lc
            quo[i] = qc
            for j in range(dg + 1):
                r[i + j] -= qc * g[j]
    return _strip(quo), _strip(r[:dg])


def _prem(f, g):
    """Pseudo-remainder lc(g)**(deg f - deg g + 1) * f mod g."""
    dg = len(g) - 1
    lc = g[-1]
    r = list(f)
    steps = len(f) - 1 - dg + 1
    while len(r) - 1 >= dg and r:
        c = r[-1]
        shift = len(r) - 1 - dg
        r = [x * lc for x in r]
        for j in range(dg + 1):
            r[shift + j] -= c * g[j]
        steps -= 1
        r = list(_strip(r))
    if steps > 0:
        r = [x * lc**steps for x in r]
    return _strip(r)


def _primitive(c):
    if not c:
        return 0, ()
    g = _content(c)
    if c[-1] < 0:
        g = -g
    return g, tuple(x // g for x in c)


def _valuation(c):
    for i, x in enumerate(c):
        if x:
            return i
    return None


# -- GCD --------------------------------------------------------------------


def _prs_gcd_primitive(f, g):
    """GCD of primitive polynomials by the primitive remainder sequence."""
    if len(f) < len(g):
        f, g = g, f
    while g:
        r = _prem(f, g)
        f, g = g, _primitive(r)[1]
    return _primitive(f)[1]


def _heu_gcd_primitive(f, g):
    """Heuristic GCD of primitive nonconstant polynomials; None on failure."""
    bound = 2 * min(_maxnorm(f), _maxnorm(g)) + 2
    nbytes = _nbytes_for(bound)
    for _ in range(_HEU_ATTEMPTS):
        ff = gmpy2.mpz(_pack(f, nbytes))
        gg = gmpy2.mpz(_pack(g, nbytes))
        hh = gmpy2.gcd(ff, gg)
        h = _primitive(_unpack(hh, nbytes))[1]
        if h:
            hv = gmpy2.mpz(_pack(h, nbytes))
            if ff % hv == 0 and gg % hv == 0:
                cff = _unpack(ff // hv, nbytes)
                cfg = _unpack(gg // hv, nbytes)
                if _mul(h, cff) == f and _mul(h, cfg) == g:
                    return h, cff, cfg
        nbytes = nbytes * 2 + 1
    return None


def _gcd_cofactors(f, g):
    """(h, f/h, g/h) with h the GCD in Z[q], positive leading coefficient."""
    if not f and not g:
        raise ValueError("gcd of two zero polynomials is undefined")
    if not f:
        s = 1 if g[-1] > 0 else -1
        return _scale(g, s), (), (s,)
    if not g:
        s = 1 if f[-1] > 0 else -1
        return _scale(f, s), (s,), ()
    if f == g:
        s = 1 if f[-1] > 0 else -1
        return _scale(f, s), (s,), (s,)
    # common power of q
    vf, vg = _valuation(f), _valuation(g)
    v = min(vf, vg)
    f0, g0 = f[vf:], g[vg:]
    cf, pf = _primitive(f0)
    cg, pg = _primitive(g0)
    c = math.gcd(cf, cg)
    if len(pf) == 1 or len(pg) == 1:
        h = (1,)
        cff, cfg = pf, pg
    else:
        res = _heu_gcd_primitive(pf, pg)
        if res is None:
            h = _prs_gcd_primitive(pf, pg)
            cff, cfg = _exact_quo(pf, h), _exact_quo(pg, h)
        else:
            h, cff, cfg = res
    h = (0,) * v + _scale(h, c)
    cff = (0,) * (vf - v) + _scale(cff, cf // c)
    cfg = (0,) * (vg - v) + _scale(cfg, cg // c)
    return h, cff, cfg


# -- IntPoly ----------------------------------------------------------------


class IntPoly:
    """Immutable polynomial in q with integer coefficients (lowest degree first)."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        self.coeffs = _strip(tuple(int(c) for c in coeffs))
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def monomial(cls, exp, coeff=1):
        if exp < 0:
            raise ValueError("IntPoly exponents must be non-negative")
        return cls._raw((0,) * exp + (coeff,) if coeff else ())

    @classmethod
    def from_dict(cls, terms):
        if not terms:
            return cls._raw(())
        out = [0] * (max(terms) + 1)
        for e, c in terms.items():
            out[e] += c
        return cls._raw(_strip(out))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_monomial(self):
        return sum(1 for c in self.coeffs if c) == 1

    def valuation(self):
        return _valuation(self.coeffs)

    def content(self):
        return _content(self.coeffs)

    def primitive(self):
        """Primitive part with positive leading coefficient."""
        return IntPoly._raw(_primitive(self.coeffs)[1])

    def terms(self):
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return IntPoly._raw(_add(self.coeffs, o.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly._raw(_scale(self.coeffs, other))
        if isinstance(other, IntPoly):
            return IntPoly._raw(_mul(self.coeffs, other.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly._raw((1,)), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def shift(self, e):
        """Multiply by q**e (e >= 0)."""
        if not self.coeffs:
            return self
        return IntPoly._raw((0,) * e + self.coeffs)

    def inflate(self, step):
        """Substitute q -> q**step."""
        if step == 1 or len(self.coeffs) <= 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * step + 1)
        out[::step] = self.coeffs
        return IntPoly._raw(tuple(out))

    def exact_div(self, other):
        """Quotient in Z[q]; raises ArithmeticError if the division is not exact."""
        o = self._coerce(other)
        q = _exact_quo(self.coeffs, o.coeffs)
        if q is None:
            raise ArithmeticError("inexact polynomial division")
        return IntPoly._raw(q)

    def try_div(self, other):
        o = self._coerce(other)
        q = _exact_quo(self.coeffs, o.coeffs)
        return None if q is None else IntPoly._raw(q)

    def divmod_q(self, other):
        """Quotient and remainder over Q (Fraction coefficients, as tuples)."""
        o = self._coerce(other)
        if not o:
            raise ZeroDivisionError("polynomial division by zero")
        return _divmod_q(self.coeffs, o.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_fraction(self, r):
        """Exact value at a rational point (homogeneous Horner, one division)."""
        r = Fraction(r)
        a, b = r.numerator, r.denominator
        if not self.coeffs:
            return Fraction(0)
        d = len(self.coeffs) - 1
        acc = 0
        bp = 1
        for c in reversed(self.coeffs):
            acc = acc * a + c * bp
            bp *= b
        return Fraction(acc, b**d)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)!r})"

    def __str__(self):
        return _format_terms(self.terms())

    def to_sparse(self):
        """[[exponent, coefficient], ...] for serialisation."""
        return [[e, c] for e, c in self.terms()]


def _format_terms(terms, var="q"):
    if not terms:
        return "0"
    parts = []
    for e, c in reversed(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- gcd / divisibility helpers ---------------------------------------------


def gcd_cofactors(a, b):
    """Return (g, a/g, b/g) where g = gcd(a, b) in Z[q] (content included)."""
    h, x, y = _gcd_cofactors(a.coeffs, b.coeffs)
    return IntPoly._raw(h), IntPoly._raw(x), IntPoly._raw(y)


def poly_gcd(a, b):
    """Primitive GCD of ``a`` and ``b`` with positive leading coefficient."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    return gcd_cofactors(a, b)[0].primitive()


def prs_gcd(a, b):
    """Primitive GCD via the primitive PRS (slow reference path)."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    g = _prs_gcd_primitive(_primitive(a.coeffs)[1], _primitive(b.coeffs)[1])
    return IntPoly._raw(_primitive(g)[1])


def divides_exactly(p, f):
    """Test ``p | f`` in Q[q].

    Returns ``(True, f/p)`` or ``(False, None)``; the quotient is a
    RationalFn so a non-primitive ``p`` yields a constant denominator.
    """
    if p.is_zero():
        raise ZeroDivisionError("divisibility by the zero polynomial")
    if f.is_zero():
        return True, RationalFn.zero()
    cp, pp = _primitive(p.coeffs)
    cf, pf = _primitive(f.coeffs)
    quo = _exact_quo(pf, pp)
    if quo is None:
        return False, None
    return True, RationalFn(IntPoly._raw(quo) * cf, IntPoly(cp))


# -- RationalFn -------------------------------------------------------------


class RationalFn:
    """Normalised quotient num/den of integer polynomials.

    ``num`` and ``den`` are coprime in Q[q], their integer contents are
    coprime, and ``den`` has a positive leading coefficient, so equal
    functions have equal representations.  Scalar denominators (the 24 in
    (n^2-1)/24) live as constant factors of ``den``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1, _normalized=False):
        num = num if isinstance(num, IntPoly) else IntPoly(num)
        den = den if isinstance(den, IntPoly) else IntPoly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls):
        return cls(IntPoly._raw(()), IntPoly._raw((1,)), _normalized=True)

    @classmethod
    def one(cls):
        return cls(IntPoly._raw((1,)), IntPoly._raw((1,)), _normalized=True)

    @classmethod
    def monomial(cls, exp, coeff=1):
        """coeff * q**exp for any integer exp."""
        if coeff == 0:
            return cls.zero()
        if exp >= 0:
            return cls(IntPoly.monomial(exp, coeff), IntPoly._raw((1,)), _normalized=True)
        return cls(IntPoly._raw((coeff,)), IntPoly.monomial(-exp), _normalized=True)

    @classmethod
    def from_fraction(cls, x):
        x = Fraction(x)
        return cls(IntPoly(x.numerator), IntPoly(x.denominator), _normalized=True)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, IntPoly):
            return RationalFn(other, IntPoly._raw((1,)), _normalized=True)
        if isinstance(other, int):
            return RationalFn(IntPoly(other), IntPoly._raw((1,)), _normalized=True)
        if isinstance(other, Fraction):
            return RationalFn.from_fraction(other)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant() and self.den.lc == 1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __neg__(self):
        return RationalFn(-self.num, self.den, _normalized=True)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_add(self, -o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(self, o)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        num, den = self.den, self.num
        if den.lc < 0:
            num, den = -num, -den
        return RationalFn(num, den, _normalized=True)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _rf_mul(self, o.inverse())

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFn(self.num**e, self.den**e, _normalized=True)

    def __call__(self, r):
        return eval_at(self, r)

    def __repr__(self):
        return f"RationalFn({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == IntPoly._raw((1,)):
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _normalize(num, den):
    if num.is_zero():
        return IntPoly._raw(()), IntPoly._raw((1,))
    _, n, d = gcd_cofactors(num, den)
    return _fix_scalars(n, d)


def _fix_scalars(n, d):
    c = math.gcd(n.content(), d.content())
    if d.lc < 0:
        c = -c
    if c != 1:
        n = IntPoly._raw(tuple(x // c for x in n.coeffs))
        d = IntPoly._raw(tuple(x // c for x in d.coeffs))
    return n, d


def _rf_mul(a, b):
    if a.num.is_zero() or b.num.is_zero():
        return RationalFn.zero()
    # inputs are reduced, so cross-cancellation suffices
    _, an, bd = gcd_cofactors(a.num, b.den)
    _, bn, ad = gcd_cofactors(b.num, a.den)
    n, d = _fix_scalars(an * bn, ad * bd)
    return RationalFn(n, d, _normalized=True)


def _rf_add(a, b):
    if a.num.is_zero():
        return b
    if b.num.is_zero():
        return a
    if a.den == b.den:
        t = a.num + b.num
        if t.is_zero():
            return RationalFn.zero()
        _, n, d = gcd_cofactors(t, a.den)
        n, d = _fix_scalars(n, d)
        return RationalFn(n, d, _normalized=True)
    g, ad, bd = gcd_cofactors(a.den, b.den)
    t = a.num * bd + b.num * ad
    if t.is_zero():
        return RationalFn.zero()
    _, n, g2 = gcd_cofactors(t, g)
    n, d = _fix_scalars(n, ad * bd * g2)
    return RationalFn(n, d, _normalized=True)


def rf_sum(terms):
    """Sum of an iterable of RationalFn values."""
    return reduce(_rf_add, (RationalFn._coerce(t) for t in terms), RationalFn.zero())


def rf_prod(terms):
    return reduce(_rf_mul, (RationalFn._coerce(t) for t in terms), RationalFn.one())


def eval_at(f, r):
    """Exact value of ``f`` at the rational point ``r``."""
    f = RationalFn._coerce(f)
    r = Fraction(r)
    num = f.num.eval_fraction(r)
    den = f.den.eval_fraction(r)
    if den == 0:
        raise PoleError(f"pole at q = {r}")
    return num / den


Q = IntPoly._raw((0, 1))
