"""Congruence of rational functions modulo a polynomial.

``a == b (mod P)`` holds when the reduced numerator of ``a - b`` is
divisible by ``P`` and the reduced denominator is coprime to ``P``.  When
the denominator shares a factor with ``P`` the relation is undefined and
the report says NOT-APPLICABLE instead of false.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

from .qfactor import cyclotomic, divisors, phi_order
from .ring import RationalFn, divides_exactly, poly_gcd

__all__ = [
    "CongruenceReport",
    "Verdict",
    "congruent_mod",
    "congruent_mod_phi_power",
    "describe_modulus",
]

log = logging.getLogger(__name__)


class Verdict:
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass
class CongruenceReport:
    holds: bool
    modulus_description: str
    observed_orders: dict = field(default_factory=dict)
    required_orders: dict = field(default_factory=dict)
    coprimality_ok: bool = True
    cofactor_degree: int = -1
    content_ok: bool = True
    numerator_content: int = 0
    elapsed: float = 0.0
    details: list = field(default_factory=list)

    @property
    def not_applicable(self):
        return not self.coprimality_ok

    @property
    def verdict(self):
        if not self.coprimality_ok:
            return Verdict.NOT_APPLICABLE
        return Verdict.HOLDS if self.holds else Verdict.FAILS

    def __bool__(self):
        return self.holds


def _as_rf(x):
    if isinstance(x, RationalFn):
        return x
    return RationalFn(x)


def _orders(d, indices):
    if d.is_zero():
        return {t: "inf" for t in indices}
    return {t: phi_order(d, t) for t in indices}


def congruent_mod(a, b, modulus, *, indices=(), description=None):
    """Check ``a == b (mod modulus)`` and report observed cyclotomic orders.

    ``indices`` lists cyclotomic indices whose orders in ``a - b`` (and in
    the modulus) should be recorded for diagnosis.
    """
    t0 = time.perf_counter()
    if modulus.is_zero() or modulus.is_constant():
        raise ValueError("modulus must be a nonconstant polynomial")
    desc = description or str(modulus)
    diff = _as_rf(a) - _as_rf(b)
    required = {t: phi_order(modulus, t) for t in indices}
    if diff.is_zero():
        return CongruenceReport(
            holds=True,
            modulus_description=desc,
            observed_orders=_orders(diff, indices),
            required_orders=required,
            elapsed=time.perf_counter() - t0,
        )
    shared = poly_gcd(diff.den, modulus)
    if not shared.is_constant():
        return CongruenceReport(
            holds=False,
            modulus_description=desc,
            observed_orders=_orders(diff, indices),
            required_orders=required,
            coprimality_ok=False,
            numerator_content=diff.num.content(),
            elapsed=time.perf_counter() - t0,
        )
    ok, quotient = divides_exactly(modulus, diff.num)
    content = diff.num.content()
    content_ok = content % modulus.content() == 0
    if ok and not content_ok:
        log.warning("numerator content %d not divisible by modulus content %d", content, modulus.content())
    return CongruenceReport(
        holds=ok,
        modulus_description=desc,
        observed_orders=_orders(diff, indices),
        required_orders=required,
        cofactor_degree=quotient.num.degree if ok else -1,
        content_ok=content_ok,
        numerator_content=content,
        elapsed=time.perf_counter() - t0,
    )


def describe_modulus(n, k, extra_label=None):
    phi = f"Phi_{n}(q)" + (f"^{k}" if k != 1 else "")
    return f"{extra_label}*{phi}" if extra_label else phi


def congruent_mod_phi_power(a, b, n, k, extra=None, *, extra_label=None):
    """Check ``a == b`` modulo ``extra * Phi_n(q)**k``.

    Orders are reported at every divisor t > 1 of n, which covers the
    ``[n] * Phi_n(q)**k`` moduli.
    """
    if k < 1:
        raise ValueError("power must be >= 1")
    modulus = cyclotomic(n) ** k
    if extra is not None:
        modulus = modulus * extra
    if extra_label is None and extra is not None:
        extra_label = f"({extra})"
    indices = [t for t in divisors(n) if t > 1] or [n]
    return congruent_mod(
        a, b, modulus, indices=indices, description=describe_modulus(n, k, extra_label)
    )

