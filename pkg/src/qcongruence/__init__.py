"""Exact verification of q-congruences, q-WZ pairs and p-adic supercongruences."""

from .congruence import CongruenceReport, congruent_mod, congruent_mod_phi_power
from .qfactor import cyclotomic, q_binomial, q_int, qpoch
from .ring import IntPoly, PoleError, Q, RationalFn
from .suites import SUITES, build_sum, scan, verify

__all__ = [
    "CongruenceReport",
    "IntPoly",
    "PoleError",
    "Q",
    "RationalFn",
    "SUITES",
    "build_sum",
    "congruent_mod",
    "congruent_mod_phi_power",
    "cyclotomic",
    "q_binomial",
    "q_int",
    "qpoch",
    "scan",
    "verify",
]

__version__ = "0.1.0"
