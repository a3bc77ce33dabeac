"""Representation varieties of finitely presented groups over SL(2,C) and PSL(2,C).

Exact profile arithmetic and closed-form counts, a brute-force conjugacy-class
oracle for cyclic groups, exponent-sum parity criteria, a numerical word-map
engine, a catalog of cited facts, and verdicts that carry their citations.
"""

from .profiles import PSL2, SL2, AlgebraicGroup, Profile, convolve, same_profile, trim
from .words import FreeWord, Presentation, parse_presentation, parse_word

__version__ = "0.1.0"

__all__ = [
    "AlgebraicGroup",
    "SL2",
    "PSL2",
    "Profile",
    "convolve",
    "same_profile",
    "trim",
    "FreeWord",
    "Presentation",
    "parse_word",
    "parse_presentation",
    "__version__",
]
