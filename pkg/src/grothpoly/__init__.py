"""Exact computation of canonical stable Grothendieck polynomials.

A pure-Python library for the two-parameter deformation of stable
Grothendieck polynomials and their duals: determinantal and combinatorial
constructions, Schur expansions, Pieri rules, operator models, and the
permutation-indexed extension, all over Z[a, b].
"""

from .bivar import BivarPoly, ALPHA, BETA, A_PLUS_B
from .schur import SchurExpansion
from .series import TruncatedSeries, schur_polynomial

__all__ = [
    "BivarPoly",
    "ALPHA",
    "BETA",
    "A_PLUS_B",
    "SchurExpansion",
    "TruncatedSeries",
    "schur_polynomial",
]

__version__ = "0.1.0"
