"""Combinatorics of Brill-Noether degeneracy loci with two marked points."""

from .bn_analyzer import BNInput, BNReport, analyze, castelnuovo_oracle, classical_wrd
from .dot_array import DotArray, essential_set, rho, to_confined
from .perm_core import WindowPermutation, ZPermutation

__all__ = [
    "BNInput", "BNReport", "analyze", "castelnuovo_oracle", "classical_wrd",
    "DotArray", "essential_set", "rho", "to_confined",
    "WindowPermutation", "ZPermutation",
]
__version__ = "0.1.0"
