"""bklkit: exact canonical / dual canonical bases and BKL polynomials in
windowed mixed Fock spaces, with a q=1 character layer for gl(m|n)."""

from .combinat import SignedSeq, WedgeIndex
from .canonical import CANONICAL, DUAL, bkl, wedge_bkl
from .characters import irreducible_character, tilting_character
from .fock import FockVector, Window
from .scalars import Laurent, RationalQ, gauss_fact, gauss_int

__all__ = [
    "SignedSeq",
    "WedgeIndex",
    "CANONICAL",
    "DUAL",
    "bkl",
    "wedge_bkl",
    "irreducible_character",
    "tilting_character",
    "FockVector",
    "Window",
    "Laurent",
    "RationalQ",
    "gauss_int",
    "gauss_fact",
]

__version__ = "0.1.0"
