"""Constructive elementary number theory on positive binary numerals."""

from consarith._backend import BACKEND
from consarith.numerals import BinPos, Nat, PosSeq, parse_decimal, print_decimal

__version__ = "0.1.0"

__all__ = ["BACKEND", "BinPos", "Nat", "PosSeq", "parse_decimal", "print_decimal", "__version__"]
