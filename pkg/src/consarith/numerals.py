"""Positive binary numerals, counter-backed naturals and decimal I/O.

A :class:`BinPos` is an ``int`` subclass restricted to values >= 1.  Its
binary expansion *is* the constructor spine: reading the digits below the
leading 1 from least significant upwards gives the sequence of ``S0``/``S1``
applications, so ``S0 S1 1`` is ``0b110 == 6``.  Pattern matching on the
three constructors is a parity test plus a shift.
"""

from __future__ import annotations

import enum
import functools
import string
from typing import Iterable, Sequence

from consarith._backend import kernels

__all__ = [
    "BinPos",
    "Nat",
    "Ordering",
    "parse_decimal",
    "print_decimal",
    "pos_to_nat",
    "nat_to_pos",
    "add",
    "mul_bin",
    "sub_strict",
    "cmp",
    "pos_log",
    "PosSeq",
    "UnderflowError",
]


class UnderflowError(ArithmeticError):
    """Raised when a subtraction would leave the positive numbers."""


class BinPos(int):
    """Positive binary numeral built from ``1``, ``S0`` and ``S1``."""

    __slots__ = ()

    def __new__(cls, value: int = 1) -> "BinPos":
        if isinstance(value, BinPos):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"BinPos needs an int, got {type(value).__name__}")
        if value < 1:
            raise ValueError(f"positive binary numerals start at 1, got {value}")
        return super().__new__(cls, value)

    @classmethod
    def s0(cls, p: int) -> "BinPos":
        return cls(int(BinPos(p)) << 1)

    @classmethod
    def s1(cls, p: int) -> "BinPos":
        return cls((int(BinPos(p)) << 1) | 1)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BinPos":
        """Build from LSB-first digits sitting below an implicit leading 1."""
        digits = list(bits)
        v = 1
        for b in reversed(digits):
            if b not in (0, 1):
                raise ValueError(f"binary digit expected, got {b!r}")
            v = (v << 1) | b
        return cls(v)

    @property
    def is_one(self) -> bool:
        return int(self) == 1

    @property
    def head(self) -> str:
        """Outermost constructor: ``"1"``, ``"S0"`` or ``"S1"``."""
        if int(self) == 1:
            return "1"
        return "S1" if int(self) & 1 else "S0"

    @property
    def tail(self) -> "BinPos":
        """Argument of the outermost constructor (``p`` in ``S0 p``)."""
        if int(self) == 1:
            raise ValueError("1 is a nullary constructor and has no tail")
        return BinPos(int(self) >> 1)

    @property
    def bits(self) -> tuple[int, ...]:
        v = int(self)
        return tuple((v >> i) & 1 for i in range(v.bit_length() - 1))

    def spine(self) -> str:
        heads = ["S1" if b else "S0" for b in self.bits]
        return " ".join(heads + ["1"])

    def __repr__(self) -> str:
        return f"BinPos({int(self)})"

    def __str__(self) -> str:
        return _int_to_digits(int(self))


class Nat(int):
    """Natural number with zero/successor reading; stored as a counter."""

    __slots__ = ()

    def __new__(cls, value: int = 0) -> "Nat":
        if isinstance(value, Nat):
            return value
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"Nat needs an int, got {type(value).__name__}")
        if value < 0:
            raise ValueError(f"natural numbers are nonnegative, got {value}")
        return super().__new__(cls, value)

    @property
    def is_zero(self) -> bool:
        return int(self) == 0

    def succ(self) -> "Nat":
        return Nat(int(self) + 1)

    def pred(self) -> "Nat":
        """Predecessor; the predecessor of 0 is 0."""
        return Nat(max(int(self) - 1, 0))

    def __repr__(self) -> str:
        return f"Nat({int(self)})"

    def __str__(self) -> str:
        return _int_to_digits(int(self))


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


_DIGITS = frozenset(string.digits)
# int()/str() refuse very long decimal strings by default; chunks stay below
_CHUNK = 1000


@functools.lru_cache(maxsize=64)
def _pow10(k: int) -> int:
    return 10**k


def _digits_to_int(s: str) -> int:
    if len(s) <= _CHUNK:
        return int(s, 10)
    lo_len = len(s) // 2
    return _digits_to_int(s[:-lo_len]) * _pow10(lo_len) + _digits_to_int(s[-lo_len:])


def _int_to_digits(v: int, width: int = 0) -> str:
    """Decimal digits of ``v``, left-padded with zeros to ``width``."""
    if v.bit_length() <= 3 * _CHUNK:
        return str(v).zfill(width)
    # split on a power of ten with about half the digits
    lo_len = int(v.bit_length() * 0.30103) // 2
    hi, lo = divmod(v, _pow10(lo_len))
    head = _int_to_digits(hi, max(width - lo_len, 0))
    return head + _int_to_digits(lo, lo_len)


def parse_decimal(s: str) -> BinPos:
    """Parse an unsigned decimal string into a :class:`BinPos`.

    Leading zeros are accepted; the value must be at least 1.
    """
    if not isinstance(s, str):
        raise TypeError("decimal input must be a string")
    if not s:
        raise ValueError("empty decimal string")
    if not _DIGITS.issuperset(s):
        raise ValueError(f"not a decimal digit string: {s!r}")
    # int() alone would also accept "1_000", whitespace and non-ASCII digits
    v = _digits_to_int(s)
    if v == 0:
        raise ValueError("0 is not a positive binary number")
    return BinPos(v)


def print_decimal(p: int) -> str:
    return _int_to_digits(int(BinPos(p)))


def pos_to_nat(p: int) -> Nat:
    return Nat(int(BinPos(p)))


def nat_to_pos(n: int) -> BinPos:
    """Embed a natural into the positives, sending 0 to 1."""
    n = int(Nat(n))
    return BinPos(n if n else 1)


def add(p: int, q: int) -> BinPos:
    return BinPos(kernels.add(int(BinPos(p)), int(BinPos(q))))


def mul_bin(p: int, q: int) -> BinPos:
    return BinPos(kernels.mul(int(BinPos(p)), int(BinPos(q))))


def sub_strict(p: int, q: int) -> BinPos:
    """``p - q``; raises :class:`UnderflowError` unless ``p > q``."""
    p, q = int(BinPos(p)), int(BinPos(q))
    if kernels.cmp(p, q) <= 0:
        raise UnderflowError(f"{p} - {q} is not a positive number")
    return BinPos(kernels.sub(p, q))


def cmp(p: int, q: int) -> Ordering:
    return Ordering(kernels.cmp(int(BinPos(p)), int(BinPos(q))))


def pos_log(p: int) -> Nat:
    """Number of constructor applications above 1, i.e. floor(log2 p)."""
    return Nat(int(BinPos(p)).bit_length() - 1)


class PosSeq:
    """Total map from indices to positives: a finite table plus a default.

    >>> ps = PosSeq([2, 3])
    >>> ps(0), ps(1), ps(7)
    (BinPos(2), BinPos(3), BinPos(1))
    """

    __slots__ = ("_table", "_default")

    def __init__(self, entries: Sequence[int] = (), default: int = 1):
        self._table = tuple(BinPos(e) for e in entries)
        self._default = BinPos(default)

    @classmethod
    def const(cls, value: int) -> "PosSeq":
        return cls((), default=value)

    def __call__(self, i: int) -> BinPos:
        i = int(Nat(i))
        if i < len(self._table):
            return self._table[i]
        return self._default

    @property
    def default(self) -> BinPos:
        return self._default

    def prefix(self, n: int) -> list[BinPos]:
        return [self(i) for i in range(int(n))]

    def __len__(self) -> int:
        return len(self._table)

    def __repr__(self) -> str:
        return f"PosSeq({list(map(int, self._table))}, default={int(self._default)})"
