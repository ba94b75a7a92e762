"""Fermat's factorization method: find ``l`` with ``l^2 - p`` a square."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from consarith._backend import kernels
from consarith.gcd import DomainError
from consarith.numerals import BinPos

__all__ = ["PrimeVerdict", "Factors", "FermatOutcome", "fermat_factor", "fermat_scan", "odd_split_to_squares"]


@dataclass(frozen=True)
class PrimeVerdict:
    def __str__(self) -> str:
        return "prime"


@dataclass(frozen=True)
class Factors:
    q0: int
    q1: int

    def __str__(self) -> str:
        return f"{self.q0} x {self.q1}"


FermatOutcome = Union[PrimeVerdict, Factors]


def _is_square(v: int) -> bool:
    r = kernels.fast_sqrt(v)
    return r * r == v


def fermat_scan(p: int) -> tuple[FermatOutcome, int]:
    """:func:`fermat_factor` plus the number of scan candidates tried."""
    p = int(BinPos(p))
    if p == 1:
        raise DomainError("Fermat's method needs p > 1")
    if not p & 1:
        return (PrimeVerdict() if p == 2 else Factors(2, p >> 1)), 0
    root = kernels.fast_sqrt(p)
    if root * root == p:
        return Factors(root, root), 0
    if p in (3, 5):
        return PrimeVerdict(), 0
    # mu over root <= l < (p-1)/2; below sqrt p the difference l^2 - p
    # does not exist in the positives and counts as "not a square"
    tried = 0
    for l in range(root, (p - 1) >> 1):
        tried += 1
        d = l * l - p
        if d > 0 and _is_square(d):
            r = kernels.fast_sqrt(d)
            return Factors(l + r, l - r), tried
    return PrimeVerdict(), tried


def fermat_factor(p: int) -> FermatOutcome:
    """Split ``p > 1`` into ``q0*q1`` with both factors > 1, or report it prime.

    Even ``p > 2`` gives ``(2, p/2)``; a perfect square gives ``(s, s)``;
    otherwise the first ``l >= FastSqrt p`` with ``l^2 - p = r^2`` gives
    ``(l+r, l-r)``.  An exhausted scan means ``p`` is prime.
    """
    return fermat_scan(p)[0]


def odd_split_to_squares(p: int, q0: int, q1: int) -> tuple[BinPos, BinPos]:
    """``(p0, p1)`` with ``p = p1^2 - p0^2`` from an odd split ``p = q0*q1``."""
    p, q0, q1 = int(BinPos(p)), int(BinPos(q0)), int(BinPos(q1))
    if not p & 1:
        raise DomainError(f"{p} is even")
    if q0 == q1:
        raise DomainError("the two factors must differ")
    if q0 < 2 or q1 < 2:
        raise DomainError("both factors must exceed 1")
    if q0 * q1 != p:
        raise DomainError(f"{q0}*{q1} != {p}")
    lo, hi = min(q0, q1), max(q0, q1)
    return BinPos((hi - lo) >> 1), BinPos((hi + lo) >> 1)
