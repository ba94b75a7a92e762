"""Primality, least factors, Euclid's new prime and primes dividing products."""

from __future__ import annotations

import enum

from consarith._backend import kernels
from consarith.gcd import DomainError, nat_divides, pos_divides
from consarith.numerals import BinPos, Nat, PosSeq
from consarith.search import exb_nat

__all__ = [
    "is_prime_pos",
    "is_composed_pos",
    "is_prime_nat",
    "is_composed_nat",
    "least_factor",
    "new_prime",
    "Split",
    "irreducible_split",
    "prime_index_in_product",
]


def is_composed_pos(p: int) -> bool:
    """Some ``1 < q <= floor(sqrt p)`` divides ``p``."""
    return bool(kernels.is_composed(int(BinPos(p))))


def is_prime_pos(p: int) -> bool:
    p = int(BinPos(p))
    return p > 1 and not kernels.is_composed(p)


def is_composed_nat(n: int) -> bool:
    """Some ``m < n`` with ``1 < m`` divides ``n``.

    Divisibility is the bounded search of :func:`nat_divides`, so this is
    quadratic in ``n``; it exists to cross-check the positive version.
    """
    n = int(Nat(n))
    return exb_nat(n, lambda m: 1 < m and nat_divides(m, n))


def is_prime_nat(n: int) -> bool:
    n = int(Nat(n))
    return n > 1 and not is_composed_nat(n)


def least_factor(p: int, odd_only: bool = False) -> BinPos:
    """Least divisor greater than 1; ``LF(1) = 1``.

    Odd ``p`` scans every candidate ``2 <= q <= floor(sqrt p)`` in order,
    testing ``gcd(q, p) = q``, and falls back to ``p`` itself.  With
    ``odd_only`` the even candidates are skipped, which cannot change the
    result for odd ``p``.
    """
    p = int(BinPos(p))
    if not odd_only or p < 9 or not p & 1:
        return BinPos(kernels.least_factor(p))
    for q in range(3, kernels.pos_sqrt(p) + 1, 2):
        if kernels.stein_gcd(q, p) == q:
            return BinPos(q)
    return BinPos(p)


def new_prime(ps: PosSeq, n: int) -> BinPos:
    """``LF(ps(0)*...*ps(n-1) + 1)``, a prime outside the first ``n`` entries."""
    prod = 1
    for q in ps.prefix(n):
        prod *= int(q)
    return least_factor(prod + 1)


class Split(enum.Enum):
    DIVIDES_FIRST = "DividesFirst"
    DIVIDES_SECOND = "DividesSecond"


def irreducible_split(p: int, q0: int, q1: int) -> Split:
    """Which factor a prime ``p`` dividing ``q0*q1`` divides (first wins)."""
    p, q0, q1 = int(BinPos(p)), int(BinPos(q0)), int(BinPos(q1))
    if not is_prime_pos(p):
        raise DomainError(f"{p} is not prime")
    if not pos_divides(p, q0 * q1):
        raise DomainError(f"{p} does not divide {q0}*{q1}")
    if pos_divides(p, q0):
        return Split.DIVIDES_FIRST
    return Split.DIVIDES_SECOND


def prime_index_in_product(p: int, ps: PosSeq, n: int) -> Nat:
    """Least ``i < n`` such that ``p`` divides ``ps(0)*...*ps(i)``.

    Raises :class:`DomainError` if ``p`` does not divide the product of all
    ``n`` entries.  Primality of ``p`` and of the entries is not checked.
    """
    p, n = int(BinPos(p)), int(Nat(n))
    prod = 1
    for i in range(n):
        prod *= int(ps(i))
        if kernels.stein_gcd(p, prod) == p:
            return Nat(i)
    raise DomainError(f"{p} does not divide the product of the first {n} entries")
