"""Greatest common divisors, divisibility and division via the nu-operator."""

from __future__ import annotations

from consarith._backend import kernels
from consarith.numerals import BinPos, Nat
from consarith.search import exb_nat

__all__ = [
    "nat_gcd",
    "floor_div",
    "euclid_gcd_bin",
    "stein_gcd",
    "nat_divides",
    "pos_divides",
    "div_witness",
    "DomainError",
]


class DomainError(ValueError):
    """An argument lies outside the domain of a partial operation."""


def nat_gcd(n: int, m: int) -> Nat:
    """Subtraction gcd on naturals: ``gcd(0,n) = n``, ``gcd(m,0) = m``,
    and ``gcd(Sm, Sn)`` recurses on the difference."""
    return Nat(kernels.nat_gcd(int(Nat(n)), int(Nat(m))))


def floor_div(p: int, q: int) -> BinPos:
    """``floor(p/q)`` as ``nu(r -> r*q <= p, S(log p - log q))``; needs ``q <= p``."""
    p, q = int(BinPos(p)), int(BinPos(q))
    if p < q:
        raise DomainError(f"floor({p}/{q}) is 0, which is not a positive number")
    return BinPos(kernels.floor_div(p, q))


def euclid_gcd_bin(p: int, q: int) -> BinPos:
    """Euclid's remainder recursion on positives.

    With ``k = floor(q/p)`` for ``p < q``: return ``p`` if ``q = k*p``, else
    continue with ``(p, q - k*p)``; symmetrically for ``q < p``.
    """
    return BinPos(kernels.euclid_gcd(int(BinPos(p)), int(BinPos(q))))


def stein_gcd(p: int, q: int) -> BinPos:
    """Binary gcd by the seven constructor rules (Stein's algorithm)."""
    return BinPos(kernels.stein_gcd(int(BinPos(p)), int(BinPos(q))))


def nat_divides(m: int, n: int) -> bool:
    """``m | n`` on naturals: some ``l < S n`` has ``l*m = n``."""
    m, n = int(Nat(m)), int(Nat(n))
    return exb_nat(n + 1, lambda l: l * m == n)


def pos_divides(p: int, q: int) -> bool:
    """``p | q`` on positives, defined as ``gcd(p, q) = p``."""
    p = int(BinPos(p))
    return kernels.stein_gcd(p, int(BinPos(q))) == p


def div_witness(p: int, q: int) -> BinPos:
    """The ``r`` with ``r*p = q``, for ``p | q``."""
    p, q = int(BinPos(p)), int(BinPos(q))
    if not pos_divides(p, q):
        raise DomainError(f"{p} does not divide {q}")
    return BinPos(kernels.floor_div(q, p))
