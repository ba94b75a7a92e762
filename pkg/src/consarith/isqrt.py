"""Integer square roots: ceiling on naturals, floor on positives, FastSqrt."""

from __future__ import annotations

from consarith._backend import kernels
from consarith.numerals import BinPos, Nat, pos_log
from consarith.search import ProbeCounter, nat_least, pos_mon_max

__all__ = [
    "nat_sqrt_ceil",
    "pos_sqrt_floor",
    "pos_sqrt_floor_traced",
    "fast_sqrt",
    "fast_sqrt_recursive",
    "is_square",
]


def nat_sqrt_ceil(n: int) -> Nat:
    """Least ``m <= n`` with ``n <= m*m`` (the mu-operator below ``S n``)."""
    n = int(Nat(n))
    return nat_least(n + 1, lambda m: n <= m * m)


def pos_sqrt_floor(p: int) -> BinPos:
    """nu(q -> q*q <= p, floor(log p / 2) + 1), i.e. the floor square root."""
    return BinPos(kernels.pos_sqrt(int(BinPos(p))))


def pos_sqrt_floor_traced(p: int) -> tuple[BinPos, int]:
    """Same value through the generic nu-operator, with its probe count."""
    p = int(BinPos(p))
    probe = ProbeCounter(lambda q: q * q <= p)
    root = pos_mon_max(probe, pos_log(p) // 2 + 1)
    return root, probe.calls


def fast_sqrt(p: int) -> BinPos:
    """Digit-pair square root: strip two digits, recurse, then fix one digit.

    ``FastSqrt 1 = FastSqrt 2 = FastSqrt 3 = 1``; for larger ``p`` with
    ``q = FastSqrt(p >> 2)`` the result is ``S1 q`` when ``(S1 q)^2 <= p``
    and ``S0 q`` otherwise.  Evaluated from the leading digit pair down.
    """
    return BinPos(kernels.fast_sqrt(int(BinPos(p))))


def fast_sqrt_recursive(p: int) -> BinPos:
    """Literal recursive form of :func:`fast_sqrt`, for small inputs."""
    p = int(BinPos(p))
    if p < 4:
        return BinPos(1)
    q = fast_sqrt_recursive(p >> 2)
    s1 = 2 * q + 1
    return BinPos(s1 if s1 * s1 <= p else 2 * q)


def is_square(p: int) -> bool:
    r = kernels.fast_sqrt(int(BinPos(p)))
    return r * r == p
