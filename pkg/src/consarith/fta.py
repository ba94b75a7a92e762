"""Prime factorizations, permutation witnesses and the four-way product split."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from consarith._backend import kernels
from consarith.gcd import DomainError
from consarith.numerals import BinPos, Nat, PosSeq
from consarith.primes import prime_index_in_product

__all__ = [
    "Factorization",
    "PermWitness",
    "prod_seq",
    "transp",
    "factorize",
    "gen_pms",
    "prod_split",
    "verify_perm_witness",
    "apply_perm",
]


@dataclass(frozen=True)
class Factorization:
    """Primes whose product is the factored number; empty for 1."""

    primes: tuple[BinPos, ...]

    @property
    def count(self) -> Nat:
        return Nat(len(self.primes))

    def product(self) -> int:
        r = 1
        for q in self.primes:
            r *= int(q)
        return r

    def as_seq(self) -> PosSeq:
        return PosSeq(self.primes)


@dataclass(frozen=True)
class PermWitness:
    """Mutually inverse index maps, identity from ``bound`` on.

    ``fwd`` and ``inv`` list the images of ``0 .. bound-1``.
    """

    bound: int
    fwd: tuple[int, ...]
    inv: tuple[int, ...]

    @classmethod
    def identity(cls, bound: int) -> "PermWitness":
        ids = tuple(range(bound))
        return cls(bound, ids, ids)


def apply_perm(w: PermWitness, i: int) -> Nat:
    i = int(Nat(i))
    if i < w.bound and i < len(w.fwd):
        return Nat(w.fwd[i])
    return Nat(i)


def _apply_inv(w: PermWitness, i: int) -> int:
    if i < w.bound and i < len(w.inv):
        return w.inv[i]
    return i


def verify_perm_witness(w: PermWitness) -> bool:
    """Both inverse laws and identity beyond the bound, checked on ``[0, bound+8)``."""
    if w.bound < 0 or len(w.fwd) != w.bound or len(w.inv) != w.bound:
        return False
    for i in range(w.bound + 8):
        f = apply_perm(w, i)
        if _apply_inv(w, f) != i or apply_perm(w, _apply_inv(w, i)) != i:
            return False
        if i >= w.bound and f != i:
            return False
    return True


def prod_seq(ps: PosSeq, n: int) -> BinPos:
    """``ps(0) * ... * ps(n-1)``, and 1 for ``n = 0``."""
    r = 1
    for i in range(int(Nat(n))):
        r *= int(ps(i))
    return BinPos(r)


def transp(n: int, m: int, i: int) -> Nat:
    """The transposition swapping ``n`` and ``m``."""
    n, m, i = int(Nat(n)), int(Nat(m)), int(Nat(i))
    if i == n:
        return Nat(m)
    if i == m:
        return Nat(n)
    return Nat(i)


def factorize(p: int) -> Factorization:
    """Iterate the least factor; primes come out in non-decreasing order."""
    p = int(BinPos(p))
    out = []
    while p > 1:
        q = kernels.least_factor(p)
        out.append(BinPos(q))
        p //= q
    return Factorization(tuple(out))


def gen_pms(n: int, m: int, ps: PosSeq, qs: PosSeq) -> tuple[Nat, PermWitness]:
    """Permutation witness with ``ps(fwd(i)) = qs(i)`` for ``i < n``.

    The contract holds when the first ``n`` entries of ``ps`` and the first
    ``m`` of ``qs`` are primes with equal products.  Recursion on ``n``:
    if ``qs(m-1)`` divides ``ps(0)*...*ps(n-2)``, find the least prefix
    index ``l`` it divides, swap positions ``l`` and ``n-1`` of ``ps``,
    recurse, and conjugate the result by that transposition; otherwise
    recurse on the unchanged sequences.  Stops when ``n`` or ``m`` is 0.
    """
    n, m = int(Nat(n)), int(Nat(m))
    cur = [int(ps(i)) for i in range(n)]
    swaps: list[tuple[int, int]] = []
    k, j = n, m
    while k and j:
        k1, j1 = k - 1, j - 1
        q = int(qs(j1))
        prefix = 1
        for v in cur[:k1]:
            prefix *= v
        if kernels.stein_gcd(q, prefix) == q:
            l = int(prime_index_in_product(q, PosSeq(cur), k1))
            cur[l], cur[k1] = cur[k1], cur[l]
            swaps.append((l, k1))
        k, j = k1, j1

    # fold from the innermost call outwards: f' = tau . f and g' = g . tau
    f = list(range(n))
    g = list(range(n))
    for l, k1 in reversed(swaps):
        i, i2 = g[l], g[k1]
        f[i], f[i2] = f[i2], f[i]
        g[l], g[k1] = g[k1], g[l]
    return Nat(n), PermWitness(n, tuple(f), tuple(g))


def prod_split(p0: int, p1: int, q0: int, q1: int) -> tuple[BinPos, BinPos, BinPos, BinPos]:
    """``(r0, r1, r2, r3)`` with ``p0 = r0*r1``, ``p1 = r2*r3``, ``q0 = r0*r2``, ``q1 = r1*r3``.

    Requires ``p0*p1 = q0*q1``.  The primes of ``p0, p1`` are matched to
    those of ``q0, q1`` by :func:`gen_pms`; ``r0`` collects the primes of
    ``p0`` matched into ``q0``, ``r1`` those of ``p0`` matched into ``q1``,
    and likewise ``r2, r3`` for ``p1``.
    """
    p0, p1, q0, q1 = (int(BinPos(x)) for x in (p0, p1, q0, q1))
    if p0 * p1 != q0 * q1:
        raise DomainError(f"{p0}*{p1} != {q0}*{q1}")
    fp0, fp1 = factorize(p0).primes, factorize(p1).primes
    fq0, fq1 = factorize(q0).primes, factorize(q1).primes
    ps = fp0 + fp1
    qs = fq0 + fq1
    m0, n0 = len(fp0), len(fq0)
    size = len(ps)
    _, w = gen_pms(size, len(qs), PosSeq(ps), PosSeq(qs))
    # mask entries to 1 according to which half of qs they were matched to
    rs0 = [int(ps[i]) if w.inv[i] < n0 else 1 for i in range(size)]
    rs1 = [int(ps[i]) if w.inv[i] >= n0 else 1 for i in range(size)]
    return (
        BinPos(_prod(rs0[:m0])),
        BinPos(_prod(rs1[:m0])),
        BinPos(_prod(rs0[m0:])),
        BinPos(_prod(rs1[m0:])),
    )


def _prod(xs: Sequence[int]) -> int:
    r = 1
    for x in xs:
        r *= x
    return r
