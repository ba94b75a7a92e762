"""Bounded quantifiers, the bounded mu-operator and the nu-operator.

Predicates receive plain ``int`` arguments; indices are always >= 0 and
the positive searches only ever pass values >= 1.
"""

from __future__ import annotations

from typing import Callable

from consarith.numerals import BinPos, Nat

BoolPredNat = Callable[[int], bool]
BoolPredPos = Callable[[int], bool]

__all__ = ["exb_nat", "exb_pos", "nat_least", "nat_least_up", "pos_mon_max", "ProbeCounter"]


def exb_nat(n: int, ws: BoolPredNat) -> bool:
    """Is there an ``i < n`` with ``ws(i)``?

    Follows ``E<0 ws = ff`` and ``E<Sn ws = ws(n) or E<n ws``, so the
    predicate is tried from ``n-1`` downwards and stops at the first hit.
    """
    for i in range(int(Nat(n)) - 1, -1, -1):
        if ws(i):
            return True
    return False


def exb_pos(p: int, wf: BoolPredPos) -> bool:
    """Is there a ``q <= p`` with ``wf(q)``?

    Structural rules on the bound:
    ``E<=1 wf = wf 1``;
    ``E<=S0 p wf = E<=p wf or E<=p (i -> wf(p+i))``;
    ``E<=S1 p wf = wf(S1 p) or E<=S0 p wf``.
    The shifted predicates are kept as integer offsets on an explicit stack.
    """
    stack = [(int(BinPos(p)), 0)]
    while stack:
        b, off = stack.pop()
        if b == 1:
            if wf(off + 1):
                return True
        elif b & 1:
            if wf(off + b):
                return True
            stack.append((b - 1, off))
        else:
            half = b >> 1
            # second disjunct underneath, so the unshifted half runs first
            stack.append((half, off + half))
            stack.append((half, off))
    return False


def nat_least(n: int, ws: BoolPredNat) -> Nat:
    """Least ``i < n`` with ``ws(i)``, or ``n`` if there is none."""
    n = int(Nat(n))
    for i in range(n):
        if ws(i):
            return Nat(i)
    return Nat(n)


def nat_least_up(m: int, n: int, ws: BoolPredNat) -> Nat:
    """mu over ``[m, n)``: ``nat_least(n-m, i -> ws(i+m)) + m`` if ``m <= n``, else 0."""
    m, n = int(Nat(m)), int(Nat(n))
    if m > n:
        return Nat(0)
    return Nat(nat_least(n - m, lambda i: ws(i + m)) + m)


def pos_mon_max(wf: BoolPredPos, n: int) -> BinPos:
    """Greatest ``p`` with ``wf(p)`` for antitone ``wf``, by interval nesting.

    Requires ``wf(1)`` and ``not wf(2**n)``; otherwise the result is
    unspecified.  Exactly ``n`` probes of ``wf`` are made.
    """
    n = int(Nat(n))
    acc = 1  # 1 doubles as "nothing found yet", there being no 0 in BinPos
    for k in range(n - 1, -1, -1):
        cand = (1 << k) if acc == 1 else acc + (1 << k)
        if wf(cand):
            acc = cand
    return BinPos(acc)


class ProbeCounter:
    """Wrap a predicate and count how often it is evaluated."""

    def __init__(self, pred: Callable[[int], bool]):
        self.pred = pred
        self.calls = 0

    def __call__(self, x: int) -> bool:
        self.calls += 1
        return self.pred(x)
