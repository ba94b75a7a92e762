"""Pure-Python kernels on plain ``int`` values.

Every function here has a twin in ``_ckernels.pyx`` with the same name,
signature and results.  Arguments are assumed already validated (positive
where a ``BinPos`` is meant, nonnegative for counters).
"""

from __future__ import annotations

BACKEND = "python"


def add(p: int, q: int) -> int:
    return p + q


def mul(p: int, q: int) -> int:
    return p * q


def sub(p: int, q: int) -> int:
    return p - q


def cmp(p: int, q: int) -> int:
    return (p > q) - (p < q)


def nat_gcd(n: int, m: int) -> int:
    # subtraction recursion, one rule application per loop turn
    while n and m:
        if n < m:
            m -= n
        else:
            n -= m
    return n if m == 0 else m


def stein_gcd(p: int, q: int) -> int:
    shift = 0
    while True:
        if p == 1 or q == 1:
            return 1 << shift
        if not p & 1:
            if not q & 1:
                p >>= 1
                q >>= 1
                shift += 1
            else:
                p >>= 1
        elif not q & 1:
            q >>= 1
        elif p < q:
            q = (q - p) >> 1
        elif q < p:
            p = (p - q) >> 1
        else:
            return p << shift


def floor_div(p: int, q: int) -> int:
    """nu(r*q <= p, S(log p - log q)) for q <= p."""
    acc = 0  # 0 plays the role of the "nothing found yet" accumulator 1
    for k in range(p.bit_length() - q.bit_length(), -1, -1):
        cand = acc | (1 << k)
        if cand * q <= p:
            acc = cand
    return acc or 1


def euclid_gcd(p: int, q: int) -> int:
    while True:
        if p < q:
            m = floor_div(q, p) * p
            if q == m:
                return p
            q -= m
        elif q < p:
            m = floor_div(p, q) * q
            if p == m:
                return q
            p -= m
        else:
            return q


def pos_sqrt(p: int) -> int:
    """nu(q*q <= p, floor(log p / 2) + 1)."""
    acc = 0
    for k in range((p.bit_length() - 1) // 2, -1, -1):
        cand = acc | (1 << k)
        if cand * cand <= p:
            acc = cand
    return acc or 1


def fast_sqrt(p: int) -> int:
    # unrolled from the most significant digit pair downwards
    top = ((p.bit_length() - 1) // 2) * 2
    q = 1
    for shift in range(top - 2, -1, -2):
        arg = p >> shift
        s1 = (q << 1) | 1
        q = s1 if s1 * s1 <= arg else q << 1
    return q


def least_factor(p: int) -> int:
    if p == 1:
        return 1
    if not p & 1:
        return 2
    bound = pos_sqrt(p)
    # mu over 2 <= q <= floor(sqrt p) of "q divides p", divisibility via gcd
    for q in range(2, bound + 1):
        if stein_gcd(q, p) == q:
            return q
    return p


def is_composed(p: int) -> bool:
    """Bounded existence of a divisor 1 < q <= floor(sqrt p)."""
    return _exb_divisor(pos_sqrt(p), p)


def _exb_divisor(bound: int, p: int) -> bool:
    # the three structural rules of the bounded quantifier on positives,
    # run with an explicit stack of (bound, offset) frames
    stack = [(bound, 0)]
    while stack:
        b, off = stack.pop()
        if b == 1:
            if _divides_gt1(off + 1, p):
                return True
        elif b & 1:
            if _divides_gt1(off + b, p):
                return True
            stack.append((b - 1, off))
        else:
            half = b >> 1
            stack.append((half, off + half))
            stack.append((half, off))
    return False


def _divides_gt1(q: int, p: int) -> bool:
    return q > 1 and stein_gcd(q, p) == q
