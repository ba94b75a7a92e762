"""Independent reference implementations used as test oracles.

Nothing here imports consarith; each oracle is the textbook definition
or a standard-library routine.
"""

from __future__ import annotations

import math


def brute_gcd(a: int, b: int) -> int:
    """Largest common divisor by enumeration."""
    best = 0
    for d in range(1, max(a, b) + 1):
        if a % d == 0 and b % d == 0:
            best = d
    return best


def divisor_table(limit: int) -> list[list[int]]:
    """``divs[n]`` lists the divisors of ``n`` for ``n <= limit``."""
    divs: list[list[int]] = [[] for _ in range(limit + 1)]
    for d in range(1, limit + 1):
        for m in range(d, limit + 1, d):
            divs[m].append(d)
    return divs


def spf_sieve(limit: int) -> list[int]:
    """Smallest prime factor of every ``n <= limit`` (0 and 1 map to themselves)."""
    spf = list(range(limit + 1))
    for i in range(2, math.isqrt(limit) + 1):
        if spf[i] == i:
            for m in range(i * i, limit + 1, i):
                if spf[m] == m:
                    spf[m] = i
    return spf


def sieve_factor(n: int, spf: list[int]) -> list[int]:
    out = []
    while n > 1:
        out.append(spf[n])
        n //= spf[n]
    return out


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1
