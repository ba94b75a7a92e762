"""Timing harness, polynomial fits through the origin and log-log slopes."""

from __future__ import annotations

import csv
import math
import random
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Callable, Iterable, Sequence

from mpmath import mp

from consarith import bezout, fermat, fta, gcd, isqrt
from consarith.numerals import PosSeq, parse_decimal

__all__ = [
    "OPS",
    "Sample",
    "PolyFit",
    "bench_inputs",
    "run_bench",
    "write_csv",
    "read_csv",
    "fit_poly",
    "format_fit",
    "log_log_slope",
]


def _first_primes(k: int) -> list[int]:
    if k <= 0:
        return []
    # the k-th prime is below k(ln k + ln ln k) for k >= 6
    limit = 15 if k < 6 else int(k * (math.log(k) + math.log(math.log(k)))) + 1
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, v in enumerate(sieve) if v][:k]


def _random_decimal(rng: random.Random, digits: int) -> str:
    return str(rng.randint(1, 9)) + "".join(rng.choice("0123456789") for _ in range(digits - 1))


def _two(rng: random.Random, digits: int) -> tuple:
    return (parse_decimal(_random_decimal(rng, digits)), parse_decimal(_random_decimal(rng, digits)))


def _one(rng: random.Random, digits: int) -> tuple:
    return (parse_decimal(_random_decimal(rng, digits)),)


def _pms_input(rng: random.Random, count: int) -> tuple:
    # a shuffled copy of the first `count` primes against the sorted list
    primes = _first_primes(count)
    shuffled = primes[:]
    rng.shuffle(shuffled)
    return (count, count, PosSeq(primes), PosSeq(shuffled))


# op name -> (input generator, operation)
OPS: dict[str, tuple[Callable[[random.Random, int], tuple], Callable]] = {
    "stein": (_two, gcd.stein_gcd),
    "euclidBin": (_two, gcd.euclid_gcd_bin),
    "natGcd": (_two, gcd.nat_gcd),
    "bezoutStein": (_two, bezout.bezout_stein),
    "bezoutEuclid": (_two, bezout.bezout_euclid),
    "posSqrt": (_one, isqrt.pos_sqrt_floor),
    "fastSqrt": (_one, isqrt.fast_sqrt),
    "factorize": (_one, fta.factorize),
    "fermat": (_one, fermat.fermat_factor),
    "genPms": (_pms_input, fta.gen_pms),
}


@dataclass(frozen=True)
class Sample:
    op: str
    digits: int
    seed: int
    seconds: float  # median over the repetitions
    reps: int
    raw: tuple[float, ...] = ()


@dataclass(frozen=True)
class PolyFit:
    """``f(x) = sum(coefficients[k-1] * x**k for k in 1..degree)``."""

    degree: int
    coefficients: tuple[float, ...]
    residual: float

    def __call__(self, x: float) -> float:
        return sum(c * x ** (k + 1) for k, c in enumerate(self.coefficients))


def bench_inputs(op: str, digits: int, seed: int) -> tuple:
    """Deterministic arguments for one timing of ``op`` at ``digits``.

    For ``genPms`` the size is the number of primes rather than a digit count.
    """
    if op not in OPS:
        raise ValueError(f"unknown op {op!r}; expected one of {', '.join(OPS)}")
    if digits < 1:
        raise ValueError(f"digit sizes start at 1, got {digits}")
    rng = random.Random(f"{op}:{digits}:{seed}")
    return OPS[op][0](rng, digits)


def run_bench(op: str, digit_sizes: Iterable[int], reps: int = 3, seed: int = 0) -> list[Sample]:
    """Median wall time of ``reps`` runs per size, inputs fixed by ``seed``."""
    if op not in OPS:
        raise ValueError(f"unknown op {op!r}; expected one of {', '.join(OPS)}")
    if reps < 1:
        raise ValueError("reps must be positive")
    sizes = list(digit_sizes)
    for d in sizes:
        if d < 1:
            raise ValueError(f"digit sizes start at 1, got {d}")
    fn = OPS[op][1]
    # build every input before the first timing starts
    inputs = [bench_inputs(op, d, seed) for d in sizes]
    out = []
    for d, args in zip(sizes, inputs):
        times = []
        for _ in range(reps):
            t0 = time.perf_counter()
            fn(*args)
            times.append(time.perf_counter() - t0)
        out.append(Sample(op, d, seed, statistics.median(times), reps, tuple(times)))
    return out


CSV_HEADER = ("op", "digits", "seed", "rep", "seconds")


def write_csv(samples: Sequence[Sample], path: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for s in samples:
            for rep, t in enumerate(s.raw or (s.seconds,)):
                w.writerow((s.op, s.digits, s.seed, rep, repr(t)))


def read_csv(path: str) -> list[tuple[str, int, int, int, float]]:
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = tuple(next(r, ()))
        if header != CSV_HEADER:
            raise ValueError(f"expected header {','.join(CSV_HEADER)}, got {','.join(header)}")
        return [(op, int(d), int(seed), int(rep), float(t)) for op, d, seed, rep, t in r]


def fit_poly(samples: Sequence[tuple[Real, Real]], max_degree: int = 9) -> PolyFit:
    """Least squares over polynomials with zero constant term.

    Uses a Householder QR factorization of the design matrix in the basis
    ``x, x^2, .., x^d`` with ``x`` rescaled to ``[0, 1]``.  When that matrix
    is rank deficient the degree is lowered until it has full rank.  The
    solve is repeated at doubled working precision until the coefficients
    settle, so exact (int or Fraction) data are fitted to double accuracy
    even where float64 arithmetic would lose the low-order terms.
    """
    if not samples:
        raise ValueError("need at least one sample")
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    xs = [_exact(x) for x, _ in samples]
    ys = [_exact(y) for _, y in samples]
    scale = max(abs(x) for x in xs)
    if scale == 0:
        raise ValueError("all sample positions are 0; the fit is undetermined")
    us = [x / scale for x in xs]
    distinct = len(set(us))

    for d in range(max_degree, 0, -1):
        # more unknowns than distinct positions can never have full rank
        if distinct < d:
            continue
        dps = 30
        prev = _qr_solve(us, ys, d, dps, scale)
        if prev is None:
            continue
        # double the precision until the coefficients, rounded to floats,
        # stop changing; exact zeros settle once they underflow
        while dps < 4000:
            dps *= 2
            cur = _qr_solve(us, ys, d, dps, scale)
            if cur is None:
                break
            settled = cur[0] == prev[0]
            prev = cur
            if settled:
                break
        return PolyFit(d, prev[0], prev[1])
    raise ValueError("no degree gives a full-rank design matrix")


def _exact(v: Real) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, (int, float)):
        return Fraction(v)
    return Fraction(str(v))


def _qr_solve(us, ys, d, dps, scale):
    """Unscaled float coefficients and residual norm at ``dps`` digits.

    Returns None when the triangular factor shows a rank deficiency.
    """
    with mp.workdps(dps):
        a = mp.matrix(len(us), d)
        for i, u in enumerate(us):
            uu = mp.mpf(u.numerator) / u.denominator
            pw = uu
            for k in range(d):
                a[i, k] = pw
                pw *= uu
        y = mp.matrix([mp.mpf(v.numerator) / v.denominator for v in ys])
        q, r = mp.qr(a, mode="skinny")
        diag = [abs(r[k, k]) for k in range(d)]
        if min(diag) <= mp.mpf(10) ** (-dps // 2) * max(max(diag), 1):
            return None
        c = mp.lu_solve(r, q.T * y)
        resid = float(mp.norm(a * c - y))
        sc = mp.mpf(scale.numerator) / scale.denominator
        return tuple(float(c[k - 1] / sc**k) for k in range(1, d + 1)), resid


def format_fit(fit: PolyFit) -> str:
    lines = [f"degree: {fit.degree}", "coefficients:"]
    lines += [f"  x^{k}: {c:.5e}" for k, c in enumerate(fit.coefficients, 1)]
    lines.append(f"residual: {fit.residual:.5e}")
    return "\n".join(lines)


def log_log_slope(samples: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    if any(x <= 0 or y <= 0 for x, y in samples):
        raise ValueError("log-log slope needs positive values")
    lx = [math.log(x) for x, _ in samples]
    ly = [math.log(y) for _, y in samples]
    return statistics.linear_regression(lx, ly).slope
