"""One check per primary acceptance criterion, each printing a verdict line.

Slow runs are enabled with CONSARITH_SLOW_TESTS=1.
"""

import math
import random
import statistics
import time
from fractions import Fraction

import pytest

from acceptance_log import record
from consarith import BACKEND
from consarith.bench import fit_poly, log_log_slope, run_bench
from consarith.bezout import bezout_euclid, bezout_stein, verify_cert
from consarith.fermat import Factors, PrimeVerdict, fermat_factor
from consarith.fta import apply_perm, factorize, gen_pms, prod_split
from consarith.gcd import euclid_gcd_bin, nat_gcd, stein_gcd
from consarith.isqrt import fast_sqrt, nat_sqrt_ceil, pos_sqrt_floor
from consarith.numerals import PosSeq, pos_to_nat
from oracles import ceil_sqrt, divisor_table, sieve_factor, spf_sieve


def test_gcd_oracle_equivalence():
    t0 = time.perf_counter()
    divs = divisor_table(512)
    failures = 0
    for a in range(1, 513):
        for b in range(1, 513):
            # brute force: largest divisor of a that also divides b
            brute = next(d for d in reversed(divs[a]) if b % d == 0)
            if not (nat_gcd(a, b) == stein_gcd(a, b) == euclid_gcd_bin(a, b) == brute):
                failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 60
    record("gcd oracle equivalence", ok, f"{512 * 512} pairs, {failures} failures, {elapsed:.1f} s (limit 60 s)")
    assert ok


def test_cross_representation():
    failures = sum(
        pos_to_nat(stein_gcd(p, q)) != nat_gcd(pos_to_nat(p), pos_to_nat(q))
        for p in range(1, 513)
        for q in range(1, 513)
    )
    record("cross-representation gcd", failures == 0, f"{512 * 512} pairs, {failures} failures")
    assert failures == 0


def test_bezout_soundness():
    failures = 0
    checked = 0
    for fn in (bezout_stein, bezout_euclid):
        for p0 in range(1, 129):
            for p1 in range(1, 129):
                checked += 1
                failures += not verify_cert(p0, p1, fn(p0, p1))
    rng = random.Random(20240101)
    pairs = [(rng.getrandbits(256) | 1 << 255, rng.getrandbits(256) | 1 << 255) for _ in range(5000)]
    for fn in (bezout_stein, bezout_euclid):
        for p0, p1 in pairs:
            checked += 1
            failures += not verify_cert(p0, p1, fn(p0, p1))
    record("Bezout soundness", failures == 0, f"{checked} certificates over both constructions, {failures} failures")
    assert failures == 0


def test_square_roots():
    failures = 0
    for p in range(1, 2**16 + 1):
        r = math.isqrt(p)
        if not (fast_sqrt(p) == pos_sqrt_floor(p) == r):
            failures += 1
    for n in range(0, 2**16 + 1):
        if nat_sqrt_ceil(n) != ceil_sqrt(n):
            failures += 1
    rng = random.Random(77)
    for _ in range(10000):
        p = rng.getrandbits(256) | 1 << 255
        r = fast_sqrt(p)
        if not (r * r <= p < (r + 1) * (r + 1)) or pos_sqrt_floor(p) != r:
            failures += 1
    record("square roots", failures == 0, f"exhaustive to 2^16 plus 10000 random 256-bit, {failures} failures")
    assert failures == 0


def test_factorization():
    spf = spf_sieve(20000)
    failures = 0
    for n in range(2, 20001):
        f = factorize(n)
        if sorted(f.primes) != sorted(sieve_factor(n, spf)) or f.product() != n:
            failures += 1
    record("factorization vs sieve", failures == 0, f"2..20000, {failures} failures")
    assert failures == 0


def test_transcript_fixtures():
    got = {}
    for name, qs in [("2/2", PosSeq.const(2)), ("2/4", PosSeq.const(4)), ("2/3", PosSeq.const(3))]:
        _, w = gen_pms(10, 10, PosSeq.const(2), qs)
        got[name] = [int(apply_perm(w, i)) for i in range(10)]
    checks = [
        got["2/2"] == [1, 2, 3, 4, 5, 6, 7, 8, 9, 0],
        got["2/4"] == [0, 2, 3, 4, 5, 6, 7, 8, 9, 1],
        got["2/3"] == list(range(10)),
        prod_split(7921, 676, 2314, 2314) == (89, 89, 26, 26),
        factorize(100160063).primes == (10007, 10009),
    ]
    ok = all(checks)
    record("transcript fixtures", ok, f"{sum(checks)}/{len(checks)} exact matches")
    assert ok


@pytest.mark.slow
def test_slow_suite():
    parts = []
    t0 = time.perf_counter()
    a = prod_split(37921088150, 671104993, 22439775070, 1134103685) == (211690, 179135, 106003, 6331)
    ta = time.perf_counter() - t0
    parts.append(a and ta < 20 * 60)
    t0 = time.perf_counter()
    f = fermat_factor(810450000160224500006321)
    tb = time.perf_counter() - t0
    parts.append(f == Factors(900500000129, 900000000049) and tb < 15 * 60)
    t0 = time.perf_counter()
    v = fermat_factor(89917)
    tc = time.perf_counter() - t0
    parts.append(v == PrimeVerdict() and tc < 30 * 60)
    ok = all(parts)
    record(
        "slow suite",
        ok,
        f"prodSplit {ta:.2f} s, Fermat twin pair {tb:.2f} s, 89917 prime {tc:.2f} s; {sum(parts)}/3 within budget",
    )
    assert ok


def test_performance_separation():
    stein_2k = run_bench("stein", [2000], reps=5, seed=0)[0].seconds
    euclid_2k = run_bench("euclidBin", [2000], reps=5, seed=0)[0].seconds
    stein = run_bench("stein", [2000, 4000, 8000], reps=5, seed=0)
    euclid = run_bench("euclidBin", [600, 1200, 2400], reps=5, seed=0)
    s_slope = log_log_slope([(s.digits, s.seconds) for s in stein])
    e_slope = log_log_slope([(s.digits, s.seconds) for s in euclid])
    ratio_ok = stein_2k < euclid_2k / 5
    s_ok = 1.6 <= s_slope <= 2.6
    e_ok = 2.4 <= e_slope <= 3.6
    ok = ratio_ok and s_ok and e_ok
    record(
        "performance separation",
        ok,
        f"[{BACKEND}] euclidBin/stein at 2000 digits = {euclid_2k / stein_2k:.2f} (need > 5) {'ok' if ratio_ok else 'MISS'}; "
        f"stein slope {s_slope:.2f} in [1.6,2.6] {'ok' if s_ok else 'MISS'}; "
        f"euclidBin slope {e_slope:.2f} in [2.4,3.6] {'ok' if e_ok else 'MISS'}",
    )
    assert ok


def test_stein_10k_digits():
    times = [s.seconds for s in run_bench("stein", [10000, 10000], reps=3, seed=1)]
    worst = max(times)
    ok = worst < 5
    record("stein 10000 digits", ok, f"median {statistics.median(times):.3f} s, worst {worst:.3f} s (limit 5 s)")
    assert ok


def test_fit_poly():
    rng = random.Random(31337)
    worst = 0.0
    for _ in range(50):
        d = rng.randint(1, 9)
        coeffs = [rng.choice([-1, 1]) * rng.uniform(0.01, 100) for _ in range(d)]
        xs = sorted(rng.sample(range(1, 200), 20))
        # exact y values; summing in floats would round away the low-order
        # terms once x^9 reaches 1e20, and the data would no longer be noiseless
        pts = [(x, sum(Fraction(c) * x ** (k + 1) for k, c in enumerate(coeffs))) for x in xs]
        fit = fit_poly(pts, 9)
        got = list(fit.coefficients) + [0.0] * (9 - fit.degree)
        for k, c in enumerate(coeffs):
            worst = max(worst, abs(got[k] - c) / abs(c))
        for k in range(d, 9):
            worst = max(worst, abs(got[k]))
    reduced = fit_poly([(3, 9), (3, 9), (3, 9), (3, 9)], 9)
    reduced_ok = reduced.degree == 1 and abs(reduced.coefficients[0] - 3) < 1e-12
    ok = worst <= 1e-6 and reduced_ok
    record(
        "fitPoly recovery",
        ok,
        f"worst relative error {worst:.2e} (limit 1e-6); rank-deficient input reduced to degree {reduced.degree}",
    )
    assert ok
