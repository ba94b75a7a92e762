import random
from fractions import Fraction

import pytest

from consarith import bench
from consarith.bench import (
    CSV_HEADER,
    bench_inputs,
    fit_poly,
    format_fit,
    log_log_slope,
    read_csv,
    run_bench,
    write_csv,
)


def test_smoke():
    samples = run_bench("stein", [1000], 3, 42)
    assert len(samples) == 1
    s = samples[0]
    assert s.seconds > 0 and s.reps == 3 and len(s.raw) == 3


@pytest.mark.parametrize("op", sorted(bench.OPS))
def test_every_op_runs(op):
    size = 6 if op in ("factorize", "fermat") else 20
    (s,) = run_bench(op, [size], reps=1)
    assert s.op == op and s.seconds >= 0


def test_inputs_are_deterministic():
    assert bench_inputs("stein", 300, 5) == bench_inputs("stein", 300, 5)
    assert bench_inputs("stein", 300, 5) != bench_inputs("stein", 300, 6)
    a, b = bench_inputs("euclidBin", 300, 1)
    assert len(str(a)) == len(str(b)) == 300


def test_errors():
    with pytest.raises(ValueError):
        run_bench("nope", [10])
    with pytest.raises(ValueError):
        run_bench("stein", [0])
    with pytest.raises(ValueError):
        fit_poly([])
    with pytest.raises(ValueError):
        log_log_slope([(1, 1)])
    with pytest.raises(ValueError):
        log_log_slope([(1, 1), (2, 0)])


def test_csv_round_trip(tmp_path):
    samples = run_bench("stein", [10, 20], reps=2, seed=3)
    path = tmp_path / "t.csv"
    write_csv(samples, str(path))
    assert path.read_text().splitlines()[0] == ",".join(CSV_HEADER)
    rows = read_csv(str(path))
    assert len(rows) == 4
    assert [r[1] for r in rows] == [10, 10, 20, 20]
    bad = tmp_path / "bad.csv"
    bad.write_text("a,b\n")
    with pytest.raises(ValueError):
        read_csv(str(bad))


def test_fit_exact_quadratic():
    fit = fit_poly([(x, 2 * x * x) for x in range(1, 11)], 9)
    assert fit.degree == 9
    assert abs(fit.coefficients[1] - 2) < 1e-9
    for k, c in enumerate(fit.coefficients):
        if k != 1:
            assert abs(c) < 1e-9


def test_fit_single_sample():
    fit = fit_poly([(1, 5)], 1)
    assert fit.degree == 1
    assert fit.coefficients == (5.0,)
    assert fit.residual == 0


def test_fit_noisy_cubic():
    rng = random.Random(0)
    pts = [(x, (x**3 + x) * (1 + rng.uniform(-0.01, 0.01))) for x in range(1, 21)]
    fit = fit_poly(pts, 3)
    assert abs(fit.coefficients[2] - 1) < 0.1


def test_fit_reduces_degree_on_rank_deficiency():
    fit = fit_poly([(2, 4), (2, 4), (2, 4)], 5)
    assert fit.degree == 1
    assert abs(fit.coefficients[0] - 2) < 1e-12


def test_fit_recovers_planted_polynomials():
    rng = random.Random(21)
    for _ in range(20):
        d = rng.randint(1, 9)
        coeffs = [rng.randint(-50, 50) or 1 for _ in range(d)]
        xs = rng.sample(range(1, 60), 15)
        pts = [(x, sum(c * x ** (k + 1) for k, c in enumerate(coeffs))) for x in xs]
        fit = fit_poly(pts, 9)
        got = list(fit.coefficients) + [0.0] * (9 - fit.degree)
        for k in range(9):
            want = coeffs[k] if k < d else 0
            assert abs(got[k] - want) <= 1e-6 * max(abs(want), 1)


def test_fit_accepts_fractions_and_callable():
    fit = fit_poly([(Fraction(1, 2), Fraction(3, 2)), (1, 3)], 1)
    assert abs(fit(4) - 12) < 1e-12


def test_format_fit():
    text = format_fit(fit_poly([(1, 5)], 1))
    assert text.splitlines() == ["degree: 1", "coefficients:", "  x^1: 5.00000e+00", "residual: 0.00000e+00"]


def test_log_log_slope():
    assert abs(log_log_slope([(x, x * x) for x in (2, 4, 8)]) - 2) < 1e-9
    assert abs(log_log_slope([(x, x**3) for x in (2, 4, 8)]) - 3) < 1e-9
