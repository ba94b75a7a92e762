"""Time the compiled and pure-Python kernels on the same inputs.

    python3 benchmarks/compare_backends.py [--digits 500,1000,2000] [--reps 5]

Prints one row per (kernel, size) with the median time of each backend and
their ratio.  Inputs come from the same seeded generator as ``consarith bench``.
"""

from __future__ import annotations

import argparse
import statistics
import sys
import time

from consarith._backend import available_backends
from consarith.bench import bench_inputs

# kernel name -> (bench op supplying inputs, how many of them it takes)
KERNELS = {
    "stein_gcd": ("stein", 2),
    "euclid_gcd": ("euclidBin", 2),
    "pos_sqrt": ("posSqrt", 1),
    "fast_sqrt": ("fastSqrt", 1),
    "mul": ("stein", 2),
}


def _median_time(fn, args, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--digits", default="500,1000,2000,4000")
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    sizes = [int(s) for s in args.digits.split(",")]

    backends = available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the Python backend is available", file=sys.stderr)
    names = sorted(backends)
    print(f"{'kernel':<12}{'digits':>8}" + "".join(f"{n + ' (s)':>16}" for n in names) + f"{'speedup':>10}")
    for kernel, (op, arity) in KERNELS.items():
        for d in sizes:
            inputs = tuple(int(v) for v in bench_inputs(op, d, args.seed)[:arity])
            results = {}
            for n in names:
                fn = getattr(backends[n], kernel)
                # both backends must agree before their timings mean anything
                results[n] = (fn(*inputs), _median_time(fn, inputs, args.reps))
            if len({r[0] for r in results.values()}) != 1:
                print(f"{kernel}: backends disagree at {d} digits", file=sys.stderr)
                return 1
            row = f"{kernel:<12}{d:>8}" + "".join(f"{results[n][1]:>16.6f}" for n in names)
            if len(names) == 2:
                row += f"{results['python'][1] / results['cython'][1]:>10.1f}x"
            print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
