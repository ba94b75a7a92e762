"""Command-line front end.  Every query prints one line on success."""

from __future__ import annotations

import argparse
import statistics
import sys
from typing import Sequence

from consarith import bench, bezout, fermat, fta, gcd, isqrt, primes
from consarith.numerals import PosSeq, parse_decimal, print_decimal


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 and a usage block; we want one line and 1
    def error(self, message: str):
        raise UsageError(message)


def _pos(s: str) -> int:
    try:
        return parse_decimal(s)
    except ValueError as e:
        raise UsageError(f"bad positive number {s!r}: {e}") from None


def _nat(s: str) -> int:
    if s == "0" or (s and set(s) == {"0"}):
        return 0
    return _pos(s)


def _pos_list(s: str) -> list[int]:
    if s == "":
        return []
    return [_pos(part) for part in s.split(",")]


def _int_list(s: str) -> list[int]:
    try:
        out = [int(part) for part in s.split(",") if part != ""]
    except ValueError:
        raise UsageError(f"bad integer list {s!r}") from None
    if not out:
        raise UsageError("empty list")
    return out


def _cmd_gcd(a: argparse.Namespace) -> str:
    if a.algo == "nat":
        return str(int(gcd.nat_gcd(_nat(a.a), _nat(a.b))))
    x, y = _pos(a.a), _pos(a.b)
    fn = gcd.stein_gcd if a.algo == "stein" else gcd.euclid_gcd_bin
    return print_decimal(fn(x, y))


def _cmd_bezout(a: argparse.Namespace) -> str:
    x, y = _pos(a.a), _pos(a.b)
    fn = bezout.bezout_stein if a.algo == "stein" else bezout.bezout_euclid
    return bezout.format_cert(fn(x, y))


def _cmd_sqrt(a: argparse.Namespace) -> str:
    if a.algo == "ceil":
        return str(int(isqrt.nat_sqrt_ceil(_nat(a.n))))
    fn = isqrt.fast_sqrt if a.algo == "fast" else isqrt.pos_sqrt_floor
    return print_decimal(fn(_pos(a.n)))


def _cmd_prime(a: argparse.Namespace) -> str:
    p = _pos(a.n)
    if p == 1:
        return "unit"
    return "prime" if primes.is_prime_pos(p) else "composite"


def _cmd_least_factor(a: argparse.Namespace) -> str:
    return print_decimal(primes.least_factor(_pos(a.n), odd_only=a.odd_only))


def _cmd_new_prime(a: argparse.Namespace) -> str:
    ps = _pos_list(a.primes)
    return print_decimal(primes.new_prime(PosSeq(ps), len(ps)))


def _cmd_factor(a: argparse.Namespace) -> str:
    p = _pos(a.n)
    if a.method == "trial":
        return ",".join(print_decimal(q) for q in fta.factorize(p).primes)
    if p == 1:
        raise UsageError("Fermat's method needs an input greater than 1")
    out = fermat.fermat_factor(p)
    if isinstance(out, fermat.PrimeVerdict):
        return "prime"
    return f"{print_decimal(out.q0)} x {print_decimal(out.q1)}"


def _cmd_pms(a: argparse.Namespace) -> str:
    ps, qs = _pos_list(a.ps), _pos_list(a.qs)
    _, w = fta.gen_pms(len(ps), len(qs), PosSeq(ps), PosSeq(qs))
    return "[" + ",".join(str(i) for i in w.fwd) + "]"


def _cmd_prodsplit(a: argparse.Namespace) -> str:
    r0, r1, r2, r3 = fta.prod_split(_pos(a.p0), _pos(a.p1), _pos(a.q0), _pos(a.q1))
    return f"({print_decimal(r0)},({print_decimal(r1)},({print_decimal(r2)},{print_decimal(r3)})))"


def _cmd_bench(a: argparse.Namespace) -> str:
    sizes = _int_list(a.digits)
    samples = bench.run_bench(a.op, sizes, reps=a.reps, seed=a.seed)
    if a.csv:
        bench.write_csv(samples, a.csv)
    lines = [f"{s.op} {s.digits} {s.seconds:.6g}" for s in samples]
    if a.max_degree is not None:
        fit = bench.fit_poly([(s.digits, s.seconds) for s in samples], a.max_degree)
        lines.append(bench.format_fit(fit))
    return "\n".join(lines)


def _cmd_fit(a: argparse.Namespace) -> str:
    rows = bench.read_csv(a.csv)
    if a.op:
        rows = [r for r in rows if r[0] == a.op]
    by_size: dict[int, list[float]] = {}
    for _, d, _, _, t in rows:
        by_size.setdefault(d, []).append(t)
    if not by_size:
        raise UsageError("no samples to fit")
    pts = [(d, statistics.median(ts)) for d, ts in sorted(by_size.items())]
    return bench.format_fit(bench.fit_poly(pts, a.max_degree))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="consarith", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("gcd", help="greatest common divisor")
    s.add_argument("--algo", choices=("stein", "euclid", "nat"), default="stein")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(run=_cmd_gcd)

    s = sub.add_parser("bezout", help="negative-free Bezout certificate")
    s.add_argument("--algo", choices=("stein", "euclid"), default="stein")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(run=_cmd_bezout)

    s = sub.add_parser("sqrt", help="integer square root")
    s.add_argument("--algo", choices=("fast", "floor", "ceil"), default="fast")
    s.add_argument("n")
    s.set_defaults(run=_cmd_sqrt)

    s = sub.add_parser("prime", help="primality test")
    s.add_argument("n")
    s.set_defaults(run=_cmd_prime)

    s = sub.add_parser("least-factor", help="least factor greater than 1")
    s.add_argument("--odd-only", action="store_true", help="skip even candidates above 2")
    s.add_argument("n")
    s.set_defaults(run=_cmd_least_factor)

    s = sub.add_parser("new-prime", help="prime missing from a list")
    s.add_argument("primes", help="comma-separated list, may be empty")
    s.set_defaults(run=_cmd_new_prime)

    s = sub.add_parser("factor", help="factorization")
    s.add_argument("--method", choices=("trial", "fermat"), default="trial")
    s.add_argument("n")
    s.set_defaults(run=_cmd_factor)

    s = sub.add_parser("pms", help="permutation witness between two prime lists")
    s.add_argument("ps")
    s.add_argument("qs")
    s.set_defaults(run=_cmd_pms)

    s = sub.add_parser("prodsplit", help="four-way split of p0*p1 = q0*q1")
    for name in ("p0", "p1", "q0", "q1"):
        s.add_argument(name)
    s.set_defaults(run=_cmd_prodsplit)

    s = sub.add_parser("bench", help="time an operation")
    s.add_argument("--op", required=True, choices=tuple(bench.OPS))
    s.add_argument("--digits", required=True, help="comma-separated sizes")
    s.add_argument("--reps", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--csv", metavar="PATH")
    s.add_argument("--max-degree", type=int)
    s.set_defaults(run=_cmd_bench)

    s = sub.add_parser("fit", help="polynomial fit of timings from a CSV file")
    s.add_argument("--csv", metavar="PATH", required=True)
    s.add_argument("--op")
    s.add_argument("--max-degree", type=int, default=9)
    s.set_defaults(run=_cmd_fit)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        out = args.run(args)
    except UsageError as e:
        print(f"consarith: error: {e}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, OSError) as e:
        msg = str(e).splitlines()[0] if str(e) else type(e).__name__
        print(f"consarith: error: {msg}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
