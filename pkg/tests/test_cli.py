import subprocess
import sys

import pytest

from consarith.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["prodsplit", "7921", "676", "2314", "2314"], "(89,(89,(26,26)))"),
        (["gcd", "--algo", "stein", "6", "4"], "2"),
        (["gcd", "--algo", "euclid", "6", "4"], "2"),
        (["gcd", "--algo", "nat", "0", "7"], "7"),
        (["sqrt", "--algo", "fast", "1"], "1"),
        (["sqrt", "--algo", "floor", "12"], "3"),
        (["sqrt", "--algo", "ceil", "5"], "3"),
        (["bezout", "1", "5"], "Multiple0(5)"),
        (["bezout", "--algo", "euclid", "6", "4"], "MinusCase(1,1)"),
        (["prime", "1"], "unit"),
        (["prime", "10007"], "prime"),
        (["prime", "100160063"], "composite"),
        (["least-factor", "91"], "7"),
        (["least-factor", "--odd-only", "91"], "7"),
        (["new-prime", "2,3,5,7,11,13"], "59"),
        (["new-prime", ""], "2"),
        (["factor", "12"], "2,2,3"),
        (["factor", "100160063"], "10007,10009"),
        (["factor", "--method", "fermat", "21"], "7 x 3"),
        (["factor", "--method", "fermat", "7"], "prime"),
        (["pms", "2,2,2", "2,2,2"], "[1,2,0]"),
        (["pms", "2,3,5", "5,2,3"], "[2,0,1]"),
    ],
)
def test_queries(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert out == expected + "\n"


def test_gcd_algorithms_agree(capsys):
    # the unary algorithm only on small inputs; its cost is linear in the value
    for a, b, algos in [
        ("6", "4", ("stein", "euclid", "nat")),
        ("1", "1", ("stein", "euclid", "nat")),
        ("46368", "28657", ("stein", "euclid", "nat")),
        ("123456789012345678901234567890", "987654321098765432109876543210", ("stein", "euclid")),
    ]:
        outs = {run(capsys, "gcd", "--algo", algo, a, b)[1] for algo in algos}
        assert len(outs) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["gcd", "0", "4"],
        ["gcd", "-3", "4"],
        ["gcd", "6"],
        ["sqrt", "0"],
        ["prime", "x"],
        ["factor", "--method", "fermat", "1"],
        ["prodsplit", "2", "3", "5", "7"],
        ["bench", "--op", "stein", "--digits", "0"],
        ["bench", "--op", "nope", "--digits", "5"],
        ["fit", "--csv", "/nonexistent/file.csv"],
        ["--bogus"],
        [],
    ],
)
def test_errors_exit_1_with_one_line(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_bench_and_fit(capsys, tmp_path):
    path = tmp_path / "s.csv"
    code, out, _ = run(capsys, "bench", "--op", "stein", "--digits", "50,100,200", "--reps", "2", "--csv", str(path))
    assert code == 0
    assert len(out.splitlines()) == 3
    assert path.read_text().startswith("op,digits,seed,rep,seconds\n")
    code, out, _ = run(capsys, "fit", "--csv", str(path), "--max-degree", "2")
    assert code == 0
    assert out.startswith("degree: ")


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "consarith", "gcd", "12", "18"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "6\n"
