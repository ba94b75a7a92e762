"""Bezout certificates without negative numbers.

For positives ``p0, p1`` with ``g = gcd(p0, p1)`` a certificate is one of

* ``Multiple0(q)``:      ``q*p0 = p1``
* ``Multiple1(q)``:      ``q*p1 = p0``
* ``PlusCase(q0, q1)``:  ``g + q0*p0 = q1*p1``
* ``MinusCase(q0, q1)``: ``g + q1*p1 = q0*p0``

Two constructions are provided: one following the case split of the binary
(Stein) gcd and one following Euclid's remainder recursion.  Both run the
recursion with an explicit frame list and then fold the coefficient updates
back up, innermost first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Union

from consarith._backend import kernels
from consarith.numerals import BinPos, Nat, pos_log

__all__ = [
    "Multiple0",
    "Multiple1",
    "PlusCase",
    "MinusCase",
    "BezoutCert",
    "NatBezoutCert",
    "bezout_stein",
    "bezout_euclid",
    "nat_bezout",
    "verify_cert",
    "verify_nat_cert",
    "format_cert",
]


@dataclass(frozen=True)
class Multiple0:
    q: int

    def __str__(self) -> str:
        return f"Multiple0({self.q})"


@dataclass(frozen=True)
class Multiple1:
    q: int

    def __str__(self) -> str:
        return f"Multiple1({self.q})"


@dataclass(frozen=True)
class PlusCase:
    q0: int
    q1: int

    def __str__(self) -> str:
        return f"PlusCase({self.q0},{self.q1})"


@dataclass(frozen=True)
class MinusCase:
    q0: int
    q1: int

    def __str__(self) -> str:
        return f"MinusCase({self.q0},{self.q1})"


BezoutCert = Union[Multiple0, Multiple1, PlusCase, MinusCase]


def format_cert(cert: BezoutCert) -> str:
    from consarith.numerals import print_decimal

    if isinstance(cert, (Multiple0, Multiple1)):
        return f"{type(cert).__name__}({print_decimal(cert.q)})"
    return f"{type(cert).__name__}({print_decimal(cert.q0)},{print_decimal(cert.q1)})"


# frame tags for the Stein construction
_HALVE_BOTH = 0
_EVEN_ODD = 1  # p0 = S0 a, p1 = S1 b
_ODD_EVEN = 2  # p0 = S1 a, p1 = S0 b
_SUB_RIGHT = 3  # both odd, p0 < p1, continue with (p0, p1 - p0)
_SUB_LEFT = 4  # both odd, p1 < p0, continue with (p0 - p1, p1)


def bezout_stein(p0: int, p1: int) -> BezoutCert:
    """Certificate from the extended binary gcd.

    Cases, tried in this order: one argument is 1; both even; one even and
    one odd; both odd (equal, left smaller, right smaller).
    """
    a, b = int(BinPos(p0)), int(BinPos(p1))
    # every even/odd step strips a digit and every subtraction is followed
    # by such a step, so the digit count bounds the recursion
    fuel = int(pos_log(a)) + int(pos_log(b)) + 2
    frames: list[tuple[int, int, int]] = []
    while True:
        if a == 1:
            cert: BezoutCert = Multiple0(b)
            break
        if b == 1:
            cert = Multiple1(a)
            break
        if fuel <= 0:
            raise AssertionError("extended Stein recursion ran out of fuel")
        if not a & 1 and not b & 1:
            frames.append((_HALVE_BOTH, 0, 0))
            a >>= 1
            b >>= 1
            fuel -= 1
        elif not a & 1:
            frames.append((_EVEN_ODD, a >> 1, b >> 1))
            a >>= 1
            fuel -= 1
        elif not b & 1:
            frames.append((_ODD_EVEN, a >> 1, b >> 1))
            b >>= 1
            fuel -= 1
        elif a == b:
            cert = Multiple0(1)
            break
        elif a < b:
            frames.append((_SUB_RIGHT, 0, 0))
            b -= a
        else:
            frames.append((_SUB_LEFT, 0, 0))
            a -= b

    for tag, x, y in reversed(frames):
        cert = _stein_step(tag, x, y, cert)
    return cert


def _stein_step(tag: int, x: int, y: int, c: BezoutCert) -> BezoutCert:
    if tag == _HALVE_BOTH:
        # doubling both sides of every equation keeps the coefficients
        return c
    if tag == _EVEN_ODD:
        # outer pair (S0 x, S1 y), inner pair (x, S1 y)
        if isinstance(c, Multiple0):
            if c.q == 1:
                # x = S1 y, so the right argument divides the left twice over
                return Multiple1(2)
            return PlusCase(y, x)
        if isinstance(c, Multiple1):
            return Multiple1(2 * c.q)
        if isinstance(c, PlusCase):
            return PlusCase((y + 1) * c.q0, c.q1 + c.q0 * x)
        return MinusCase(c.q0 + c.q0 * y, c.q1 + c.q0 * x)
    if tag == _ODD_EVEN:
        # outer pair (S1 x, S0 y), inner pair (S1 x, y)
        if isinstance(c, Multiple0):
            return Multiple0(2 * c.q)
        if isinstance(c, Multiple1):
            if c.q == 1:
                return Multiple0(2)
            return MinusCase(y, x)
        if isinstance(c, PlusCase):
            return PlusCase(c.q0 + c.q1 * y, c.q1 + c.q1 * x)
        return MinusCase(c.q0 + c.q1 * y, (x + 1) * c.q1)
    if tag == _SUB_RIGHT:
        if isinstance(c, Multiple0):
            return Multiple0(c.q + 1)
        if isinstance(c, Multiple1):
            raise AssertionError("an even number cannot divide an odd one")
        if isinstance(c, PlusCase):
            return PlusCase(c.q0 + c.q1, c.q1)
        return MinusCase(c.q0 + c.q1, c.q1)
    # _SUB_LEFT
    if isinstance(c, Multiple1):
        return Multiple1(c.q + 1)
    if isinstance(c, Multiple0):
        raise AssertionError("an even number cannot divide an odd one")
    if isinstance(c, PlusCase):
        return PlusCase(c.q0, c.q0 + c.q1)
    return MinusCase(c.q0, c.q0 + c.q1)


def bezout_euclid(p0: int, p1: int) -> BezoutCert:
    """Certificate from the extended remainder recursion."""
    a, b = int(BinPos(p0)), int(BinPos(p1))
    frames: list[tuple[bool, int]] = []  # (left argument was smaller, quotient)
    while True:
        if a == b:
            cert: BezoutCert = Multiple0(1)
            break
        if a < b:
            k = kernels.floor_div(b, a)
            m = k * a
            if m == b:
                cert = Multiple0(k)
                break
            frames.append((True, k))
            b -= m
        else:
            k = kernels.floor_div(a, b)
            m = k * b
            if m == a:
                cert = Multiple1(k)
                break
            frames.append((False, k))
            a -= m

    for left_smaller, k in reversed(frames):
        c = cert
        if left_smaller:
            # inner pair (p0, r) with p1 = k*p0 + r and r < p0
            if isinstance(c, Multiple1):
                cert = PlusCase(k, 1)
            elif isinstance(c, PlusCase):
                cert = PlusCase(c.q0 + c.q1 * k, c.q1)
            elif isinstance(c, MinusCase):
                cert = MinusCase(c.q0 + c.q1 * k, c.q1)
            else:
                raise AssertionError("remainder is smaller than the divisor")
        else:
            # inner pair (r, p1) with p0 = k*p1 + r and r < p1
            if isinstance(c, Multiple0):
                cert = MinusCase(1, k)
            elif isinstance(c, PlusCase):
                cert = PlusCase(c.q0, c.q1 + c.q0 * k)
            elif isinstance(c, MinusCase):
                cert = MinusCase(c.q0, c.q1 + c.q0 * k)
            else:
                raise AssertionError("remainder is smaller than the divisor")
    return cert


def verify_cert(p0: int, p1: int, cert: BezoutCert) -> bool:
    p0, p1 = int(BinPos(p0)), int(BinPos(p1))
    g = kernels.stein_gcd(p0, p1)
    if isinstance(cert, Multiple0):
        return cert.q >= 1 and cert.q * p0 == p1
    if isinstance(cert, Multiple1):
        return cert.q >= 1 and cert.q * p1 == p0
    if isinstance(cert, PlusCase):
        return cert.q0 >= 1 and cert.q1 >= 1 and g + cert.q0 * p0 == cert.q1 * p1
    if isinstance(cert, MinusCase):
        return cert.q0 >= 1 and cert.q1 >= 1 and g + cert.q1 * p1 == cert.q0 * p0
    return False


@dataclass(frozen=True)
class NatBezoutCert:
    """``side == "n"``: ``g + l0*n = l1*m``; ``side == "m"``: ``g + l0*m = l1*n``."""

    l0: int
    l1: int
    side: Literal["n", "m"]

    def __str__(self) -> str:
        return f"NatBezout({self.l0},{self.l1},{self.side})"


def nat_bezout(n: int, m: int) -> NatBezoutCert:
    """Certificate along the subtraction recursion of the natural gcd."""
    a, b = int(Nat(n)), int(Nat(m))
    steps = bytearray()  # 1: right argument reduced, 0: left argument reduced
    while a and b:
        if a < b:
            steps.append(1)
            b -= a
        else:
            steps.append(0)
            a -= b
    if a == 0:
        l0, l1, side = 0, 1, "n"
    else:
        l0, l1, side = 0, 1, "m"
    for reduced_right in reversed(steps):
        if (side == "n") == bool(reduced_right):
            l0 += l1
        else:
            l1 += l0
    return NatBezoutCert(l0, l1, side)


def verify_nat_cert(n: int, m: int, cert: NatBezoutCert) -> bool:
    n, m = int(Nat(n)), int(Nat(m))
    g = kernels.nat_gcd(n, m)
    if cert.l0 < 0 or cert.l1 < 0:
        return False
    if cert.side == "n":
        return g + cert.l0 * n == cert.l1 * m
    if cert.side == "m":
        return g + cert.l0 * m == cert.l1 * n
    return False
