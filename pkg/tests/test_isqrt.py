import math
import random

import pytest
from hypothesis import given, strategies as st

from consarith.isqrt import (
    fast_sqrt,
    fast_sqrt_recursive,
    is_square,
    nat_sqrt_ceil,
    pos_sqrt_floor,
    pos_sqrt_floor_traced,
)
from consarith.numerals import pos_log
from oracles import ceil_sqrt


def test_examples():
    assert nat_sqrt_ceil(0) == 0
    assert nat_sqrt_ceil(4) == 2
    assert nat_sqrt_ceil(5) == 3
    assert pos_sqrt_floor(1) == 1
    assert pos_sqrt_floor(12) == 3
    assert fast_sqrt(1) == fast_sqrt(2) == fast_sqrt(3) == 1
    assert fast_sqrt(12) == 3
    assert is_square(1) and is_square(9) and not is_square(8)


def test_exhaustive_small():
    for p in range(1, 5000):
        r = math.isqrt(p)
        assert pos_sqrt_floor(p) == r
        assert fast_sqrt(p) == r
        assert fast_sqrt_recursive(p) == r
        assert nat_sqrt_ceil(p) == ceil_sqrt(p)


def test_nu_probe_count():
    # exactly floor(log p / 2) + 1 probes
    for p in [1, 2, 3, 4, 99, 2**64 + 5, 3**200]:
        root, calls = pos_sqrt_floor_traced(p)
        assert root == math.isqrt(p)
        assert calls == pos_log(p) // 2 + 1


@given(st.integers(1, 2**2048))
def test_sandwich_large(p):
    r = fast_sqrt(p)
    assert r * r <= p < (r + 1) * (r + 1)
    assert pos_sqrt_floor(p) == r


def test_squares_and_neighbours():
    rng = random.Random(3)
    for _ in range(300):
        r = rng.getrandbits(rng.randint(1, 600)) | 3
        assert is_square(r * r)
        assert fast_sqrt(r * r) == r
        assert fast_sqrt(r * r - 1) == r - 1
        assert not is_square(r * r + 1)


@pytest.mark.parametrize("bad", [0, -4])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        fast_sqrt(bad)
