import math
import random

import pytest
from hypothesis import given, strategies as st

from simulprime.numkernel import (
    CapExceeded,
    Residue,
    ZeroModulus,
    exact_div,
    factorial_exact,
    factorial_floor_div_mod,
    factorial_mod,
    floor_div,
    gcd,
    mod_reduce,
    pairwise_coprime,
)


@pytest.mark.parametrize("x, m, expected", [(0, 7, 0), (-1, 7, 6), (721, 7, 0)])
def test_mod_reduce(x, m, expected):
    assert mod_reduce(x, m) == Residue(expected, m)


def test_721_is_seven_times_103():
    assert 7 * 103 == 721


@pytest.mark.parametrize("fn", [mod_reduce, factorial_mod, exact_div, floor_div])
def test_zero_modulus(fn):
    with pytest.raises(ZeroModulus):
        fn(5, 0)


@pytest.mark.parametrize("n, m, expected", [(0, 5, 1), (4, 5, 4), (10, 11, 10)])
def test_factorial_mod(n, m, expected):
    assert factorial_mod(n, m) == expected
    assert math.factorial(n) % m == expected


def test_factorial_mod_modulus_one():
    assert factorial_mod(0, 1) == 0
    assert factorial_mod(7, 1) == 0


@pytest.mark.parametrize("n, expected", [(0, 1), (6, 720), (10, 3628800)])
def test_factorial_exact(n, expected):
    assert factorial_exact(n) == expected


def test_factorial_cap():
    assert factorial_exact(5000) == math.factorial(5000)
    with pytest.raises(CapExceeded):
        factorial_exact(5001)
    with pytest.raises(CapExceeded):
        factorial_exact(11, cap=10)


def test_gcd_and_pairwise():
    assert gcd(0, 9) == 9
    assert pairwise_coprime([3, 5, 7])
    assert not pairwise_coprime([2, 4])
    assert pairwise_coprime([])
    assert not pairwise_coprime([6, 35, 10])


def test_exact_div():
    assert exact_div(25, 5) == 5
    assert 11 * 1571 == 17281
    assert exact_div(17281, 11) == 1571
    assert exact_div(7, 4) is None
    assert exact_div(-21, 7) == -3


def test_floor_div():
    assert math.factorial(10) // 11 == 329890
    assert floor_div(3628800, 11) == 329890
    assert floor_div(24, 5) == 4
    assert floor_div(0, 3) == 0


def test_factorial_mod_matches_naive():
    rng = random.Random(1)
    moduli = [rng.randint(1, 10**6) for _ in range(20)]
    for n in range(0, 301, 7):
        exact = math.factorial(n)
        for m in moduli:
            assert factorial_mod(n, m) == mod_reduce(exact, m).value


@given(st.integers(0, 400), st.integers(1, 10**9))
def test_factorial_mod_property(n, m):
    assert factorial_mod(n, m) == math.factorial(n) % m


@given(st.integers(0, 300), st.integers(1, 5000), st.integers(1, 5000))
def test_factorial_floor_div_mod(n, d, m):
    assert factorial_floor_div_mod(n, d, m) == (math.factorial(n) // d) % m


@given(st.integers(-10**30, 10**30), st.integers(1, 10**12))
def test_mod_reduce_idempotent(x, m):
    r = mod_reduce(x, m)
    assert 0 <= r.value < m
    assert (x - r.value) % m == 0
    assert mod_reduce(r.value, m) == r


@given(st.integers(-10**20, 10**20), st.integers(1, 10**6))
def test_exact_div_round_trip(a, d):
    q = exact_div(a, d)
    if q is not None:
        assert q * d == a
    else:
        assert a % d != 0


@given(st.integers(0, 10**20), st.integers(1, 10**6))
def test_floor_exact_consistency(a, d):
    if a % d == 0:
        assert floor_div(a, d) == exact_div(a, d)
    assert floor_div(a, d) == a // d


def test_residue_rejects_unreduced():
    with pytest.raises(ValueError):
        Residue(7, 7)
    with pytest.raises(ZeroModulus):
        Residue(0, 0)
