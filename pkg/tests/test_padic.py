import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_discrepancy.padic import (BelowResolution, PadicApprox, ParameterError,
                                     PrecisionError, Prime, add, from_integer, is_unit,
                                     mul, padic_abs, truncate)


@pytest.mark.parametrize("v, p, K, digits", [
    (5, 2, 4, (1, 0, 1, 0)),
    (-1, 3, 3, (2, 2, 2)),
    (0, 5, 2, (0, 0)),
])
def test_from_integer(v, p, K, digits):
    assert from_integer(v, p, K).digits == digits


def test_add_mul_examples():
    x = PadicApprox(2, 3, (1, 1, 1))
    y = PadicApprox(2, 3, (1, 0, 0))
    assert add(x, y).digits == (0, 0, 0)
    assert mul(from_integer(3, 2, 3), from_integer(5, 2, 3)).digits == (1, 1, 1)
    z = from_integer(11, 3, 4)
    assert mul(z, from_integer(1, 3, 4)) == z


def test_mismatched_operands():
    with pytest.raises(ParameterError):
        add(from_integer(1, 2, 3), from_integer(1, 3, 3))
    with pytest.raises(ParameterError):
        mul(from_integer(1, 2, 3), from_integer(1, 2, 4))


def test_prime_validation():
    assert Prime(65521) == 65521
    for bad in (0, 1, 4, 9, 65537, 131071):
        with pytest.raises(ParameterError):
            Prime(bad)
    with pytest.raises(ParameterError):
        PadicApprox(2, 2, (2, 0))
    with pytest.raises(ParameterError):
        from_integer(1, 2, 0)


@pytest.mark.parametrize("v, p, expected", [(3, 2, True), (6, 3, False), (0, 5, False)])
def test_is_unit(v, p, expected):
    assert is_unit(from_integer(v, p, 6)) is expected


def test_padic_abs_examples():
    assert padic_abs(from_integer(12, 2, 8)) == Fraction(1, 4)
    assert padic_abs(from_integer(1, 7, 3)) == 1
    marker = padic_abs(from_integer(0, 3, 5))
    assert marker == BelowResolution(3, 5)
    assert marker.upper == Fraction(1, 243)


def test_truncate_examples():
    assert truncate(PadicApprox(2, 4, (1, 0, 1, 1)), 2) == 1
    assert truncate(PadicApprox(3, 3, (2, 1, 0)), 3) == 5
    assert truncate(from_integer(17, 5, 3), 0) == 0
    with pytest.raises(PrecisionError):
        truncate(from_integer(1, 2, 3), 4)


@pytest.mark.parametrize("p, K", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4)])
def test_ring_laws_exhaustive(p, K):
    elems = [from_integer(v, p, K) for v in range(p ** K)]
    q = p ** K
    plus = {(x.value, y.value): add(x, y).value for x in elems for y in elems}
    times = {(x.value, y.value): mul(x, y).value for x in elems for y in elems}
    for (a, b), s in plus.items():
        assert s == (a + b) % q
        assert plus[b, a] == s and times[b, a] == times[a, b]
    for a, b, c in itertools.product(range(q), repeat=3):
        assert plus[plus[a, b], c] == plus[a, plus[b, c]]
        assert times[a, plus[b, c]] == plus[times[a, b], times[a, c]]


def test_round_trip_exhaustive():
    for p, K in ((2, 5), (3, 3), (5, 2)):
        for v in range(p ** K):
            assert truncate(from_integer(v, p, K), K) == v


primes = st.sampled_from([2, 3, 5, 7, 65521])


@given(primes, st.integers(1, 12), st.integers(), st.integers())
def test_ultrametric(p, K, u, v):
    x, y = from_integer(u, p, K), from_integer(v, p, K)
    ax, ay, s = padic_abs(x), padic_abs(y), padic_abs(add(x, y))
    if isinstance(ax, BelowResolution) or isinstance(ay, BelowResolution):
        return
    if isinstance(s, BelowResolution):
        s = 0
    assert s <= max(ax, ay)


@given(primes, st.integers(1, 12), st.integers())
def test_unit_iff_abs_one(p, K, v):
    x = from_integer(v, p, K)
    assert is_unit(x) == (padic_abs(x) == 1)


@given(primes, st.integers(1, 10), st.integers(), st.integers(0, 10))
def test_truncate_is_prefix(p, K, v, n):
    x = from_integer(v, p, K)
    n = min(n, K)
    assert truncate(x, n) == v % p ** n


def test_operators_and_negation():
    x = from_integer(5, 3, 4)
    assert (x + 1).value == 6
    assert (2 * x).value == 10
    assert (x - x).value == 0
    assert (-x + x).value == 0
