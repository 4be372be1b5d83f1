import cmath
import itertools
import math

import pytest

from padic_discrepancy.characters import (Character, enumerate_nontrivial, evaluate,
                                          parse_character, root_of_unity)
from padic_discrepancy.padic import (ParameterError, PrecisionError, PadicApprox,
                                     SizeError, from_integer)


@pytest.mark.parametrize("p, n, m, order", [(2, 0, 0, 1), (2, 2, 1, 4), (3, 3, 7, 27)])
def test_order(p, n, m, order):
    assert Character(p, n, m).order == order


def test_invalid_characters():
    for args in ((2, 0, 1), (2, 2, 2), (3, 1, 3), (3, 2, 0), (2, -1, 0)):
        with pytest.raises(ParameterError):
            Character(*args)


def test_enumeration_counts():
    assert enumerate_nontrivial(2, 1) == [Character(2, 1, 1)]
    assert len(enumerate_nontrivial(2, 2)) == 3
    chars = enumerate_nontrivial(3, 2)
    # brute-force gcd filter over all roots of order 3 and 9
    brute = [(n, m) for n in (1, 2) for m in range(3 ** n) if math.gcd(m, 3) == 1]
    assert len(chars) == len(brute) == 8
    assert [(c.n, c.m) for c in chars] == brute
    for p, K in ((2, 6), (3, 4), (5, 3)):
        chars = enumerate_nontrivial(p, K)
        assert len(chars) == p ** K - 1
        for k in range(1, K + 1):
            assert sum(c.n == k for c in chars) == p ** k - p ** (k - 1)
        assert chars == sorted(chars)


def test_enumeration_size_guard():
    with pytest.raises(SizeError):
        enumerate_nontrivial(2, 32)


def test_eval_examples():
    assert evaluate(Character.trivial(5), from_integer(123, 5, 4)) == 1
    assert abs(evaluate(Character(2, 2, 1), from_integer(3, 2, 4)) - (-1j)) < 1e-15
    x = PadicApprox(3, 3, (2, 1, 1))
    assert abs(evaluate(Character(3, 1, 1), x) - cmath.exp(4j * math.pi / 3)) < 1e-15


def test_eval_precision_error():
    with pytest.raises(PrecisionError):
        evaluate(Character(2, 4, 1), from_integer(3, 2, 3))


def test_unit_modulus():
    for zeta in enumerate_nontrivial(5, 3):
        for v in range(0, 125, 7):
            assert abs(abs(zeta(from_integer(v, 5, 3))) - 1) <= 4 * 2.0 ** -52


@pytest.mark.parametrize("p", [2, 3])
def test_homomorphism_exhaustive(p):
    for n in range(1, 4):
        q = p ** n
        elems = [from_integer(v, p, n) for v in range(q)]
        for m in range(1, q):
            if m % p == 0:
                continue
            zeta = Character(p, n, m)
            vals = [zeta(x) for x in elems]
            for i, j in itertools.product(range(q), repeat=2):
                assert abs(vals[(i + j) % q] - vals[i] * vals[j]) < 1e-12


def test_depends_only_on_leading_digits():
    zeta = Character(3, 2, 4)
    base = zeta(from_integer(5, 3, 6))
    for high in range(1, 81):
        assert zeta(from_integer(5 + 9 * high, 3, 6)) == base


def test_zero_and_one():
    for zeta in enumerate_nontrivial(3, 3):
        assert zeta(from_integer(0, 3, 3)) == 1
        assert abs(zeta(from_integer(1, 3, 3)) - cmath.exp(2j * math.pi * zeta.m / zeta.order)) < 1e-15


def test_injective_on_one():
    one = from_integer(1, 3, 4)
    values = [Character.trivial(3)(one)] + [z(one) for z in enumerate_nontrivial(3, 4)]
    for a, b in itertools.combinations(values, 2):
        assert abs(a - b) > 1e-6


def test_serialization_round_trip():
    zeta = Character(2, 3, 5)
    assert str(zeta) == "2^3:5"
    assert parse_character("2^3:5") == zeta
    assert parse_character(str(Character.trivial(7))) == Character.trivial(7)
    with pytest.raises(ParameterError):
        parse_character("2^3")


def test_root_of_unity_reduces_phase():
    assert root_of_unity(0, 7) == 1
    assert abs(root_of_unity(10 ** 30 + 1, 10 ** 30) - cmath.exp(2j * math.pi / 10 ** 30)) < 1e-15
