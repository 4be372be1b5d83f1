import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from padic_discrepancy.characters import Character, enumerate_nontrivial
from padic_discrepancy.discrepancy import Disc
from padic_discrepancy.fourier import (ZERO, character_values, disc_coeff_oracle,
                                       disc_fourier_coeff, haar_integrate,
                                       integral_est_bound, radial_haar_oracle,
                                       radial_integral, radial_level_sum, radial_sq_sum)
from padic_discrepancy.padic import ParameterError
from padic_discrepancy.verify import radial_sq_numeric


def all_characters(p, n):
    return [Character.trivial(p)] + enumerate_nontrivial(p, n)


def test_disc_coeff_examples():
    c = disc_fourier_coeff(Disc(2, 1, 0), Character(2, 1, 1))
    assert complex(c) == 0.5 and c.coeff == Fraction(1, 2)
    zero = disc_fourier_coeff(Disc(2, 1, 1), Character(2, 2, 1))
    assert zero == ZERO and zero.is_zero and complex(zero) == 0
    c = disc_fourier_coeff(Disc(3, 2, 1), Character(3, 1, 1))
    assert abs(complex(c) - cmath.exp(-2j * math.pi / 3) / 9) < 1e-15


def test_haar_integrate_examples():
    assert haar_integrate(lambda r: np.ones(r.shape), 3, 4) == 1
    assert haar_integrate(np.ones(8), 2, 3) == 1
    for zeta in enumerate_nontrivial(3, 3):
        assert abs(haar_integrate(lambda r: character_values(zeta, r), 3, 3)) < 1e-14
    for k in range(4):
        disc = Disc(2, k, (2 ** k) // 3)
        assert haar_integrate(lambda r: disc.contains(r).astype(float), 2, 5) == 2.0 ** -k


@pytest.mark.parametrize("p", [2, 3])
def test_charfun_matches_haar_oracle(p):
    for k in range(4):
        for a in range(p ** k):
            disc = Disc(p, k, a)
            for zeta in all_characters(p, 3):
                closed = complex(disc_fourier_coeff(disc, zeta))
                assert abs(closed - disc_coeff_oracle(disc, zeta, depth=6)) < 1e-12


@pytest.mark.parametrize("p", [2, 3, 5])
def test_change_of_variables(p):
    rng = np.random.default_rng(p)
    for d in range(1, 6):
        if p ** d > 4000:
            break
        g = rng.normal(size=p ** d) + 1j * rng.normal(size=p ** d)
        for k in range(d):
            for a in range(0, p ** k, max(1, p ** k // 5)):
                disc = Disc(p, k, a)
                lhs = haar_integrate(lambda r: disc.contains(r) * g[r], p, d)
                rhs = haar_integrate(lambda r: g[(a + p ** k * r) % p ** d], p, d - k) / p ** k
                assert abs(lhs - rhs) < 1e-14


def test_radial_examples():
    assert radial_integral(Fraction(1, 2), Character.trivial(2)) == Fraction(1, 6)
    assert radial_integral(Fraction(1, 2), Character(2, 2, 1)) == Fraction(-1, 12)
    assert radial_integral(Fraction(1, 2), Character(2, 1, 1)) == Fraction(1, 6)
    for bad in (Fraction(1), Fraction(1, 3), Fraction(3, 4), Fraction(0)):
        with pytest.raises(ParameterError):
            radial_integral(bad, Character.trivial(2))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_radial_estimate_and_level_sum(p):
    for k in range(1, 5):
        R = Fraction(1, p ** k)
        for n in range(0, 7):
            for omega in ([Character.trivial(p)] if n == 0 else
                          [Character(p, n, 1), Character(p, n, p ** n - 1)]):
                closed = radial_integral(R, omega)
                assert abs(closed) <= integral_est_bound(R, omega)
                assert abs(float(closed) - radial_level_sum(R, omega)) < 1e-12


@pytest.mark.parametrize("p, depth", [(2, 12), (3, 7)])
def test_radial_against_haar_average(p, depth):
    # brute-force average over residues; the disc at 0 is dropped, error <= p^(-2 depth)
    for k in range(1, 4):
        R = Fraction(1, p ** k)
        for omega in all_characters(p, 5):
            approx = radial_haar_oracle(R, omega, depth)
            assert abs(float(radial_integral(R, omega)) - approx) <= p ** (-2 * depth) + 1e-15


def test_radial_sq_sum_examples():
    exact, bound = radial_sq_sum(Fraction(1, 2), 2)
    assert bound == 1 and exact < bound
    exact, bound = radial_sq_sum(Fraction(1, 9), 3)
    assert bound == Fraction(18, 729) and exact < bound


@pytest.mark.parametrize("p", [2, 3, 5])
def test_radial_sq_sum_numeric(p):
    for k in range(1, 5):
        R = Fraction(1, p ** k)
        exact, bound = radial_sq_sum(R, p)
        assert exact < bound
        assert abs(float(exact) - radial_sq_numeric(R, p, 10)) < 1e-12


def test_radial_sq_sum_by_hand():
    # p = 2, R = 1/2: two characters at 1/6 and (2^l - 2^(l-1)) at -1/(3 * 4^(l-1))
    terms = 2 * Fraction(1, 36) + sum(
        (2 ** l - 2 ** (l - 1)) * Fraction(1, 9 * 16 ** (l - 1)) for l in range(2, 60))
    assert abs(float(radial_sq_sum(Fraction(1, 2), 2).value - terms)) < 1e-15
