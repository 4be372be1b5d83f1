"""Fourier coefficients on Z_p in closed form, and Haar-sum oracles for them.

Closed forms are exact: a rational magnitude times a root of unity with an
integer phase.  Floating point only enters the oracles, which integrate step
functions on residues mod ``p**d`` by plain averaging.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .characters import Character, root_of_unity, roots_of_unity
from .discrepancy import Disc
from .padic import ParameterError, Prime


@dataclass(frozen=True)
class Phased:
    """``coeff * exp(2 pi i num / den)`` held exactly."""

    coeff: Fraction
    num: int = 0
    den: int = 1

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def __complex__(self):
        if self.coeff == 0:
            return 0j
        return float(self.coeff) * root_of_unity(self.num, self.den)


ZERO = Phased(Fraction(0))


def disc_fourier_coeff(disc: Disc, zeta: Character) -> Phased:
    """Fourier coefficient of the indicator of ``disc`` at ``zeta``.

    ``zeta**-a * p**-k`` when ``zeta`` has order at most ``p**k``, else exactly 0.
    """
    if disc.p != zeta.p:
        raise ParameterError("disc and character live over different primes")
    if zeta.n > disc.k:
        return ZERO
    return Phased(disc.measure, -zeta.m * disc.a, zeta.order)


def haar_integrate(g, p, d: int):
    """Haar integral of a function constant on the discs of depth ``d``.

    ``g`` is either a callable accepting an integer ndarray of residues
    ``0 .. p**d - 1`` (it must vectorise), or the array of its values.
    """
    p = Prime(p)
    if d < 1:
        raise ParameterError(f"depth must be >= 1, got {d}")
    q = p ** d
    values = g(np.arange(q, dtype=np.int64)) if callable(g) else g
    values = np.broadcast_to(np.asarray(values), (q,))
    return np.sum(values) / q


def character_values(zeta: Character, residues, sign: int = 1) -> np.ndarray:
    """``zeta**(sign * r)`` for an integer array of residues."""
    if zeta.n == 0:
        return np.ones(np.shape(residues), dtype=complex)
    q = zeta.order
    r = np.asarray(residues, dtype=np.int64) % q
    return roots_of_unity((sign * zeta.m % q) * r % q, q)


def _radius_exponent(R, p) -> int:
    R = Fraction(R)
    if not 0 < R < 1:
        raise ParameterError(f"radius must lie in (0, 1), got {R}")
    k, den = 0, R.denominator
    while den % p == 0:
        den //= p
        k += 1
    if R.numerator != 1 or den != 1:
        raise ParameterError(f"radius {R} is not a power of 1/{p}")
    return k


def radial_integral(R, omega: Character) -> Fraction:
    """``int_{|y| <= R} |y| omega**-y dmu(y)`` for ``R = p**-k``, ``k >= 1``.

    Equals ``p R**2 / (p + 1)`` if ``||omega|| <= 1/R`` and
    ``-p**2 / ((p + 1) ||omega||**2)`` otherwise.
    """
    p = omega.p
    k = _radius_exponent(R, p)
    if omega.n <= k:
        return Fraction(p, (p + 1) * p ** (2 * k))
    return Fraction(-p * p, (p + 1) * omega.order ** 2)


class RadialSquareSum(NamedTuple):
    value: Fraction
    bound: Fraction


def radial_sq_sum(R, p) -> RadialSquareSum:
    """``sum over all omega of radial_integral(R, omega)**2``, with the bound ``2 p**2 R**3``.

    The ``p**k`` characters of order at most ``1/R`` share one value; orders
    ``p**l`` with ``l > k`` contribute ``(p**l - p**(l-1))`` equal terms each,
    a geometric series in ``p**-3l``.
    """
    p = Prime(p)
    k = _radius_exponent(R, p)
    R = Fraction(1, p ** k)
    inner = p ** k * Fraction(p, (p + 1) * p ** (2 * k)) ** 2
    # sum_{l > k} (1 - 1/p) p**l * p**4 / ((p + 1)**2 p**(4l))
    outer = (1 - Fraction(1, p)) * Fraction(p ** 4, (p + 1) ** 2) \
        * Fraction(1, p ** (3 * k) * (p ** 3 - 1))
    return RadialSquareSum(inner + outer, 2 * p * p * R ** 3)


def integral_est_bound(R, omega: Character) -> Fraction:
    """``p / max(1/R, ||omega||)**2``."""
    p = omega.p
    k = _radius_exponent(R, p)
    return Fraction(p, max(p ** k, omega.order) ** 2)


# -- oracles -----------------------------------------------------------------

def disc_coeff_oracle(disc: Disc, zeta: Character, depth: int = 6) -> complex:
    """Haar average of ``1_disc(x) zeta**-x`` over residues mod ``p**depth``."""
    if depth < max(disc.k, zeta.n):
        raise ParameterError("oracle depth must resolve both the disc and the character")
    p = disc.p
    return complex(haar_integrate(
        lambda r: disc.contains(r) * character_values(zeta, r, sign=-1), p, depth))


def radial_level_sum(R, omega: Character, levels: int = 40) -> complex:
    """Shell decomposition ``sum_{j >= k} p**-j (chi_j - chi_{j+1})^(omega)``, floating point.

    ``chi_j`` is the indicator of ``p**j Z_p``; coefficients come from
    :func:`disc_fourier_coeff`.  Summed to ``j = k + levels``.
    """
    p = omega.p
    k = _radius_exponent(R, p)
    total = 0j
    for j in range(k, k + levels + 1):
        inner = complex(disc_fourier_coeff(Disc(p, j, 0), omega))
        outer = complex(disc_fourier_coeff(Disc(p, j + 1, 0), omega))
        total += (inner - outer) / p ** j
    return total


def radial_haar_oracle(R, omega: Character, depth: int) -> complex:
    """Haar average of ``|y| 1_{|y| <= R} omega**-y`` at ``depth``, with ``|0|`` taken as 0.

    The residue 0 stands for the disc ``p**depth Z_p``, so the truncation
    error is at most ``p**(-2 depth)``.
    """
    p = omega.p
    k = _radius_exponent(R, p)
    if depth < max(k, omega.n):
        raise ParameterError("oracle depth too small")

    def integrand(r):
        absval = np.zeros(r.shape)
        v = r.copy()
        scale = np.ones(r.shape)
        nz = v != 0
        # |r|_p for nonzero residues: strip factors of p
        while True:
            div = nz & (v % p == 0)
            if not div.any():
                break
            v[div] //= p
            scale[div] /= p
        absval[nz] = scale[nz]
        inside = absval <= float(Fraction(1, p ** k))
        return absval * inside * character_values(omega, r, sign=-1)

    return complex(haar_integrate(integrand, p, depth))
