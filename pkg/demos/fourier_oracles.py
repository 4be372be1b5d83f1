"""
Closed forms against Haar averages
==================================

Functions constant on discs of depth d integrate to plain averages over
residues mod ``p**d``.  That turns each Fourier closed form into a finite
check.
"""

from fractions import Fraction

from padic_discrepancy import Character
from padic_discrepancy.discrepancy import Disc, l2_norm_sq
from padic_discrepancy.fourier import (disc_coeff_oracle, disc_fourier_coeff, radial_haar_oracle,
                                       radial_integral, radial_sq_sum)
from padic_discrepancy.sequences import SequenceSpec

disc = Disc(3, 2, 5)
for zeta in (Character(3, 1, 2), Character(3, 2, 4), Character(3, 3, 1)):
    print(zeta, complex(disc_fourier_coeff(disc, zeta)), disc_coeff_oracle(disc, zeta))

# the radial integral, closed form and truncated Haar sum
R = Fraction(1, 4)
for omega in (Character.trivial(2), Character(2, 2, 1), Character(2, 5, 3)):
    print(omega, float(radial_integral(R, omega)), radial_haar_oracle(R, omega, depth=14).real)

# sum of squares over all characters, with its bound
print(radial_sq_sum(R, 2))

# Squared L2 norm of the local discrepancy: one point at 0 gives 2/21
print(l2_norm_sq(SequenceSpec.explicit([0], 2, 10)))
