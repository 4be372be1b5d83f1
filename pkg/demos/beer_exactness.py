"""
Exact discrepancy of the linear sequence
========================================

For a unit ``a`` the points ``n a + b`` fill Z_p as evenly as any N points
can: the discrepancy is exactly ``1/N``.  A non-unit ``a`` never leaves
the disc ``b + a Z_p``.
"""

from fractions import Fraction

from padic_discrepancy import SequenceSpec, exact_discrepancy

# a = 1 over the 2-adic integers: the report carries an exact Fraction
report = exact_discrepancy(SequenceSpec.linear(1, 0, 10, 2, 12))
print(report.value, report.witness)

# every unit a, every N, and the value never moves off 1/N
for a in (1, 5, 7):
    values = [exact_discrepancy(SequenceSpec.linear(a, 3, N, 3, 12)).value for N in range(1, 41)]
    print(a, all(v == Fraction(1, N) for N, v in enumerate(values, start=1)))

# a = 2 is not a unit mod 2: half of Z_2 is never visited
for N in (4, 64, 1024):
    print(N, exact_discrepancy(SequenceSpec.linear(2, 0, N, 2, 12)).value)

# random points sit between 1/N and 1, far from the linear optimum
print(exact_discrepancy(SequenceSpec.random(1, 64, 2, 12)).to_json())
