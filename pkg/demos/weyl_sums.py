"""
Weyl sums over the Pruefer group
================================

A character of Z_p is a root of unity of order ``p**n``; it sees only the
first ``n`` digits.  ``weyl_table`` computes every normalized Weyl sum up to
a given order with one radix-p transform.
"""

import cmath

import numpy as np

from padic_discrepancy import Character, SequenceSpec, weyl_sum, weyl_table
from padic_discrepancy.leveque import linear_weyl_closed_form, non_equidistribution_witness
from padic_discrepancy.padic import from_integer

seq = SequenceSpec.linear(1, 0, 4, 3, 6)
zeta = Character(3, 1, 1)
print(weyl_sum(seq, zeta), cmath.exp(2j * cmath.pi / 3) / 4)

# the whole table at once, and the same numbers character by character
table = weyl_table(SequenceSpec.random(5, 500, 2, 10), 10)
slow = weyl_table(SequenceSpec.random(5, 500, 2, 10), 10, method="direct")
print(len(table), np.abs(table.finest - slow.finest).max())

# The largest |W| shows how far from even the points are
worst = max(table.items(), key=lambda item: abs(item[1]))
print(worst[0], abs(worst[1]))

# Linear sequences have closed-form sums
a, b = from_integer(5, 2, 10), from_integer(1, 2, 10)
lw = linear_weyl_closed_form(a, b, Character(2, 4, 3), 100)
print(lw.value, weyl_sum(SequenceSpec.linear(5, 1, 100, 2, 10), Character(2, 4, 3)))

# a = 12 = 4 * 3 over Z_2: the order-4 character is constant on the sequence
w = non_equidistribution_witness(from_integer(12, 2, 10))
print(w, [abs(weyl_sum(SequenceSpec.linear(12, 1, N, 2, 10), w)) for N in (1, 10, 100)])
