"""
How fast the discrepancy bound decays
=====================================

The upper bound computed from Weyl sums is compared with the exact
discrepancy along a geometric sweep of N, and a least-squares line is fitted
to the log-log plot.
"""

import numpy as np

from padic_discrepancy import SequenceSpec, discrepancy_bound, exact_discrepancy
from padic_discrepancy.leveque import corollary_constant, leveque_constant

p, K = 2, 16
ns = [2 ** j for j in range(4, 15)]

rows = []
for N in ns:
    seq = SequenceSpec.linear(1, 0, N, p, K)
    rows.append((N, exact_discrepancy(seq).value, discrepancy_bound(seq, K).bound))

for N, d, bound in rows:
    print(f"{N:6d}  D={float(d):.3e}  bound={bound:.3e}  ratio={bound / float(d):8.1f}")

# slope of log(bound) against log(N)
slope, intercept = np.polyfit(np.log(ns), np.log([b for _, _, b in rows]), 1)
print("slope", round(slope, 4))

# The envelope C(p) c N^-1/2, with c from summing the sine estimates
c = corollary_constant(p)
print("C(2) =", leveque_constant(p), " c =", c)
print(all(b <= leveque_constant(p) * c / np.sqrt(N) for N, _, b in rows))
