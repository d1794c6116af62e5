"""
The partition function as a Pfaffian
====================================

The weighted sum over configurations collapses to a prefactor times a
Pfaffian built from the one- and two-row partition functions.  We compare
both sides exactly and time them.
"""

import time
from fractions import Fraction

from asmkit import SkewMatrix, WeightParams, det, partition_direct, partition_pfaffian, pfaffian, psi_values

p = WeightParams(Fraction(3), Fraction(-2, 5), Fraction(7, 3), Fraction(1, 4), q=Fraction(5, 4))
u = [Fraction(2), Fraction(-1, 3), Fraction(7, 5), Fraction(4, 9), Fraction(-5, 2), Fraction(3, 8)]

for n in range(1, 7):
    t0 = time.perf_counter()
    direct = partition_direct(n, u[:n], p)
    t1 = time.perf_counter()
    pf = partition_pfaffian(n, u[:n], p)
    t2 = time.perf_counter()
    print(f"n={n}  equal={direct == pf}  direct {1000 * (t1 - t0):.1f} ms  pfaffian {1000 * (t2 - t1):.1f} ms")

# The Pfaffian squares to the determinant
m = SkewMatrix.from_function(6, lambda i, j: Fraction(i + 2 * j + 1, j + 3))
print(pfaffian(m) ** 2 == det(m.full()))

# One step of the odd-order argument: Psi(2) = 6 Psi(1)
psi1, psi2 = psi_values(2, [Fraction(3), Fraction(-2, 7)])
print(psi2 == 6 * psi1)
