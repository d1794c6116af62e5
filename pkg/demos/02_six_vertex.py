"""
Six-vertex configurations and partition functions
=================================================

Each DSASM corresponds to a six-vertex configuration on a triangular grid.
Summing vertex weights over all of them gives the partition function.
"""

from fractions import Fraction

from asmkit import (
    ZETA, AsmMatrix, WeightParams, config_to_dsasm, dsasm_to_config, osasm_partition, partition_direct,
    partition_specialized,
)
from asmkit.field import render

# The DSASM with a -1 in the middle and its local configurations
a = AsmMatrix(((0, 1, 0), (1, -1, 1), (0, 1, 0)))
c = dsasm_to_config(a)
print(c.dump())
assert config_to_dsasm(c) == a

# General weights over the rationals: any q with q^8 != 1 will do
p = WeightParams(alpha=Fraction(2), beta=Fraction(1, 3), gamma=Fraction(5), delta=Fraction(-1, 2), q=Fraction(3, 2))
u = [Fraction(2), Fraction(5, 7), Fraction(-3, 4)]
print("Z_3 =", partition_direct(3, u, p))

# At q = zeta (a primitive 12th root of unity) and s = 1 every configuration
# weighs 1 when all spectral parameters equal 1, so Z~_n counts DSASMs.
print([render(partition_specialized(n, [1] * n, 1, ZETA)) for n in range(1, 7)])

# Restricting to OSASMs counts those instead
print([render(osasm_partition(n, [1] * n, ZETA)) for n in range(1, 7)])

# Away from u = 1 the values live in Q(zeta); z stands for zeta
print(render(osasm_partition(4, [Fraction(2), Fraction(3), Fraction(1, 5), Fraction(7)], ZETA)))
