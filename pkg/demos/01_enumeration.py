"""
Enumerating symmetric alternating sign matrices
===============================================

List the diagonally symmetric ASMs of small order, read off the R, S, T
statistics and assemble the generating functions.
"""

from asmkit import SymmetryClass, count, enumerate_matrices, genfunc_dsasm, genfunc_osasm, statistics
from asmkit.laurent import lp_eval

# The five DSASMs of order 3, in lexicographic order (-1 < 0 < 1).
for a in enumerate_matrices(3, SymmetryClass.DSASM):
    print(a.to_text())
    print("R, S, T =", tuple(statistics(a)))
    print()

# Their generating function; each term is r^R s^S t^T.
print("X_3 =", genfunc_dsasm(3))

# Off-diagonal symmetric ASMs: no nonzero diagonal entry for even order,
# exactly one for odd order.
for n in range(1, 5):
    print(f"X^O_{n} =", genfunc_osasm(n))

# Class sizes for the first few orders
for cls in SymmetryClass:
    top = 6 if cls is SymmetryClass.ASM else 8
    print(cls.value, [count(n, cls) for n in range(1, top + 1)])

# X^O_{2n} at r = 1, t = -1 gives 1, 1, 2, 10
print([lp_eval(genfunc_osasm(2 * n), {"r": 1, "t": -1}) for n in range(1, 5)])
