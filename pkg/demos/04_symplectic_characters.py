"""
Symplectic characters at degenerate points
==========================================

sp_lambda is a ratio of two alternants, and both vanish when arguments
repeat or equal +-1.  Restricting to a curve a_m x^(c_m) and dividing
exactly recovers the value there.
"""

from fractions import Fraction

from asmkit import ZETA, double_staircase, sp_check_zsymp, sp_direct, sp_eval, sp_special_value
from asmkit.field import render

# Generic point: the curve and the plain ratio agree
args = [Fraction(2), Fraction(3, 5), Fraction(-7, 4)]
print(sp_eval((2, 1), args) == sp_direct((2, 1), args))

# The double staircase (n, n, n-1, n-1, ..., 0, 0) at (1, ..., 1, -1)
for n in range(4):
    lam = double_staircase(n)
    value = sp_eval(lam, [1] * (2 * n + 1) + [-1])
    print(lam, value, value == sp_special_value(n))

# The character of the double staircase equals an even-order OSASM partition
# function at q = zeta
c = sp_check_zsymp(1, [Fraction(2), Fraction(-3), Fraction(5, 7), Fraction(1, 4)])
print(render(c.lhs), c.holds)

# Arguments may be cyclotomic too
print(render(sp_eval((1, 1, 0, 0), [ZETA, ZETA, 1, -1])))
