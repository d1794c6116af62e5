"""
Product formulas and the identity suite
=======================================

Closed products for ASM and OSASM counts, the factorisation of odd OSASM
counts through X^O(1, -1), and the seeded identity checks behind the CLI.
"""

from asmkit import count_asm, count_osasm_even, count_osasm_odd, run_check, sp_special_value, xo_special

print("ASM       ", [count_asm(n) for n in range(1, 9)])
print("OSASM even", [count_osasm_even(n) for n in range(1, 7)])
print("OSASM odd ", [count_osasm_odd(n) for n in range(0, 7)])

# Odd counts are 4^n times the even-order special value
for n in range(8):
    assert count_osasm_odd(n) == 4**n * xo_special(n + 1)

print("sp values ", [sp_special_value(n) for n in range(5)])

# A few identity checks; each report serialises to JSON
for ident, size in [("thm-ox", 5), ("sym-even-osasm", 6), ("conj17-odd-osasm", 1), ("lemma-zx", 4)]:
    print(run_check(ident, size, trials=3, seed=1).to_json())
