"""Closed product formulas for ASM and OSASM counts and related special values."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return 1 if n < 2 else n * factorial(n - 1)


def _ratio(a: int, b: int) -> Fraction:
    return Fraction(factorial(a), factorial(b))


def _integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to the non-integer {x}")
    return x.numerator


def _check(n: int, least: int) -> None:
    if not isinstance(n, int) or n < least:
        raise ValueError(f"n must be an integer >= {least}, got {n!r}")


def count_asm(n: int) -> int:
    """prod_{i=0}^{n-1} (3i+1)! / (n+i)!"""
    _check(n, 1)
    x = Fraction(1)
    for i in range(n):
        x *= _ratio(3 * i + 1, n + i)
    return _integer(x, f"count_asm({n})")


def count_osasm_even(n: int) -> int:
    """Number of OSASMs of order 2n: prod_{i=1}^{n} (6i-2)! / (2n+2i)!"""
    _check(n, 1)
    x = Fraction(1)
    for i in range(1, n + 1):
        x *= _ratio(6 * i - 2, 2 * n + 2 * i)
    return _integer(x, f"count_osasm_even({n})")


def count_osasm_odd(n: int) -> int:
    """Number of OSASMs of order 2n+1.

    2^(n-1) (3n+2)!/(2n+1)! prod_{i=1}^{n} (6i-2)!/(2n+2i+1)!; at n = 0 the
    power 2^-1 stays rational and the value is 1.
    """
    _check(n, 0)
    x = Fraction(2) ** (n - 1) * _ratio(3 * n + 2, 2 * n + 1)
    for i in range(1, n + 1):
        x *= _ratio(6 * i - 2, 2 * n + 2 * i + 1)
    return _integer(x, f"count_osasm_odd({n})")


def xo_special(n: int) -> int:
    """X^O_{2n}(1, -1) = (3n-1)!/(2^n (2n-1)!) prod_{i=1}^{n-1} (6i-2)!/(2n+2i-1)!"""
    _check(n, 1)
    x = _ratio(3 * n - 1, 2 * n - 1) / 2**n
    for i in range(1, n):
        x *= _ratio(6 * i - 2, 2 * n + 2 * i - 1)
    return _integer(x, f"xo_special({n})")


def sp_special_value(n: int) -> int:
    """The double-staircase character at (1, ..., 1, -1) with 2n+1 ones.

    3^(n^2) (3n+2)!/(2^(n+1) (2n+1)!) prod_{i=1}^{n} (6i-2)!/(2n+2i+1)!
    """
    _check(n, 0)
    x = Fraction(3 ** (n * n)) * _ratio(3 * n + 2, 2 * n + 1) / 2 ** (n + 1)
    for i in range(1, n + 1):
        x *= _ratio(6 * i - 2, 2 * n + 2 * i + 1)
    return _integer(x, f"sp_special_value({n})")
