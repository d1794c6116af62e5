"""Symplectic characters, including evaluation at degenerate points.

``sp_lambda(a_1..a_N)`` is a ratio of two alternants that both vanish when
arguments repeat or hit +-1.  :func:`sp_eval` restricts the character to the
curve ``a_m x^{c_m}`` with distinct exponents, where both determinants are
nonzero Laurent polynomials in ``x``, divides exactly and sets ``x = 1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

from .field import ZETA, PoleError, sigma
from .laurent import LaurentPoly, lp_exact_div_univariate, power
from .linalg import det
from .sixvertex import osasm_partition

CURVE_VAR = ("x",)


class Comparison(NamedTuple):
    lhs: object
    rhs: object

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def double_staircase(n: int) -> tuple[int, ...]:
    """(n, n, n-1, n-1, ..., 1, 1, 0, 0), of length 2n+2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(k for k in range(n, -1, -1) for _ in range(2))


def normalize_partition(lam: Sequence[int], length: int) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition")
    if len(lam) > length:
        if any(lam[length:]):
            raise ValueError(f"partition {lam} has more than {length} nonzero parts")
        lam = lam[:length]
    return lam + (0,) * (length - len(lam))


def _alternant_entry(a, c: int, e: int, scale: int = 0) -> LaurentPoly:
    """a^e x^(ce) - a^(-e) x^(-ce), times (num(a) den(a))^scale when ``scale`` is set."""
    if scale:
        p, q = a.numerator, a.denominator
        hi = p ** (scale + e) * q ** (scale - e)
        lo = q ** (scale + e) * p ** (scale - e)
        return LaurentPoly(CURVE_VAR, {(c * e,): hi, (-c * e,): -lo})
    return LaurentPoly(CURVE_VAR, {(c * e,): power(a, e), (-c * e,): -power(a, -e)})


def _alternant(lam, args, exponents, integral: bool):
    n = len(args)
    rows = []
    for a, c in zip(args, exponents):
        scale = lam[0] + n if integral else 0
        rows.append([_alternant_entry(a, c, lam[j] + n - j, scale) for j in range(n)])
    return det(rows)


def curve_alternants(lam: Sequence[int], args: Sequence, exponents: Sequence[int], integral: bool = False):
    """Numerator and denominator determinants on the curve, as polynomials in x.

    With ``integral`` (rational arguments only) row m of a determinant for
    partition mu is multiplied by (num(a_m) den(a_m))^(mu_1 + N), so every
    coefficient is an integer.  The ratio then carries an extra factor
    prod (num(a_m) den(a_m))^lam_1.
    """
    n = len(args)
    lam = normalize_partition(lam, n)
    if len(set(exponents)) != n or len(exponents) != n:
        raise ValueError("curve exponents must be pairwise distinct, one per argument")
    if any(isinstance(a, float) for a in args):
        raise TypeError("symplectic character arguments must be exact")
    if any(a == 0 for a in args):
        raise PoleError("symplectic character arguments must be nonzero")
    if integral:
        args = [Fraction(a) for a in args]
    return _alternant(lam, args, exponents, integral), _alternant((0,) * n, args, exponents, integral)


def sp_eval(lam: Sequence[int], args: Sequence, exponents: Sequence[int] | None = None):
    """sp_lambda(args) for any nonzero arguments, repeated or +-1 included.

    ``exponents`` are the curve exponents c_m (default 1..N).
    """
    n = len(args)
    if n == 0:
        return Fraction(1)
    exponents = list(range(1, n + 1)) if exponents is None else list(exponents)
    integral = all(isinstance(a, (int, Fraction)) and not isinstance(a, bool) for a in args)
    num, den = curve_alternants(lam, args, exponents, integral)
    if den.is_zero():
        raise ZeroDivisionError("denominator alternant vanishes identically on the curve")
    value = lp_exact_div_univariate(num, den).evaluate({"x": 1})
    if integral:
        lam1 = normalize_partition(lam, n)[0]
        scale = 1
        for a in args:
            a = Fraction(a)
            scale *= (a.numerator * a.denominator) ** lam1
        value = Fraction(value) / scale
    return value


def sp_direct(lam: Sequence[int], values: Sequence):
    """Pointwise ratio of alternants; only valid where the denominator is nonzero."""
    n = len(values)
    lam = normalize_partition(lam, n)
    num = [[power(v, lam[j] + n - j) - power(v, -(lam[j] + n - j)) for j in range(n)] for v in values]
    den = [[power(v, n - j) - power(v, -(n - j)) for j in range(n)] for v in values]
    d = det(den)
    if d == 0:
        raise ZeroDivisionError("denominator alternant vanishes at this point")
    return det(num) / d


def sp_check_zsymp(n: int, u: Sequence) -> Comparison:
    """Both sides of the character / OSASM partition function identity at q = zeta.

    lhs: sp of the double staircase at (u_1^2, ..., u_{2n+2}^2);
    rhs: 3^{n(n+1)} sigma(q)^{2n+2} Z~_{2n+2}(u)|_{s=0} / prod sigma(q u_i).
    """
    m = 2 * n + 2
    if len(u) != m:
        raise ValueError(f"need {m} arguments, got {len(u)}")
    q = ZETA
    lhs = sp_eval(double_staircase(n), [x * x for x in u])
    denom = 1
    for x in u:
        denom = denom * sigma(q * x)
    if denom == 0:
        raise PoleError("sigma(q u_i) vanishes")
    rhs = 3 ** (n * (n + 1)) * sigma(q) ** m * osasm_partition(m, list(u), q) / denom
    return Comparison(lhs, rhs)
