"""Determinants and Pfaffians over exact domains."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from .laurent import InexactDivisionError, LaurentPoly

BRUTEFORCE_PFAFFIAN_CAP = 12


class SkewMatrix:
    """Even-order skew-symmetric matrix stored by its strict upper triangle.

    ``upper[(i, j)]`` for ``0 <= i < j < order``; missing entries are zero.
    """

    __slots__ = ("order", "upper")

    def __init__(self, order: int, upper: dict[tuple[int, int], object] | None = None):
        if order < 0 or order % 2:
            raise ValueError(f"skew matrix order must be even, got {order}")
        self.order = order
        self.upper = {}
        for (i, j), v in (upper or {}).items():
            if not 0 <= i < j < order:
                raise IndexError(f"({i}, {j}) is not a strict upper position for order {order}")
            self.upper[(i, j)] = v

    @classmethod
    def from_function(cls, order: int, entry: Callable[[int, int], object]) -> SkewMatrix:
        return cls(order, {(i, j): entry(i, j) for i, j in combinations(range(order), 2)})

    @classmethod
    def from_full(cls, rows: Sequence[Sequence]) -> SkewMatrix:
        n = len(rows)
        for i in range(n):
            if rows[i][i] != 0:
                raise ValueError("skew matrix needs a zero diagonal")
            for j in range(i + 1, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not negatives")
        return cls(n, {(i, j): rows[i][j] for i, j in combinations(range(n), 2)})

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return 0
        if i < j:
            return self.upper.get((i, j), 0)
        return -self.upper.get((j, i), 0)

    def full(self) -> list[list]:
        n = self.order
        return [[self[i, j] for j in range(n)] for i in range(n)]

    def scaled(self, k: Sequence) -> SkewMatrix:
        """The matrix with entries ``k_i * k_j * M_ij``."""
        return SkewMatrix(self.order, {(i, j): k[i] * k[j] * v for (i, j), v in self.upper.items()})


# dense univariate polynomials: coefficient lists, lowest degree first --------

def _ptrim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _ptrim(out)


def _psub(a: list, b: list) -> list:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = list(a)
    for i, y in enumerate(b):
        out[i] -= y
    return _ptrim(out)


def _scalar_div(c, d):
    if isinstance(c, int) and isinstance(d, int):
        q, r = divmod(c, d)
        return q if r == 0 else Fraction(c, d)
    return c / d


def _pdivexact(a: list, b: list) -> list:
    """Quotient of ``a`` by ``b``, which must divide it."""
    if not a:
        return []
    qlen = len(a) - len(b) + 1
    if qlen <= 0:
        raise InexactDivisionError("divisor degree exceeds dividend degree")
    rem = list(a)
    lead = b[-1]
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + len(b) - 1]
        if c == 0:
            continue
        f = _scalar_div(c, lead)
        quot[k] = f
        for i, y in enumerate(b):
            if y != 0:
                rem[k + i] -= f * y
    if any(rem):
        raise InexactDivisionError("remainder is nonzero")
    return quot


def _laurent_det(rows: Sequence[Sequence], variables) -> LaurentPoly:
    """Bareiss over coefficient lists after shifting each row to nonnegative degrees."""
    shift = 0
    dense = []
    for row in rows:
        los = [min(e for (e,) in x.terms) for x in row if not x.is_zero()]
        lo = min(los) if los else 0
        shift += lo
        drow = []
        for x in row:
            coeffs = [0] * (x.degree_range(variables[0])[1] - lo + 1) if not x.is_zero() else []
            for (e,), c in x.terms.items():
                coeffs[e - lo] = c
            drow.append(coeffs)
        dense.append(drow)
    d = bareiss_det(dense, _pdivexact, [1], mul=_pmul, sub=_psub)
    return LaurentPoly(variables, {(shift + i,): c for i, c in enumerate(d) if c != 0})


def _reciprocal(x):
    return Fraction(1, x) if isinstance(x, int) else 1 / x


def _is_integer_matrix(rows) -> bool:
    return all(isinstance(x, int) for row in rows for x in row)


def _is_zero(x) -> bool:
    return not x if isinstance(x, list) else x == 0


def _neg(x):
    return [-c for c in x] if isinstance(x, list) else -x


def bareiss_det(rows: Sequence[Sequence], exact_div: Callable, one=1, mul=None, sub=None):
    """Fraction-free elimination; ``exact_div(a, b)`` must return ``a / b`` exactly.

    ``mul`` and ``sub`` override ``*`` and ``-`` for ring elements without operators.
    """
    mul = mul or (lambda a, b: a * b)
    sub = sub or (lambda a, b: a - b)
    zero = sub(one, one)
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(sub(mul(row_i[j], pivot), mul(lead, row_k[j])), prev)
            row_i[k] = zero
        prev = pivot
    return m[n - 1][n - 1] if sign > 0 else _neg(m[n - 1][n - 1])


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    assert r == 0, "Bareiss division must be exact over the integers"
    return q


def gauss_det(rows: Sequence[Sequence]):
    """Determinant over a field by elimination with nonzero-pivot row swaps."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            return 0 * det
        if p != k:
            m[k], m[p] = m[p], m[k]
            det = -det
        pivot = m[k][k]
        det = det * pivot
        inv = _reciprocal(pivot)
        for i in range(k + 1, n):
            f = m[i][k]
            if f == 0:
                continue
            f = f * inv
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = row_i[j] - f * row_k[j]
    return det


def det(rows: Sequence[Sequence]):
    """Exact determinant of a square matrix (empty matrix -> 1).

    Integer matrices and univariate Laurent-polynomial matrices go through
    Bareiss (the latter on dense coefficient lists); anything else is
    treated as living in a field.
    """
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("det needs a square matrix")
    if n == 0:
        return 1
    if _is_integer_matrix(rows):
        return bareiss_det(rows, _int_exact_div)
    polys = [x for row in rows for x in row if isinstance(x, LaurentPoly)]
    if polys:
        variables = polys[0].variables
        one = LaurentPoly.constant(1, variables)
        lifted = [[x if isinstance(x, LaurentPoly) else one * x for x in row] for row in rows]
        if len(variables) != 1:
            raise ValueError("polynomial determinants are supported in one variable only")
        return _laurent_det(lifted, variables)
    return gauss_det(rows)


def _as_skew(m) -> SkewMatrix:
    return m if isinstance(m, SkewMatrix) else SkewMatrix.from_full(m)


def pfaffian(m) -> object:
    """Pfaffian by skew-symmetric elimination, O(order^3) field operations.

    Each step pairs index ``k`` with a partner holding a nonzero entry in
    row ``k`` and replaces the trailing block by its skew Schur complement.
    """
    a = _as_skew(m).full()
    n = len(a)
    result = Fraction(1)
    for k in range(0, n, 2):
        p = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if p is None:
            return 0 * result
        if p != k + 1:
            for row in a:
                row[k + 1], row[p] = row[p], row[k + 1]
            a[k + 1], a[p] = a[p], a[k + 1]
            result = -result
        pivot = a[k][k + 1]
        result = result * pivot
        inv = _reciprocal(pivot)
        rk, rk1 = a[k], a[k + 1]
        for i in range(k + 2, n):
            # S_ij = A_ij + (A_{k+1,i} A_{k,j} - A_{k,i} A_{k+1,j}) / A_{k,k+1}
            ci = rk1[i] * inv
            di = rk[i] * inv
            row = a[i]
            for j in range(i + 1, n):
                row[j] = row[j] + ci * rk[j] - di * rk1[j]
                a[j][i] = -row[j]
    return result


def perfect_matchings(items: Sequence[int]):
    """All partitions of ``items`` into pairs, each pair in increasing order."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for t, partner in enumerate(rest):
        remaining = rest[:t] + rest[t + 1:]
        for tail in perfect_matchings(remaining):
            yield [(first, partner)] + tail


def _permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def pfaffian_bruteforce(m) -> object:
    """Literal signed sum over perfect matchings; orders up to 12 only."""
    s = _as_skew(m)
    if s.order > BRUTEFORCE_PFAFFIAN_CAP:
        raise ValueError(f"order {s.order} exceeds brute-force cap {BRUTEFORCE_PFAFFIAN_CAP}")
    if s.order == 0:
        return 1
    total = 0
    for matching in perfect_matchings(list(range(s.order))):
        perm = [x for pair in matching for x in pair]
        term = _permutation_sign(perm)
        for i, j in matching:
            term = term * s[i, j]
            if term == 0:
                break
        total = total + term
    return total
