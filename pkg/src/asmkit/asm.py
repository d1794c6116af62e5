"""Alternating sign matrices: validation, enumeration, statistics, generating functions.

A matrix is an ASM exactly when every row and column has all prefix sums in
{0, 1} and total 1.  The enumerators below walk cells in row-major order and
track those prefix sums, so no partial assignment that violates them is ever
extended.  Symmetric classes only visit the upper triangle (diagonal
included) and mirror each entry.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .laurent import LaurentPoly

DSASM_VARS = ("r", "s", "t")
OSASM_VARS = ("r", "t")


class SymmetryClass(enum.Enum):
    ASM = "asm"
    DSASM = "dsasm"
    OSASM = "osasm"


DEFAULT_CAPS = {SymmetryClass.ASM: 6, SymmetryClass.DSASM: 8, SymmetryClass.OSASM: 8}


class CapExceededError(ValueError):
    pass


def order_cap(cls: SymmetryClass) -> int:
    """Default cap, raised (never lowered) by the ``ASMKIT_MAX_ORDER`` environment variable."""
    cap = DEFAULT_CAPS[cls]
    env = os.environ.get("ASMKIT_MAX_ORDER")
    if env:
        cap = max(cap, int(env))
    return cap


def check_cap(n: int, cls: SymmetryClass, cap: int | None = None) -> None:
    limit = order_cap(cls) if cap is None else cap
    if n > limit:
        raise CapExceededError(f"order {n} exceeds the {cls.value} cap {limit}")


@dataclass(frozen=True)
class AsmMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> AsmMatrix:
        return AsmMatrix(tuple(zip(*self.entries)))

    def is_symmetric(self) -> bool:
        return self.entries == self.transpose().entries

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)

    @classmethod
    def from_text(cls, text: str) -> AsmMatrix:
        return cls(tuple(tuple(int(x) for x in line.split()) for line in text.strip().splitlines()))


class Statistics(NamedTuple):
    R: int
    S: int
    T: int


class ValidationReport(NamedTuple):
    ok: bool
    rule: str | None = None
    position: tuple[int, int] | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def _fail(rule, pos, msg) -> ValidationReport:
    return ValidationReport(False, rule, pos, msg)


def validate(m, cls: SymmetryClass = SymmetryClass.ASM) -> ValidationReport:
    """Check ``m`` against the rules of ``cls``; report the first violation.

    Rules are checked in this order: entry values, rows (alternation then
    sum), columns, symmetry, diagonal count.  Positions are 0-based.
    """
    rows = m.entries if isinstance(m, AsmMatrix) else [list(r) for r in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        return _fail("square", None, "matrix is not square")
    for i in range(n):
        for j in range(n):
            if rows[i][j] not in (-1, 0, 1):
                return _fail("entries", (i, j), f"entry {rows[i][j]} not in {{-1, 0, 1}}")
    for axis, get in (("row", lambda a, b: rows[a][b]), ("column", lambda a, b: rows[b][a])):
        for a in range(n):
            prefix = 0
            for b in range(n):
                prefix += get(a, b)
                if prefix not in (0, 1):
                    pos = (a, b) if axis == "row" else (b, a)
                    return _fail(f"{axis}-alternation", pos, f"{axis} {a} partial sum {prefix} outside {{0, 1}}")
            if prefix != 1:
                pos = (a, n - 1) if axis == "row" else (n - 1, a)
                return _fail(f"{axis}-sum", pos, f"{axis} {a} sums to {prefix}, not 1")
    if cls is SymmetryClass.ASM:
        return ValidationReport(True)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                return _fail("symmetry", (i, j), f"entries ({i},{j}) and ({j},{i}) differ")
    if cls is SymmetryClass.OSASM:
        s = sum(abs(rows[i][i]) for i in range(n))
        want = n % 2
        if s != want:
            pos = next(((i, i) for i in range(n) if rows[i][i]), None)
            return _fail("diagonal-count", pos, f"S(A)={s} but an order-{n} OSASM needs {want}")
    return ValidationReport(True)


def _search(n: int, symmetric: bool, diagonal_limit: int | None, diagonal_parity: bool) -> Iterator[AsmMatrix]:
    """Iterative depth-first search over cells; emits in lexicographic order (-1 < 0 < 1)."""
    if symmetric:
        cells = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        cells = [(i, j) for i in range(n) for j in range(n)]
    total = len(cells)
    a = [[0] * n for _ in range(n)]
    col = [0] * n
    h_before = [0] * total
    h_after = [0] * total
    diag_after = [0] * total
    tried = [-1] * total  # index into (-1, 0, 1) of the value currently placed
    values = (-1, 0, 1)
    p = 0
    while p >= 0:
        if p == total:
            yield AsmMatrix(tuple(tuple(row) for row in a))
            p -= 1
            continue
        i, j = cells[p]
        row_start = j == (i if symmetric else 0)
        t = tried[p]
        if t >= 0:
            e = values[t]
            col[j] -= e
            a[i][j] = 0
            if symmetric:
                a[j][i] = 0
        else:
            h_before[p] = (col[i] if symmetric else 0) if row_start else h_after[p - 1]
        diag_prev = diag_after[p - 1] if p else 0
        hb = h_before[p]
        vb = col[j]
        row_end = j == n - 1
        placed = False
        for t2 in range(t + 1, 3):
            e = values[t2]
            nh = hb + e
            if nh < 0 or nh > 1 or vb + e < 0 or vb + e > 1:
                continue
            if row_end and nh != 1:
                continue
            d = diag_prev
            if i == j and e:
                if diagonal_parity:
                    continue
                d += 1
                if diagonal_limit is not None and d > diagonal_limit:
                    continue
            col[j] += e
            a[i][j] = e
            if symmetric:
                a[j][i] = e
            tried[p] = t2
            h_after[p] = nh
            diag_after[p] = d
            placed = True
            break
        if placed:
            p += 1
        else:
            tried[p] = -1
            p -= 1


def enumerate_matrices(n: int, cls: SymmetryClass = SymmetryClass.DSASM, cap: int | None = None) -> Iterator[AsmMatrix]:
    """Stream every matrix of ``cls`` of order ``n`` exactly once, in row-major lexicographic order."""
    if n < 1:
        raise ValueError("order must be positive")
    check_cap(n, cls, cap)
    if cls is SymmetryClass.ASM:
        return _search(n, symmetric=False, diagonal_limit=None, diagonal_parity=False)
    if cls is SymmetryClass.DSASM:
        return _search(n, symmetric=True, diagonal_limit=None, diagonal_parity=False)
    if n % 2 == 0:
        return _search(n, symmetric=True, diagonal_limit=None, diagonal_parity=True)
    # an odd-order DSASM always has at least one nonzero diagonal entry
    return _search(n, symmetric=True, diagonal_limit=1, diagonal_parity=False)


def count(n: int, cls: SymmetryClass, cap: int | None = None) -> int:
    return sum(1 for _ in enumerate_matrices(n, cls, cap))


def statistics(a: AsmMatrix) -> Statistics:
    n = a.order
    r = sum(abs(a[i, j]) for i in range(n) for j in range(i + 1, n))
    s = sum(abs(a[i, i]) for i in range(n))
    t = a.entries[0].index(1) + 1
    return Statistics(r, s, t)


def genfunc_dsasm(n: int, cap: int | None = None) -> LaurentPoly:
    """Sum of ``r^R s^S t^T`` over DSASM(n)."""
    terms: dict = {}
    for a in enumerate_matrices(n, SymmetryClass.DSASM, cap):
        key = tuple(statistics(a))
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(DSASM_VARS, terms)


def genfunc_osasm(n: int, cap: int | None = None) -> LaurentPoly:
    """Sum of ``r^R t^T`` over OSASM(n)."""
    terms: dict = {}
    for a in enumerate_matrices(n, SymmetryClass.OSASM, cap):
        st = statistics(a)
        key = (st.R, st.T)
        terms[key] = terms.get(key, 0) + 1
    return LaurentPoly(OSASM_VARS, terms)


def osasm_slice(x: LaurentPoly, n: int) -> LaurentPoly:
    """The OSASM part of a DSASM generating function: ``s^0`` (even n) or ``s^1`` (odd n) coefficient."""
    return x.coefficient("s", n % 2)


def as_matrix(rows: Sequence[Sequence[int]]) -> AsmMatrix:
    return rows if isinstance(rows, AsmMatrix) else AsmMatrix(tuple(tuple(r) for r in rows))
