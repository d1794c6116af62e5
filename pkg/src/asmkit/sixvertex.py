"""Six-vertex configurations on the triangular grid T_n and their partition functions.

Every edge of T_n carries an occupation bit.  Row ``i`` of a DSASM is read
along a single path: down column ``i`` from the top vertex ``(0, i)`` to the
diagonal vertex ``(i, i)``, then right along row ``i`` to ``(i, n+1)``.  The
bit on an edge is the partial sum of the row read so far, so top edges carry
0 (pointing up) and right-boundary edges carry 1 (pointing left).  A vertex's
local configuration is the tuple of bits on its edges.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .asm import AsmMatrix, SymmetryClass, check_cap, enumerate_matrices, validate
from .field import PoleError, bar, sigma, sigma_hat


class LocalConfig(enum.Enum):
    TOP_UP = "TopUp"
    RIGHT_LEFT = "RightLeft"
    LEFT_UP = "LeftUp"        # (v_top, h_right) = (0, 1), entry 1
    LEFT_DOWN = "LeftDown"    # (1, 0), entry -1
    LEFT_OUT = "LeftOut"      # (0, 0), entry 0
    LEFT_IN = "LeftIn"        # (1, 1), entry 0
    BULK_PLUS = "BulkPlus"    # (h_left, h_right, v_top, v_bottom) = (0, 1, 0, 1)
    BULK_MINUS = "BulkMinus"  # (1, 0, 1, 0)
    BULK_ZERO_HH = "BulkZeroHH"  # (1, 1, 0, 0)
    BULK_ZERO_VV = "BulkZeroVV"  # (0, 0, 1, 1)
    BULK_ZERO_EE = "BulkZeroEE"  # (0, 0, 0, 0)
    BULK_ZERO_FF = "BulkZeroFF"  # (1, 1, 1, 1)


BULK_BITS = {
    LocalConfig.BULK_PLUS: (0, 1, 0, 1),
    LocalConfig.BULK_MINUS: (1, 0, 1, 0),
    LocalConfig.BULK_ZERO_HH: (1, 1, 0, 0),
    LocalConfig.BULK_ZERO_VV: (0, 0, 1, 1),
    LocalConfig.BULK_ZERO_EE: (0, 0, 0, 0),
    LocalConfig.BULK_ZERO_FF: (1, 1, 1, 1),
}
BULK_FROM_BITS = {bits: kind for kind, bits in BULK_BITS.items()}

LEFT_BITS = {
    LocalConfig.LEFT_UP: (0, 1),
    LocalConfig.LEFT_DOWN: (1, 0),
    LocalConfig.LEFT_OUT: (0, 0),
    LocalConfig.LEFT_IN: (1, 1),
}
LEFT_FROM_BITS = {bits: kind for kind, bits in LEFT_BITS.items()}

ENTRY = {
    LocalConfig.BULK_PLUS: 1,
    LocalConfig.LEFT_UP: 1,
    LocalConfig.BULK_MINUS: -1,
    LocalConfig.LEFT_DOWN: -1,
}

# Bulk zero kinds weighted sigma_hat(q^2 u_i u_j) ("direct") versus
# sigma_hat(q^2 / (u_i u_j)) ("inverse").  HH is pinned by the Z_2 expansion;
# the rest was fixed by agreement with the Pfaffian formula for Z_n.
BULK_SPECTRAL_SIDE = {
    LocalConfig.BULK_ZERO_HH: "inverse",
    LocalConfig.BULK_ZERO_VV: "inverse",
    LocalConfig.BULK_ZERO_EE: "direct",
    LocalConfig.BULK_ZERO_FF: "direct",
}


Vertex = tuple[int, int]


class GridGraph:
    """The grid graph T_n (1-based coordinates, top row 0, right column n+1)."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.top = [(0, j) for j in range(1, n + 1)]
        self.left = [(i, i) for i in range(1, n + 1)]
        self.bulk = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        self.right = [(i, n + 1) for i in range(1, n + 1)]

    def vertices(self) -> list[Vertex]:
        """All vertices in row-major order."""
        return sorted(self.top + self.left + self.bulk + self.right)

    def vertical_edges(self) -> list[tuple[Vertex, Vertex]]:
        return [((k - 1, j), (k, j)) for j in range(1, self.n + 1) for k in range(1, j + 1)]

    def horizontal_edges(self) -> list[tuple[Vertex, Vertex]]:
        return [((i, j), (i, j + 1)) for i in range(1, self.n + 1) for j in range(i, self.n + 1)]

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        return self.vertical_edges() + self.horizontal_edges()


@dataclass(frozen=True)
class SixVertexConfig:
    n: int
    assignment: dict = field(hash=False)

    def __getitem__(self, v: Vertex) -> LocalConfig:
        return self.assignment[v]

    def edge_bits(self) -> dict[tuple[Vertex, Vertex], int]:
        """Edge occupation bits implied by the local configurations.

        Raises ``ValueError`` if two endpoints of an edge disagree.
        """
        bits: dict = {}

        def put(edge, b):
            if bits.setdefault(edge, b) != b:
                raise ValueError(f"inconsistent edge {edge}")

        n = self.n
        for (i, j), kind in self.assignment.items():
            if i == 0:
                if kind is not LocalConfig.TOP_UP:
                    raise ValueError(f"top vertex {(i, j)} must be TopUp")
                put(((0, j), (1, j)), 0)
            elif j == n + 1:
                if kind is not LocalConfig.RIGHT_LEFT:
                    raise ValueError(f"right vertex {(i, j)} must be RightLeft")
                put(((i, n), (i, n + 1)), 1)
            elif i == j:
                if kind not in LEFT_BITS:
                    raise ValueError(f"{kind} is not a left boundary configuration")
                vt, hr = LEFT_BITS[kind]
                put(((i - 1, i), (i, i)), vt)
                put(((i, i), (i, i + 1)), hr)
            else:
                if kind not in BULK_BITS:
                    raise ValueError(f"{kind} is not a bulk configuration")
                hl, hr, vt, vb = BULK_BITS[kind]
                put(((i, j - 1), (i, j)), hl)
                put(((i, j), (i, j + 1)), hr)
                put(((i - 1, j), (i, j)), vt)
                put(((i, j), (i + 1, j)), vb)
        return bits

    def dump(self) -> str:
        """One ``(i,j): kind`` line per vertex, row-major."""
        return "\n".join(f"({i},{j}): {self.assignment[(i, j)].value}" for i, j in sorted(self.assignment))


def dsasm_to_config(a: AsmMatrix) -> SixVertexConfig:
    report = validate(a, SymmetryClass.DSASM)
    if not report:
        raise ValueError(f"not a DSASM: {report.message}")
    n = a.order
    rows = a.entries
    assignment: dict = {}
    for j in range(1, n + 1):
        assignment[(0, j)] = LocalConfig.TOP_UP
    for i in range(1, n + 1):
        assignment[(i, n + 1)] = LocalConfig.RIGHT_LEFT
        row = rows[i - 1]
        prefix = sum(row[: i - 1])
        for j in range(i, n + 1):
            h_left = prefix
            prefix += row[j - 1]
            if j == i:
                assignment[(i, i)] = LEFT_FROM_BITS[(h_left, prefix)]
                continue
            v_top = sum(rows[k][j - 1] for k in range(i - 1))
            v_bottom = v_top + row[j - 1]
            assignment[(i, j)] = BULK_FROM_BITS[(h_left, prefix, v_top, v_bottom)]
    return SixVertexConfig(n, assignment)


def config_to_dsasm(c: SixVertexConfig) -> AsmMatrix:
    graph = GridGraph(c.n)
    if set(c.assignment) != set(graph.vertices()):
        raise ValueError("configuration does not cover the vertices of T_n")
    c.edge_bits()
    n = c.n
    rows = [[0] * n for _ in range(n)]
    for (i, j), kind in c.assignment.items():
        if 1 <= i <= j <= n:
            e = ENTRY.get(kind, 0)
            rows[i - 1][j - 1] = e
            rows[j - 1][i - 1] = e
    a = AsmMatrix(tuple(tuple(r) for r in rows))
    report = validate(a, SymmetryClass.DSASM)
    if not report:
        raise ValueError(f"configuration does not map to a DSASM: {report.message}")
    return a


def enumerate_configs_dfs(n: int) -> Iterator[SixVertexConfig]:
    """All of 6V(n) by a search over edge orientations (independent of the ASM enumerator)."""
    order = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    assignment: dict = {(0, j): LocalConfig.TOP_UP for j in range(1, n + 1)}
    assignment.update({(i, n + 1): LocalConfig.RIGHT_LEFT for i in range(1, n + 1)})
    vbits: dict = {(0, j): 0 for j in range(1, n + 1)}  # bit on the edge below vertex (i, j)
    hbits: dict = {}  # bit on the edge right of vertex (i, j)

    def rec(p):
        if p == len(order):
            if all(hbits[(i, n)] == 1 for i in range(1, n + 1)):
                yield SixVertexConfig(n, dict(assignment))
            return
        i, j = order[p]
        v_top = vbits[(i - 1, j)]
        if i == j:
            for kind, (vt, hr) in LEFT_BITS.items():
                if vt != v_top:
                    continue
                assignment[(i, j)] = kind
                hbits[(i, j)] = hr
                yield from rec(p + 1)
            return
        h_left = hbits[(i, j - 1)]
        for kind, (hl, hr, vt, vb) in BULK_BITS.items():
            if hl != h_left or vt != v_top:
                continue
            assignment[(i, j)] = kind
            hbits[(i, j)] = hr
            vbits[(i, j)] = vb
            yield from rec(p + 1)

    yield from rec(0)


# weights -----------------------------------------------------------------------

PHI_ONE = "one"
PHI_SPECZ = "specz"


@dataclass(frozen=True)
class WeightParams:
    """Vertex-weight parameters; ``phi`` is ``"one"`` or ``"specz"`` (1/(q u + 1/(q u)))."""

    alpha: object
    beta: object
    gamma: object
    delta: object
    q: object
    phi: str = PHI_ONE

    def __post_init__(self):
        if self.phi not in (PHI_ONE, PHI_SPECZ):
            raise ValueError(f"unknown phi form {self.phi!r}")
        if self.q ** 8 == 1:
            raise PoleError("q^8 = 1 makes sigma(q^4) vanish")

    def phi_value(self, u):
        if self.phi == PHI_ONE:
            return Fraction(1)
        d = self.q * u + bar(self.q) * bar(u)
        if d == 0:
            raise PoleError("phi has a pole: q u + 1/(q u) = 0")
        return 1 / d


def specialized_params(s, q) -> WeightParams:
    """alpha = beta = s, gamma = delta = 1/sigma(q), phi(u) = 1/(q u + 1/(q u))."""
    sq = sigma(q)
    if sq == 0:
        raise PoleError("sigma(q) = 0")
    g = 1 / sq
    return WeightParams(s, s, g, g, q, PHI_SPECZ)


def local_weight(kind: LocalConfig, site: Vertex, u: Sequence, p: WeightParams):
    """Weight of ``kind`` at ``site`` (1-based) with spectral parameters ``u``."""
    i, j = site
    if kind in (LocalConfig.TOP_UP, LocalConfig.RIGHT_LEFT):
        return Fraction(1)
    if kind in (LocalConfig.BULK_PLUS, LocalConfig.BULK_MINUS):
        return Fraction(1)
    q = p.q
    qb = bar(q)
    if kind in BULK_SPECTRAL_SIDE:
        x = u[i - 1] * u[j - 1]
        if BULK_SPECTRAL_SIDE[kind] == "inverse":
            x = bar(x)
        return sigma_hat(q * q * x, q)
    ui = u[i - 1]
    ub = bar(ui)
    phi = p.phi_value(ui)
    if kind is LocalConfig.LEFT_UP:
        return (p.alpha * q * ui + p.beta * qb * ub) * phi
    if kind is LocalConfig.LEFT_DOWN:
        return (p.alpha * qb * ub + p.beta * q * ui) * phi
    if kind is LocalConfig.LEFT_IN:
        return p.delta * sigma(q * q * ui * ui) * phi
    if kind is LocalConfig.LEFT_OUT:
        return p.gamma * sigma(q * q * ui * ui) * phi
    raise ValueError(f"unknown configuration {kind}")


class _WeightTable:
    """Memoised vertex weights for one (u, params) point."""

    def __init__(self, u, p):
        self.u, self.p, self.cache = u, p, {}

    def __call__(self, kind, site):
        key = (kind, site)
        w = self.cache.get(key)
        if w is None:
            w = self.cache[key] = local_weight(kind, site, self.u, self.p)
        return w


def config_weight(c: SixVertexConfig, u: Sequence, p: WeightParams, table=None):
    table = table or _WeightTable(u, p)
    w = Fraction(1)
    for site, kind in c.assignment.items():
        if site[0] == 0 or site[1] == c.n + 1:
            continue
        w = w * table(kind, site)
    return w


def _sum_over(matrices, n, u, p):
    if len(u) != n:
        raise ValueError(f"need {n} spectral parameters, got {len(u)}")
    table = _WeightTable(u, p)
    total = Fraction(0)
    for a in matrices:
        total = total + config_weight(dsasm_to_config(a), u, p, table)
    return total


def partition_direct(n: int, u: Sequence, p: WeightParams, cap: int | None = None):
    """Z_n(u) as the weighted sum over 6V(n), reached through the DSASM bijection."""
    check_cap(n, SymmetryClass.DSASM, cap)
    return _sum_over(enumerate_matrices(n, SymmetryClass.DSASM, cap), n, u, p)


def partition_specialized(n: int, u: Sequence, s, q, cap: int | None = None):
    """The specialised partition function Z~_n(u) at the given ``s`` and ``q``."""
    return partition_direct(n, u, specialized_params(s, q), cap)


def osasm_partition(n: int, u: Sequence, q, cap: int | None = None):
    """OSASM partition function: Z~_n at s = 0 (n even) or the s^1 coefficient (n odd).

    Summed directly over OSASM(n); the single diagonal vertex carrying
    LeftUp/LeftDown (odd n) contributes weight 1.
    """
    check_cap(n, SymmetryClass.OSASM, cap)
    return _sum_over(enumerate_matrices(n, SymmetryClass.OSASM, cap), n, u, specialized_params(1, q))


def specialized_by_s_degree(n: int, u: Sequence, q, cap: int | None = None) -> dict[int, object]:
    """Coefficients of Z~_n(u) as a polynomial in s, keyed by degree."""
    check_cap(n, SymmetryClass.DSASM, cap)
    p = specialized_params(1, q)
    table = _WeightTable(u, p)
    out: dict = {}
    for a in enumerate_matrices(n, SymmetryClass.DSASM, cap):
        c = dsasm_to_config(a)
        deg = sum(1 for k in c.assignment.values() if k in (LocalConfig.LEFT_UP, LocalConfig.LEFT_DOWN))
        out[deg] = out.get(deg, 0) + config_weight(c, u, p, table)
    return out
