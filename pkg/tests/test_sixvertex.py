import random
from fractions import Fraction

import pytest

from asmkit import sixvertex as sv
from asmkit.asm import AsmMatrix, SymmetryClass, count, enumerate_matrices, statistics
from asmkit.field import ZETA, PoleError, bar, sigma, sigma_hat
from asmkit.sixvertex import (
    GridGraph, LocalConfig as L, SixVertexConfig, WeightParams, config_to_dsasm, dsasm_to_config,
    enumerate_configs_dfs, local_weight, osasm_partition, partition_direct, partition_specialized,
    specialized_by_s_degree,
)

from conftest import rand_rational


def mat(*rows):
    return AsmMatrix(tuple(tuple(r) for r in rows))


def general_point(rng, n, phi="one"):
    u = [rand_rational(rng) for _ in range(n)]
    q = rand_rational(rng)
    while q in (1, -1):
        q = rand_rational(rng)
    return u, WeightParams(*(rand_rational(rng) for _ in range(4)), q, phi)


def test_grid_sizes():
    for n in range(1, 7):
        g = GridGraph(n)
        assert len(g.bulk) == n * (n - 1) // 2
        assert len(g.top) == len(g.left) == len(g.right) == n
        assert len(g.edges()) == n * (n + 1)
        assert g.vertices() == sorted(g.vertices())


def test_order_one_config():
    c = dsasm_to_config(mat((1,)))
    assert c.assignment == {(0, 1): L.TOP_UP, (1, 1): L.LEFT_UP, (1, 2): L.RIGHT_LEFT}
    assert [config_to_dsasm(x) for x in enumerate_configs_dfs(1)] == [mat((1,))]


def test_identity_order_two():
    c = dsasm_to_config(mat((1, 0), (0, 1)))
    assert c[(1, 1)] is L.LEFT_UP and c[(2, 2)] is L.LEFT_UP
    assert c[(1, 2)] is L.BULK_ZERO_HH


def test_antidiagonal_from_config():
    c = SixVertexConfig(2, {
        (0, 1): L.TOP_UP, (0, 2): L.TOP_UP, (1, 3): L.RIGHT_LEFT, (2, 3): L.RIGHT_LEFT,
        (1, 1): L.LEFT_OUT, (1, 2): L.BULK_PLUS, (2, 2): L.LEFT_IN,
    })
    assert config_to_dsasm(c) == mat((0, 1), (1, 0))


def test_inconsistent_config_rejected():
    c = SixVertexConfig(2, {
        (0, 1): L.TOP_UP, (0, 2): L.TOP_UP, (1, 3): L.RIGHT_LEFT, (2, 3): L.RIGHT_LEFT,
        (1, 1): L.LEFT_UP, (1, 2): L.BULK_PLUS, (2, 2): L.LEFT_IN,
    })
    with pytest.raises(ValueError):
        config_to_dsasm(c)


def test_non_dsasm_rejected():
    with pytest.raises(ValueError):
        dsasm_to_config(mat((0, 1, 0), (0, 0, 1), (1, 0, 0)))


@pytest.mark.parametrize("n", range(1, 7))
def test_bijection(n):
    mats = list(enumerate_matrices(n, SymmetryClass.DSASM))
    for a in mats:
        assert config_to_dsasm(dsasm_to_config(a)) == a
    dfs = [config_to_dsasm(c) for c in enumerate_configs_dfs(n)]
    assert sorted(x.entries for x in dfs) == sorted(x.entries for x in mats)


def test_six_vertex_configuration_count_order_three():
    assert len(list(enumerate_configs_dfs(3))) == 5


def test_local_counts_match_statistics():
    for n in range(1, 6):
        for a in enumerate_matrices(n, SymmetryClass.DSASM):
            kinds = list(dsasm_to_config(a).assignment.values())
            st = statistics(a)
            assert sum(k in (L.BULK_PLUS, L.BULK_MINUS) for k in kinds) == st.R
            assert sum(k in (L.LEFT_UP, L.LEFT_DOWN) for k in kinds) == st.S


def test_dump_format():
    text = dsasm_to_config(mat((0, 1), (1, 0))).dump()
    assert text.splitlines() == [
        "(0,1): TopUp", "(0,2): TopUp", "(1,1): LeftOut", "(1,2): BulkPlus",
        "(1,3): RightLeft", "(2,2): LeftIn", "(2,3): RightLeft",
    ]


def test_boundary_and_left_weights(rng):
    u, p = general_point(rng, 2)
    q, qb = p.q, bar(p.q)
    assert local_weight(L.TOP_UP, (0, 1), u, p) == 1
    assert local_weight(L.RIGHT_LEFT, (1, 3), u, p) == 1
    assert local_weight(L.LEFT_UP, (1, 1), u, p) == p.alpha * q * u[0] + p.beta * qb * bar(u[0])
    assert local_weight(L.LEFT_DOWN, (2, 2), u, p) == p.alpha * qb * bar(u[1]) + p.beta * q * u[1]
    assert local_weight(L.BULK_ZERO_HH, (1, 2), u, p) == sigma_hat(q * q * bar(u[0] * u[1]), q)


def test_z1_and_z2(rng):
    for phi in ("one", "specz"):
        u, p = general_point(rng, 2, phi)
        q, qb = p.q, bar(p.q)
        f = [p.phi_value(x) for x in u]
        a1 = (p.alpha * q * u[0] + p.beta * qb * bar(u[0])) * f[0]
        a2 = (p.alpha * q * u[1] + p.beta * qb * bar(u[1])) * f[1]
        assert partition_direct(1, u[:1], p) == a1
        want = a1 * a2 * sigma_hat(q * q * bar(u[0]) * bar(u[1]), q) + (
            p.gamma * sigma(q * q * u[0] ** 2) * p.delta * sigma(q * q * u[1] ** 2) * f[0] * f[1]
        )
        assert partition_direct(2, u, p) == want


def test_specialized_small_values():
    for s in (Fraction(2, 3), 5):
        assert partition_specialized(1, [Fraction(7, 3)], s, ZETA) == s
        assert partition_specialized(2, [1, 1], s, ZETA) == s * s + 1
    assert partition_specialized(3, [1, 1, 1], 1, ZETA) == 5


def test_specialized_at_ones_counts_dsasms():
    for n in range(1, 7):
        assert partition_specialized(n, [1] * n, 1, ZETA) == count(n, SymmetryClass.DSASM)


def test_osasm_partition_counts():
    assert [osasm_partition(n, [1] * n, ZETA) for n in range(1, 7)] == [1, 1, 4, 3, 32, 26]


def test_osasm_partition_is_s_slice(rng):
    for n in range(1, 6):
        u = [rand_rational(rng) for _ in range(n)]
        by_degree = specialized_by_s_degree(n, u, ZETA)
        assert osasm_partition(n, u, ZETA) == by_degree.get(n % 2, 0)
        s = rand_rational(rng)
        total = sum(c * s**d for d, c in by_degree.items())
        assert total == partition_specialized(n, u, s, ZETA)


def test_weight_poles():
    with pytest.raises(PoleError):
        WeightParams(1, 1, 1, 1, 1)
    p = sv.specialized_params(1, ZETA)
    # q u + 1/(q u) = 0 at u = i / q
    with pytest.raises(PoleError):
        p.phi_value(ZETA**3 / ZETA)
    with pytest.raises(ValueError):
        WeightParams(1, 1, 1, 1, 2, phi="other")


def test_partition_cap():
    with pytest.raises(ValueError):
        partition_direct(9, [2] * 9, WeightParams(1, 1, 1, 1, 2))
    with pytest.raises(ValueError):
        partition_direct(2, [2], WeightParams(1, 1, 1, 1, 2))
