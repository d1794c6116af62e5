import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from asmkit.field import ZETA, Cyclo12
from asmkit.laurent import LaurentPoly
from asmkit.linalg import SkewMatrix, det, pfaffian, pfaffian_bruteforce

from conftest import rand_rational, rationals


def random_skew(rng, order, cyclo=False):
    def entry(i, j):
        x = rand_rational(rng)
        return x + rand_rational(rng) * ZETA if cyclo else x
    return SkewMatrix.from_function(order, entry)


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def test_det_small_cases():
    assert det([]) == 1
    assert det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    a, b, c, d = Fraction(2, 3), Fraction(-5), Fraction(7, 4), Fraction(1, 9)
    assert det([[a, b], [c, d]]) == a * d - b * c
    assert det([[1, 2], [2, 4]]) == 0


def test_det_multiplicative(rng):
    for _ in range(10):
        m = [[rand_rational(rng) for _ in range(4)] for _ in range(4)]
        n = [[rand_rational(rng) for _ in range(4)] for _ in range(4)]
        assert det(m) * det(n) == det(matmul(m, n))


def test_integer_det_matches_field_det(rng):
    for _ in range(10):
        m = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(5)]
        assert det(m) == det([[Fraction(x) for x in row] for row in m])


def test_det_of_polynomials():
    x = LaurentPoly.var("x", ("x",))
    m = [[x, 1], [x**-1, x]]
    assert det(m) == x**2 - x**-1


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det([[1, 2]])


def test_pfaffian_small_orders():
    assert pfaffian(SkewMatrix(0)) == 1
    assert pfaffian_bruteforce(SkewMatrix(0)) == 1
    a = Fraction(3, 7)
    assert pfaffian(SkewMatrix(2, {(0, 1): a})) == a
    m = {(0, 1): 2, (0, 2): 3, (0, 3): 5, (1, 2): 7, (1, 3): 11, (2, 3): 13}
    want = 2 * 13 - 3 * 11 + 5 * 7
    assert pfaffian(SkewMatrix(4, m)) == want
    assert pfaffian_bruteforce(SkewMatrix(4, m)) == want


def test_pfaffian_needs_pivoting():
    # leading entry zero forces a partner swap
    m = SkewMatrix(4, {(0, 2): 1, (1, 3): 1})
    assert pfaffian(m) == pfaffian_bruteforce(m) == -1


def test_skew_matrix_validation():
    with pytest.raises(ValueError):
        SkewMatrix(3)
    with pytest.raises(ValueError):
        SkewMatrix.from_full([[0, 1], [1, 0]])
    with pytest.raises(IndexError):
        SkewMatrix(2, {(1, 0): 1})
    full = random_skew(random.Random(1), 4).full()
    assert all(full[i][j] == -full[j][i] for i in range(4) for j in range(4))


def test_bruteforce_cap():
    with pytest.raises(ValueError):
        pfaffian_bruteforce(SkewMatrix(14))


@pytest.mark.parametrize("order", [2, 4, 6, 8])
def test_pf_squared_is_det(order, rng):
    for cyclo in (False, True):
        for _ in range(3):
            m = random_skew(rng, order, cyclo)
            assert pfaffian(m) ** 2 == det(m.full())
            assert pfaffian(m) == pfaffian_bruteforce(m)


def test_pf_scaling(rng):
    for order in (2, 4, 6):
        b = random_skew(rng, order)
        k = [rand_rational(rng) for _ in range(order)]
        prod = Fraction(1)
        for x in k:
            prod *= x
        assert pfaffian(b.scaled(k)) == prod * pfaffian(b)
        assert pfaffian_bruteforce(b.scaled(k)) == prod * pfaffian(b)


def test_cyclotomic_entries_stay_exact():
    m = SkewMatrix(2, {(0, 1): Cyclo12(0, 1)})
    assert pfaffian(m) == ZETA


@st.composite
def skew_matrices(draw, max_half=4):
    order = 2 * draw(st.integers(1, max_half))
    entries = draw(st.lists(rationals, min_size=order * (order - 1) // 2, max_size=order * (order - 1) // 2))
    it = iter(entries)
    return SkewMatrix.from_function(order, lambda i, j: next(it))


@given(skew_matrices())
def test_pfaffian_properties(m):
    pf = pfaffian(m)
    assert pf * pf == det(m.full())
    assert pf == pfaffian_bruteforce(m)


@given(skew_matrices(max_half=3), st.lists(rationals, min_size=6, max_size=6))
def test_scaling_property(m, k):
    k = k[: m.order]
    prod = Fraction(1)
    for x in k:
        prod *= x
    assert pfaffian(m.scaled(k)) == prod * pfaffian(m)
