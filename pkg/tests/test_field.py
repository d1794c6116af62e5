from fractions import Fraction

import pytest
from hypothesis import given

from asmkit.field import (
    IOTA, ONE, SQRT3, ZETA, Cyclo12, PoleError, bar, cyclo_inv, cyclo_mul, render, sigma, sigma_hat,
)

from conftest import cyclos, nonzero_cyclos, rationals

Z = ZETA


def test_zeta_times_zeta_cubed_reduces():
    assert cyclo_mul(Z, Z**3) == Cyclo12(-1, 0, 1, 0)


def test_one_is_identity():
    a = Cyclo12(3, Fraction(-1, 2), 0, 7)
    assert cyclo_mul(ONE, a) == a


def test_sqrt3_squared():
    s = Z + cyclo_inv(Z)
    assert cyclo_mul(s, s) == 3
    assert SQRT3 * SQRT3 == 3
    assert abs(complex(SQRT3) - 3**0.5) < 1e-12


def test_inverse_of_zeta():
    # z^-1 = z^11 = z - z^3 in this basis
    inv = cyclo_inv(Z)
    assert inv == Cyclo12(0, 1, 0, -1)
    assert Z * inv == 1
    assert abs(complex(inv) - 1 / complex(Z)) < 1e-12


def test_inverse_of_one_and_iota():
    assert cyclo_inv(ONE) == 1
    assert cyclo_inv(Z**3) == -(Z**3)


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        cyclo_inv(Cyclo12())


def test_defining_constants():
    qb = cyclo_inv(Z)
    assert Z**2 + qb**2 == 1
    assert Z - qb == Z**3 == IOTA
    assert IOTA * IOTA == -1
    assert Z**12 == 1 and Z**6 == -1


def test_sigma_examples():
    assert sigma(1) == 0
    assert sigma(2) == Fraction(3, 2)
    assert sigma(Z**4) == IOTA * SQRT3
    assert abs(complex(sigma(Z**4)) - 1j * 3**0.5) < 1e-12


def test_sigma_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        sigma(0)


def test_sigma_hat_examples():
    assert sigma_hat(Z**4, Z) == 1
    assert sigma_hat(1, Z) == 0
    assert sigma_hat(Z**2, Z) == 1


def test_sigma_hat_needs_q8_not_one():
    with pytest.raises(ZeroDivisionError):
        sigma_hat(2, 1)
    with pytest.raises(ZeroDivisionError):
        sigma_hat(2, Z**3)  # q = i has q^8 = 1


def test_bar():
    assert bar(Fraction(2, 3)) == Fraction(3, 2)
    assert bar(Z) * Z == 1


def test_floats_rejected():
    with pytest.raises(TypeError):
        Z + 0.5
    with pytest.raises(TypeError):
        Cyclo12(0.5)


def test_render():
    assert render(Fraction(3, 4)) == "3/4"
    assert render(Fraction(-6, 3)) == "-2"
    assert render(Cyclo12(-1, 0, 1, 0)) == "-1 + z^2"
    assert render(cyclo_inv(Z)) == "z - z^3"
    assert render(Cyclo12()) == "0"
    assert render(Cyclo12(Fraction(1, 2))) == "1/2"


def test_conjugates_multiply_to_norm():
    a = Cyclo12(1, 2, -3, Fraction(1, 2))
    prod = ONE
    for k in (1, 5, 7, 11):
        prod = prod * a.conjugate(k)
    assert prod == a.norm() and prod.is_rational()


@given(cyclos, cyclos, cyclos)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(nonzero_cyclos)
def test_inverse_axiom(a):
    assert a * cyclo_inv(a) == 1
    assert a / a == 1


@given(cyclos, cyclos)
def test_numeric_embedding_is_a_homomorphism(a, b):
    assert abs(complex(a * b) - complex(a) * complex(b)) < 1e-6 * (1 + abs(complex(a)) * abs(complex(b)))


@given(rationals, rationals)
def test_rationals_embed(x, y):
    assert Cyclo12(x) * y == x * y
    assert Cyclo12(x) + y == x + y
    for c in (Cyclo12(x) * y).coords:
        assert c.denominator > 0


def test_pole_error_is_zero_division():
    assert issubclass(PoleError, ZeroDivisionError)
