"""Exact scalar arithmetic: rationals and the cyclotomic field Q(zeta_12).

Rationals are plain :class:`fractions.Fraction` values (always in lowest
terms).  :class:`Cyclo12` holds an element of Q(zeta) for a primitive 12th
root of unity ``zeta`` as a coordinate vector over the basis
``1, zeta, zeta^2, zeta^3`` with the reduction ``zeta^4 = zeta^2 - 1``.

With ``q = zeta`` one has ``q^2 + q^-2 = 1``, ``q - q^-1 = i`` and
``q + q^-1 = sqrt(3)``, so every specialised weight lives in this field.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union


class PoleError(ZeroDivisionError):
    """A rational expression was evaluated at one of its poles."""


def _coerce_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


class Cyclo12:
    """Immutable element ``c0 + c1*z + c2*z^2 + c3*z^3`` of Q(zeta_12).

    Integers and fractions are accepted as operands and embedded as
    constants; floats are rejected.
    """

    __slots__ = ("_c",)

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        self._c = (
            _coerce_rational(c0),
            _coerce_rational(c1),
            _coerce_rational(c2),
            _coerce_rational(c3),
        )

    @classmethod
    def _raw(cls, coords) -> Cyclo12:
        obj = object.__new__(cls)
        obj._c = tuple(coords)
        return obj

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    def _lift(self, other):
        if isinstance(other, Cyclo12):
            return other
        try:
            return Cyclo12._raw((_coerce_rational(other), Fraction(0), Fraction(0), Fraction(0)))
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclo12._raw(a + b for a, b in zip(self._c, o._c))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclo12._raw(a - b for a, b in zip(self._c, o._c))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Cyclo12._raw(-a for a in self._c)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Cyclo12):
            return cyclo_mul(self, other)
        try:
            k = _coerce_rational(other)
        except TypeError:
            return NotImplemented
        return Cyclo12._raw(a * k for a in self._c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not isinstance(other, Cyclo12):
            if o._c[0] == 0:
                raise ZeroDivisionError("division by zero in Q(zeta_12)")
            return Cyclo12._raw(a / o._c[0] for a in self._c)
        return cyclo_mul(self, cyclo_inv(o))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return cyclo_mul(o, cyclo_inv(self))

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else cyclo_inv(self)
        k = abs(k)
        result = ONE
        while k:
            if k & 1:
                result = cyclo_mul(result, base)
            k >>= 1
            if k:
                base = cyclo_mul(base, base)
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._c[1] == self._c[2] == self._c[3] == 0:
            return hash(self._c[0])
        return hash(self._c)

    def __bool__(self):
        return any(self._c)

    def is_rational(self) -> bool:
        return self._c[1] == self._c[2] == self._c[3] == 0

    def conjugate(self, k: int) -> Cyclo12:
        """Image under the Galois automorphism ``zeta -> zeta^k`` (k coprime to 12)."""
        if k % 12 not in (1, 5, 7, 11):
            raise ValueError("k must be a unit modulo 12")
        zk = ZETA ** (k % 12)
        result = Cyclo12._raw((self._c[0], Fraction(0), Fraction(0), Fraction(0)))
        power = ONE
        for c in self._c[1:]:
            power = cyclo_mul(power, zk)
            if c:
                result = result + power * c
        return result

    def norm(self) -> Fraction:
        n = self
        for k in (5, 7, 11):
            n = cyclo_mul(n, self.conjugate(k))
        assert n.is_rational()
        return n._c[0]

    def __complex__(self):
        import cmath

        z = cmath.exp(1j * cmath.pi / 6)
        return sum(float(c) * z**k for k, c in enumerate(self._c))

    def __repr__(self):
        return f"Cyclo12({render(self)})"

    def __str__(self):
        return render(self)


def cyclo_mul(a: Cyclo12, b: Cyclo12) -> Cyclo12:
    """Product in Q(zeta_12), reduced with ``zeta^4 = zeta^2 - 1``."""
    a0, a1, a2, a3 = a._c
    b0, b1, b2, b3 = b._c
    c0 = a0 * b0
    c1 = a0 * b1 + a1 * b0
    c2 = a0 * b2 + a1 * b1 + a2 * b0
    c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
    c4 = a1 * b3 + a2 * b2 + a3 * b1
    c5 = a2 * b3 + a3 * b2
    c6 = a3 * b3
    # zeta^6 = -1, zeta^5 = zeta^3 - zeta, zeta^4 = zeta^2 - 1
    return Cyclo12._raw((c0 - c6 - c4, c1 - c5, c2 + c4, c3 + c5))


def cyclo_inv(a: Cyclo12) -> Cyclo12:
    """Multiplicative inverse via the product of the non-trivial conjugates."""
    if not a:
        raise ZeroDivisionError("inverse of zero in Q(zeta_12)")
    if a.is_rational():
        return Cyclo12._raw((1 / a._c[0], Fraction(0), Fraction(0), Fraction(0)))
    co = a.conjugate(5)
    co = cyclo_mul(co, a.conjugate(7))
    co = cyclo_mul(co, a.conjugate(11))
    n = cyclo_mul(a, co)
    assert n.is_rational()
    return Cyclo12._raw(c / n._c[0] for c in co._c)


ONE = Cyclo12(1)
ZETA = Cyclo12(0, 1)
IOTA = ZETA**3  # zeta^3 = i
SQRT3 = ZETA + cyclo_inv(ZETA)  # positive real embedding

Scalar = Union[Fraction, Cyclo12]


def field_name(x) -> str:
    return "cyclo12" if isinstance(x, Cyclo12) else "rational"


def sigma(x):
    """``x - 1/x``."""
    if x == 0:
        raise PoleError("sigma(0)")
    return x - 1 / _exact(x)


def sigma_hat(x, q):
    """``sigma(x) / sigma(q^4)``."""
    d = sigma(_exact(q) ** 4)
    if d == 0:
        raise PoleError("sigma(q^4) vanishes (q^8 = 1)")
    return sigma(x) / d


def bar(x):
    """``1/x``."""
    if x == 0:
        raise PoleError("1/0")
    return 1 / _exact(x)


def _exact(x):
    if isinstance(x, (Cyclo12, Fraction)):
        return x
    return _coerce_rational(x)


def render(x) -> str:
    """Canonical text form: ``p/q`` for rationals, ``c0 + c1*z + ...`` otherwise."""
    if not isinstance(x, Cyclo12):
        return str(_coerce_rational(x))
    parts = []
    for k, c in enumerate(x.coords):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts) if parts else "0"
