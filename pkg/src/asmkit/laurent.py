"""Sparse multivariate Laurent polynomials with exact coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .field import Cyclo12, PoleError, render


class InexactDivisionError(ArithmeticError):
    pass


def power(x, k: int):
    """``x**k`` that stays exact for negative ``k`` and integer ``x``."""
    if k >= 0:
        return x**k
    if x == 0:
        raise PoleError("zero raised to a negative power")
    if isinstance(x, int):
        if x in (1, -1):
            return x ** (-k)
        return Fraction(1, x ** (-k))
    return 1 / (x ** (-k))


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Cyclo12)) and not isinstance(x, bool)


class LaurentPoly:
    """A finite sum of ``coef * x1^e1 * ... * xk^ek`` with integer ``e_i``.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        k = len(self.variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != k:
                raise ValueError(f"exponent vector {exps} does not match variables {self.variables}")
            if c != 0:
                clean[exps] = c
        self.terms = clean

    # construction -----------------------------------------------------------

    @classmethod
    def constant(cls, c, variables: Iterable[str]) -> LaurentPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Iterable[str], exps, coef=1) -> LaurentPoly:
        return cls(variables, {tuple(exps): coef})

    @classmethod
    def var(cls, name: str, variables: Iterable[str]) -> LaurentPoly:
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"unknown variable {name!r}")
        return cls(variables, {exps: 1})

    def _same_ring(self, other: LaurentPoly) -> None:
        if other.variables != self.variables:
            raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")

    def _wrap(self, other):
        if isinstance(other, LaurentPoly):
            self._same_ring(other)
            return other
        if _is_scalar(other):
            return LaurentPoly.constant(other, self.variables)
        return None

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if _is_scalar(other):
            if other == 0:
                return LaurentPoly(self.variables)
            return LaurentPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return lp_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers are only defined for monomials")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(k * x for x in e): power(c, k)})
        result = LaurentPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self.terms == other.terms
        if _is_scalar(other):
            return self.terms == LaurentPoly.constant(other, self.variables).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # inspection -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        """Terms in canonical order: exponent vectors lexicographically descending."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def coefficient(self, name: str, k: int) -> LaurentPoly:
        """Coefficient of ``name^k``, as a polynomial in the remaining variables."""
        idx = self.variables.index(name)
        rest = self.variables[:idx] + self.variables[idx + 1:]
        terms = {}
        for e, c in self.terms.items():
            if e[idx] == k:
                terms[e[:idx] + e[idx + 1:]] = c
        return LaurentPoly(rest, terms)

    def invert_variable(self, name: str) -> LaurentPoly:
        """Substitute ``name -> 1/name``."""
        idx = self.variables.index(name)
        return LaurentPoly(
            self.variables,
            {e[:idx] + (-e[idx],) + e[idx + 1:]: c for e, c in self.terms.items()},
        )

    def degree_range(self, name: str) -> tuple[int, int]:
        idx = self.variables.index(name)
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        degs = [e[idx] for e in self.terms]
        return min(degs), max(degs)

    def evaluate(self, point: Mapping[str, object]):
        return lp_eval(self, point)

    def __call__(self, **point):
        return lp_eval(self, point)

    def __str__(self):
        return lp_format(self)

    def __repr__(self):
        return f"LaurentPoly({self.variables}, {lp_format(self)!r})"


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._same_ring(q)
    out: dict = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return LaurentPoly(p.variables, out)


def lp_eval(p: LaurentPoly, point: Mapping[str, object]):
    """Evaluate exactly.  Every variable of ``p`` must be assigned."""
    values = []
    for v in p.variables:
        if v not in point:
            raise KeyError(f"no value for variable {v!r}")
        values.append(point[v])
    powers: list[dict[int, object]] = [{} for _ in values]
    total = 0
    for e, c in p.terms.items():
        term = c
        for i, k in enumerate(e):
            if k == 0:
                continue
            cache = powers[i]
            if k not in cache:
                x = values[i]
                if k < 0 and x == 0:
                    raise PoleError(f"{p.variables[i]} = 0 in a negative power")
                cache[k] = power(x, k)
            term = term * cache[k]
        total = total + term
    return total


# univariate division --------------------------------------------------------

def _dense(p: LaurentPoly) -> tuple[int, list]:
    """(lowest exponent, coefficient list ascending) of a nonzero univariate poly."""
    lo, hi = p.degree_range(p.variables[0])
    coeffs = [0] * (hi - lo + 1)
    for (e,), c in p.terms.items():
        coeffs[e - lo] = c
    return lo, coeffs


def _from_dense(variables, lo: int, coeffs: list) -> LaurentPoly:
    return LaurentPoly(variables, {(lo + i,): c for i, c in enumerate(coeffs) if c != 0})


def _divide(c, d):
    if isinstance(c, int) and isinstance(d, int):
        q, r = divmod(c, d)
        return q if r == 0 else Fraction(c, d)
    return c / d


def lp_exact_div_univariate(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``num / den`` in the univariate Laurent ring.

    Raises :class:`InexactDivisionError` when ``den`` does not divide ``num``.
    """
    if len(num.variables) != 1:
        raise ValueError("lp_exact_div_univariate needs univariate polynomials")
    num._same_ring(den)
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return num
    nlo, n = _dense(num)
    dlo, d = _dense(den)
    if len(d) > len(n):
        raise InexactDivisionError("divisor has larger degree span than dividend")
    qlen = len(n) - len(d) + 1
    lead = d[-1]
    rem = list(n)
    quot = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        c = rem[k + len(d) - 1]
        if c == 0:
            continue
        f = _divide(c, lead)
        quot[k] = f
        for i, dc in enumerate(d):
            if dc != 0:
                rem[k + i] = rem[k + i] - f * dc
    if any(r != 0 for r in rem):
        raise InexactDivisionError("remainder is nonzero")
    return _from_dense(num.variables, nlo - dlo, quot)


# text format ----------------------------------------------------------------

def _monomial_text(variables, exps) -> str:
    parts = []
    for v, e in zip(variables, exps):
        if e == 0:
            continue
        parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def lp_format(p: LaurentPoly) -> str:
    """Canonical text: terms by descending exponent vector, ``coef*x^e*y``."""
    if p.is_zero():
        return "0"
    out = []
    for exps, c in p.sorted_terms():
        mono = _monomial_text(p.variables, exps)
        if isinstance(c, Cyclo12) and not c.is_rational():
            sign, body = "+", f"({render(c)})"
            if mono:
                body += "*" + mono
        else:
            c = c.coords[0] if isinstance(c, Cyclo12) else c
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            if not mono:
                body = render(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{render(mag)}*{mono}"
        if not out:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def parse_monomials(text: str, variables: Iterable[str]) -> LaurentPoly:
    """Parse ``"s^2*t + r*t^2 - 3/2*t^-1"`` style text (terms separated by " + " / " - ").

    Meant for writing fixtures compactly; accepts what :func:`lp_format`
    prints for rational coefficients.
    """
    variables = tuple(variables)
    text = text.strip()
    if text.startswith("-"):
        text = "0 " + text[0] + " " + text[1:]
    pieces = re.split(r"\s([+-])\s", text)
    signs = [1] + [1 if op == "+" else -1 for op in pieces[1::2]]
    terms: dict = {}
    for sign, chunk in zip(signs, pieces[0::2]):
        coef = Fraction(sign)
        exps = [0] * len(variables)
        for factor in chunk.strip().split("*"):
            if re.fullmatch(r"-?\d+(/\d+)?", factor):
                coef *= Fraction(factor)
                continue
            name, _, p = factor.partition("^")
            exps[variables.index(name)] += int(p) if p else 1
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coef
    return LaurentPoly(variables, terms)
