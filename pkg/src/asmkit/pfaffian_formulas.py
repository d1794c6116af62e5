"""Pfaffian evaluation of the DSASM partition function and related closed forms."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .asm import genfunc_dsasm
from .field import IOTA, ZETA, PoleError, bar, sigma, sigma_hat
from .laurent import LaurentPoly
from .linalg import SkewMatrix, pfaffian
from .sixvertex import WeightParams, partition_direct


def _pair_factors(ui, uj, q):
    """(sigma_hat(u_i/u_j), sigma_hat(q^2 u_i u_j), sigma_hat(q^2/(u_i u_j)))."""
    d = sigma_hat(ui * bar(uj), q)
    a = sigma_hat(q * q * ui * uj, q)
    b = sigma_hat(q * q * bar(ui * uj), q)
    return d, a, b


def check_partition_point(u: Sequence, q) -> None:
    """Raise :class:`PoleError` unless every Pfaffian-entry denominator is nonzero."""
    for i, j in combinations(range(len(u)), 2):
        if u[i] == u[j] or u[i] == -u[j]:
            raise PoleError(f"u_{i + 1} = +-u_{j + 1}")
        _, a, b = _pair_factors(u[i], u[j], q)
        if a == 0 or b == 0:
            raise PoleError(f"sigma_hat(q^2 u u) vanishes for pair ({i + 1}, {j + 1})")


def partition_pfaffian(n: int, u: Sequence, p: WeightParams):
    """Z_n(u) as a prefactor times a Pfaffian of one- and two-site partition functions.

    For odd ``n`` the Pfaffian gets an extra index 0 whose row holds Z_1(u_j).
    """
    if len(u) != n:
        raise ValueError(f"need {n} spectral parameters, got {len(u)}")
    q = p.q
    check_partition_point(u, q)
    prefactor = 1
    entries: dict = {}
    for i, j in combinations(range(n), 2):
        d, a, b = _pair_factors(u[i], u[j], q)
        prefactor = prefactor * a * b / d
        z2 = partition_direct(2, [u[i], u[j]], p)
        entries[(i, j)] = d * z2 / (a * b)
    if n % 2 == 0:
        return prefactor * pfaffian(SkewMatrix(n, entries))
    shifted = {(i + 1, j + 1): v for (i, j), v in entries.items()}
    for j in range(n):
        shifted[(0, j + 1)] = partition_direct(1, [u[j]], p)
    return prefactor * pfaffian(SkewMatrix(n + 1, shifted))


def zx_rhs(n: int, z, s, q, x_n: LaurentPoly | None = None, x_prev: LaurentPoly | None = None):
    """Closed form for Z~_n(z, 1, ..., 1) in terms of the DSASM generating functions.

    ``x_n`` and ``x_prev`` default to the enumerated X_n and X_{n-1}.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    x_n = genfunc_dsasm(n) if x_n is None else x_n
    x_prev = genfunc_dsasm(n - 1) if x_prev is None else x_prev
    qb = bar(q)
    sz = sigma(q * q * z)
    szb = sigma(q * q * bar(z))
    if sz == 0 or szb == 0:
        raise PoleError("sigma(q^2 z) or sigma(q^2/z) vanishes")
    s2, s4 = sigma(q * q), sigma(q**4)
    if s4 == 0:
        raise PoleError("sigma(q^4) vanishes")
    prefactor = s2 ** ((n - 1) * (n - 2) // 2) * szb ** (n - 1) / (s4 ** (n * (n - 1) // 2) * sz)
    r = q * q + qb * qb
    first = (q + qb) * sigma(q * z) * szb / sz * x_n.evaluate({"r": r, "s": s, "t": sz / szb})
    second = s * sigma(z) * x_prev.evaluate({"r": r, "s": s, "t": 1})
    return prefactor * (first - second)


def psi_arguments(u: Sequence) -> list:
    """(u_1..u_n, 1/u_1..1/u_n, 1, i) in Q(zeta_12)."""
    return [ZETA * 0 + x for x in u] + [bar(x) + ZETA * 0 for x in u] + [ZETA * 0 + 1, IOTA]


def psi_matrix(u: Sequence) -> SkewMatrix:
    """The skew matrix Q of order 2n+2 at q = zeta on the substituted arguments."""
    q = ZETA
    qb = bar(q)
    args = psi_arguments(u)
    m = len(args)
    entries = {}
    for i, j in combinations(range(m), 2):
        ui, uj = args[i], args[j]
        d, a, b = _pair_factors(ui, uj, q)
        if a == 0 or b == 0:
            raise PoleError(f"Q-entry ({i + 1}, {j + 1}) has a vanishing denominator")
        entries[(i, j)] = -d * (q * ui - qb * bar(ui)) * (q * uj - qb * bar(uj)) / (a * b)
    return SkewMatrix(m, entries)


def psi_values(n: int, u: Sequence):
    """(Psi(1), Psi(2)) at q = zeta.

    Psi(2) is Pf(Q); Psi(1) is the Pfaffian of Q's leading block of order
    2n+1 bordered by a row of ones at index 0.
    """
    if len(u) != n:
        raise ValueError(f"need {n} arguments, got {len(u)}")
    if any(x == 0 for x in u):
        raise PoleError("u_i must be nonzero")
    big = psi_matrix(u)
    m = big.order
    bordered = {(0, j): 1 for j in range(1, m)}
    for (i, j), v in big.upper.items():
        if j < m - 1:
            bordered[(i + 1, j + 1)] = v
    psi1 = pfaffian(SkewMatrix(m, bordered))
    psi2 = pfaffian(big)
    return psi1, psi2
