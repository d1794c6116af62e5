"""Named, seeded identity checks with machine-readable reports.

Every check is deterministic in ``(id, size, trials, seed)``.  Evaluation
checks draw ``trials`` pole-free points and demand exact equality; the
enumeration checks compare counts or polynomials outright.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import asm, products
from .asm import SymmetryClass
from .characters import double_staircase, sp_check_zsymp, sp_eval
from .field import IOTA, SQRT3, ZETA, Cyclo12, PoleError, render
from .laurent import LaurentPoly, lp_eval, lp_format
from .linalg import SkewMatrix, det, pfaffian, pfaffian_bruteforce
from .pfaffian_formulas import check_partition_point, partition_pfaffian, psi_values, zx_rhs
from .sixvertex import (
    WeightParams,
    config_to_dsasm,
    dsasm_to_config,
    enumerate_configs_dfs,
    osasm_partition,
    partition_direct,
    partition_specialized,
)

IDENTITY_IDS = (
    "pf-squared-det",
    "pf-scaling",
    "partfunc-pfaffian",
    "lemma-zx",
    "eq-zsymp",
    "conj17-odd-osasm",
    "psi-ratio",
    "cor-corr",
    "thm-ox",
    "product-even",
    "product-odd",
    "xo-minus-one",
    "sp-product",
    "sym-even-osasm",
    "counts-vs-enumeration",
    "bijection-roundtrip",
)

# what ``size`` means for each id, and the size run_all uses by default
SIZE_MEANING = {
    "pf-squared-det": "largest matrix order (even orders 2..size are checked)",
    "pf-scaling": "largest matrix order (even orders 2..size are checked)",
    "partfunc-pfaffian": "n, the order of Z_n",
    "lemma-zx": "n, the order of Z~_n",
    "eq-zsymp": "n, with 2n+2 spectral parameters",
    "conj17-odd-osasm": "n, for OSASMs of order 2n+1",
    "psi-ratio": "n, with Q of order 2n+2",
    "cor-corr": "n, for OSASMs of order 2n+1 and 2n+2",
    "thm-ox": "n, for OSASMs of order 2n+1",
    "product-even": "n, for OSASMs of order 2n",
    "product-odd": "n, for OSASMs of order 2n+1",
    "xo-minus-one": "n, for X^O of order 2n",
    "sp-product": "n, the double staircase index",
    "sym-even-osasm": "the (even) order 2n",
    "counts-vs-enumeration": "largest order enumerated",
    "bijection-roundtrip": "largest order enumerated",
}

DEFAULT_SIZES = {
    "pf-squared-det": 8,
    "pf-scaling": 8,
    "partfunc-pfaffian": 6,
    "lemma-zx": 6,
    "eq-zsymp": 2,
    "conj17-odd-osasm": 2,
    "psi-ratio": 3,
    "cor-corr": 2,
    "thm-ox": 3,
    "product-even": 4,
    "product-odd": 3,
    "xo-minus-one": 4,
    "sp-product": 3,
    "sym-even-osasm": 8,
    "counts-vs-enumeration": 7,
    "bijection-roundtrip": 6,
}

CYCLO_IDS = frozenset({"eq-zsymp", "conj17-odd-osasm", "psi-ratio", "cor-corr"})

DEFAULT_TRIALS = 5
MAX_REJECTIONS = 1000

# the displayed small-order sets: |DSASM(n)| and |OSASM(n)| for n = 1, 2, 3
DISPLAYED_DSASM = (1, 2, 5)
DISPLAYED_OSASM = (1, 1, 4)


class UnknownIdentityError(ValueError):
    pass


class SamplingError(RuntimeError):
    pass


@dataclass
class CheckReport:
    id: str
    size: int
    trials: int
    seed: int
    field: str
    status: str
    witnesses: list = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def show(x) -> str:
    """Canonical text for a field element or polynomial."""
    if isinstance(x, LaurentPoly):
        return lp_format(x)
    if isinstance(x, (int, Fraction, Cyclo12)):
        return render(x)
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(show(v) for v in x) + "]"
    return str(x)


def trial_rng(seed: int, ident: str, size: int, trial: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{ident}:{size}:{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_rational(rng: random.Random) -> Fraction:
    """p/q with 1 <= p, q <= 50 and a random sign."""
    return Fraction(rng.randint(1, 50), rng.randint(1, 50)) * rng.choice((1, -1))


def distinct_rationals(rng: random.Random, k: int) -> list[Fraction]:
    """k samples with u_i != +-u_j."""
    out: list[Fraction] = []
    while len(out) < k:
        x = random_rational(rng)
        if all(x != y and x != -y for y in out):
            out.append(x)
    return out


class _Outcome:
    """Collects exact comparisons; records a witness for each disagreement."""

    def __init__(self):
        self.witnesses: list = []

    def compare(self, lhs, rhs, **point) -> None:
        if lhs != rhs:
            self.witnesses.append(
                {"point": {k: show(v) for k, v in point.items()}, "lhs": show(lhs), "rhs": show(rhs)}
            )


def _sampled(rng: random.Random, draw: Callable[[random.Random], tuple]):
    """Call ``draw`` until it stops raising PoleError (at most MAX_REJECTIONS times)."""
    for _ in range(MAX_REJECTIONS):
        try:
            return draw(rng)
        except PoleError:
            continue
    raise SamplingError(f"more than {MAX_REJECTIONS} pole rejections")


# evaluation checks -------------------------------------------------------------

def _random_skew(rng, order) -> SkewMatrix:
    return SkewMatrix.from_function(order, lambda i, j: random_rational(rng))


def _check_pf_squared_det(size, trials, rngs, out):
    for t, rng in enumerate(rngs):
        for order in range(2, size + 1, 2):
            m = _random_skew(rng, order)
            pf = pfaffian(m)
            out.compare(pf * pf, det(m.full()), trial=t, order=order)
            if order <= 8:
                out.compare(pf, pfaffian_bruteforce(m), trial=t, order=order)


def _check_pf_scaling(size, trials, rngs, out):
    for t, rng in enumerate(rngs):
        for order in range(2, size + 1, 2):
            m = _random_skew(rng, order)
            k = [random_rational(rng) for _ in range(order)]
            prod = Fraction(1)
            for x in k:
                prod *= x
            out.compare(pfaffian(m.scaled(k)), prod * pfaffian(m), trial=t, order=order, k=k)


def _general_weights(rng):
    q = random_rational(rng)
    return WeightParams(*(random_rational(rng) for _ in range(4)), q)


def _check_partfunc(size, trials, rngs, out):
    asm.check_cap(size, SymmetryClass.DSASM)
    for t, rng in enumerate(rngs):
        def draw(r):
            u = distinct_rationals(r, size)
            p = _general_weights(r)
            check_partition_point(u, p.q)
            return u, p

        u, p = _sampled(rng, draw)
        out.compare(partition_direct(size, u, p), partition_pfaffian(size, u, p),
                    trial=t, u=u, q=p.q, alpha=p.alpha, beta=p.beta, gamma=p.gamma, delta=p.delta)


def _check_zx(size, trials, rngs, out):
    if size < 2:
        raise ValueError("lemma-zx needs n >= 2")
    asm.check_cap(size, SymmetryClass.DSASM)
    x_n, x_prev = asm.genfunc_dsasm(size), asm.genfunc_dsasm(size - 1)
    for t, rng in enumerate(rngs):
        def draw(r):
            z, s, q = (random_rational(r) for _ in range(3))
            return z, s, q, zx_rhs(size, z, s, q, x_n, x_prev)

        z, s, q, rhs = _sampled(rng, draw)
        lhs = partition_specialized(size, [z] + [1] * (size - 1), s, q)
        out.compare(lhs, rhs, trial=t, z=z, s=s, q=q)


def _check_zsymp(size, trials, rngs, out):
    asm.check_cap(2 * size + 2, SymmetryClass.OSASM)
    for t, rng in enumerate(rngs):
        u = distinct_rationals(rng, 2 * size + 2)
        c = sp_check_zsymp(size, u)
        out.compare(c.lhs, c.rhs, trial=t, u=u)


def _odd_factor(u, power: int):
    f = Fraction(1)
    for x in u:
        d = x * x + 1 / (x * x) - 1
        if d == 0:
            raise PoleError("u^2 + 1/u^2 = 1")
        f *= (x + 1 / x) ** 2 / d**power
    return f


def _odd_lhs(n, u):
    return osasm_partition(2 * n + 1, u + [1 / x for x in u] + [1], ZETA)


def _check_conj17(size, trials, rngs, out):
    asm.check_cap(2 * size + 1, SymmetryClass.OSASM)
    lam = double_staircase(size)
    for t, rng in enumerate(rngs):
        u = distinct_rationals(rng, size)
        args = [x * x for x in u] + [1 / (x * x) for x in u] + [1, -1]
        rhs = Fraction(1, 3 ** (size * size)) * _odd_factor(u, 1) * sp_eval(lam, args)
        out.compare(_odd_lhs(size, u), rhs, trial=t, u=u)


def _check_psi(size, trials, rngs, out):
    for t, rng in enumerate(rngs):
        def draw(r):
            v = distinct_rationals(r, size)
            return v, psi_values(size, v)

        u, (psi1, psi2) = _sampled(rng, draw)
        out.compare(psi2, 6 * psi1, trial=t, u=u)


def _check_corr(size, trials, rngs, out):
    asm.check_cap(2 * size + 2, SymmetryClass.OSASM)
    for t, rng in enumerate(rngs):
        u = distinct_rationals(rng, size)
        even = osasm_partition(2 * size + 2, u + [1 / x for x in u] + [1, IOTA], ZETA)
        rhs = SQRT3 ** (2 * size - 1) * _odd_factor(u, 2) * even
        out.compare(_odd_lhs(size, u), rhs, trial=t, u=u)


# enumeration checks ------------------------------------------------------------

def _check_thm_ox(size, trials, rngs, out):
    out.compare(products.count_osasm_odd(size), 4**size * products.xo_special(size + 1), n=size)
    if 2 * size + 1 <= asm.order_cap(SymmetryClass.OSASM):
        out.compare(asm.count(2 * size + 1, SymmetryClass.OSASM), products.count_osasm_odd(size), n=size)


def _check_product_even(size, trials, rngs, out):
    out.compare(asm.count(2 * size, SymmetryClass.OSASM), products.count_osasm_even(size), n=size)


def _check_product_odd(size, trials, rngs, out):
    out.compare(asm.count(2 * size + 1, SymmetryClass.OSASM), products.count_osasm_odd(size), n=size)


def _check_xo(size, trials, rngs, out):
    value = lp_eval(asm.genfunc_osasm(2 * size), {"r": 1, "t": -1})
    out.compare(value, products.xo_special(size), n=size)


def _check_sp_product(size, trials, rngs, out):
    value = sp_eval(double_staircase(size), [1] * (2 * size + 1) + [-1])
    out.compare(value, products.sp_special_value(size), n=size)


def _check_sym(size, trials, rngs, out):
    if size < 2 or size % 2:
        raise ValueError("sym-even-osasm needs an even order >= 2")
    x = asm.genfunc_osasm(size)
    t = LaurentPoly.var("t", x.variables)
    out.compare(x, t ** (size + 2) * x.invert_variable("t"), order=size)


def _check_counts(size, trials, rngs, out):
    for n, want in enumerate(DISPLAYED_DSASM, start=1):
        if n <= size:
            out.compare(asm.count(n, SymmetryClass.DSASM), want, cls="dsasm", order=n)
    for n, want in enumerate(DISPLAYED_OSASM, start=1):
        if n <= size:
            out.compare(asm.count(n, SymmetryClass.OSASM), want, cls="osasm", order=n)
    for n in range(1, min(size, asm.order_cap(SymmetryClass.ASM)) + 1):
        out.compare(asm.count(n, SymmetryClass.ASM), products.count_asm(n), cls="asm", order=n)
    for n in range(1, size + 1):
        formula = products.count_osasm_even(n // 2) if n % 2 == 0 else products.count_osasm_odd(n // 2)
        out.compare(asm.count(n, SymmetryClass.OSASM), formula, cls="osasm", order=n)


def _check_bijection(size, trials, rngs, out):
    asm.check_cap(size, SymmetryClass.DSASM)
    for n in range(1, size + 1):
        matrices = list(asm.enumerate_matrices(n, SymmetryClass.DSASM))
        for a in matrices:
            back = config_to_dsasm(dsasm_to_config(a))
            out.compare(back.to_text(), a.to_text(), order=n)
        from_configs = sorted(config_to_dsasm(c).entries for c in enumerate_configs_dfs(n))
        out.compare(len(from_configs), len(matrices), order=n)
        out.compare(from_configs == sorted(a.entries for a in matrices), True, order=n)


_CHECKS: Mapping[str, Callable] = {
    "pf-squared-det": _check_pf_squared_det,
    "pf-scaling": _check_pf_scaling,
    "partfunc-pfaffian": _check_partfunc,
    "lemma-zx": _check_zx,
    "eq-zsymp": _check_zsymp,
    "conj17-odd-osasm": _check_conj17,
    "psi-ratio": _check_psi,
    "cor-corr": _check_corr,
    "thm-ox": _check_thm_ox,
    "product-even": _check_product_even,
    "product-odd": _check_product_odd,
    "xo-minus-one": _check_xo,
    "sp-product": _check_sp_product,
    "sym-even-osasm": _check_sym,
    "counts-vs-enumeration": _check_counts,
    "bijection-roundtrip": _check_bijection,
}


def _validate_id(ident: str) -> None:
    if ident not in _CHECKS:
        raise UnknownIdentityError(f"unknown identity id {ident!r}; known: {', '.join(IDENTITY_IDS)}")


def run_check(ident: str, size: int | None = None, trials: int = DEFAULT_TRIALS, seed: int = 0) -> CheckReport:
    """Run one check; raises on unknown ids, cap violations and sampling failure."""
    _validate_id(ident)
    size = DEFAULT_SIZES[ident] if size is None else int(size)
    if trials < 1:
        raise ValueError("trials must be positive")
    start = time.perf_counter()
    rngs = [trial_rng(seed, ident, size, t) for t in range(trials)]
    out = _Outcome()
    _CHECKS[ident](size, trials, rngs, out)
    elapsed = int((time.perf_counter() - start) * 1000)
    return CheckReport(
        id=ident,
        size=size,
        trials=trials,
        seed=seed,
        field="cyclo12" if ident in CYCLO_IDS else "rational",
        status="fail" if out.witnesses else "pass",
        witnesses=out.witnesses,
        elapsed_ms=elapsed,
    )


def run_all(max_size_per_id: Mapping[str, int] | None = None, seed: int = 0,
            trials: int = DEFAULT_TRIALS) -> list[CheckReport]:
    """Every check at its default size (or the override); errors become "error" reports."""
    sizes = dict(DEFAULT_SIZES)
    for ident, size in (max_size_per_id or {}).items():
        _validate_id(ident)
        sizes[ident] = size
    reports = []
    for ident in IDENTITY_IDS:
        start = time.perf_counter()
        try:
            reports.append(run_check(ident, sizes[ident], trials, seed))
        except Exception as exc:  # noqa: BLE001 - a broken check must not stop the batch
            reports.append(CheckReport(
                id=ident, size=sizes[ident], trials=trials, seed=seed,
                field="cyclo12" if ident in CYCLO_IDS else "rational", status="error",
                witnesses=[{"error": f"{type(exc).__name__}: {exc}"}],
                elapsed_ms=int((time.perf_counter() - start) * 1000),
            ))
    return reports
