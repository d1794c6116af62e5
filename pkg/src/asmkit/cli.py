"""Command-line front end.

Exit codes: 0 on success, 1 when a check fails, 2 on a usage error.
Results go to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import asm, products
from .asm import CapExceededError, SymmetryClass
from .field import IOTA, SQRT3, ZETA, render
from .identities import IDENTITY_IDS, run_all, run_check
from .laurent import lp_eval, lp_format
from .pfaffian_formulas import partition_pfaffian
from .sixvertex import WeightParams, dsasm_to_config, osasm_partition, partition_direct, partition_specialized

NAMED_VALUES = {"zeta": ZETA, "iota": IOTA, "sqrt3": SQRT3}


class UsageError(Exception):
    pass


def parse_value(text: str):
    """A rational ``p/q`` or one of ``zeta``, ``iota``, ``sqrt3`` (optionally negated)."""
    t = text.strip()
    sign = 1
    if t.startswith("-") and t[1:] in NAMED_VALUES:
        sign, t = -1, t[1:]
    if t in NAMED_VALUES:
        return sign * NAMED_VALUES[t]
    try:
        return Fraction(t)
    except ValueError:
        raise UsageError(f"cannot parse value {text!r}") from None


def parse_values(text: str) -> list:
    return [parse_value(x) for x in text.split(",") if x.strip()]


def _class(name: str) -> SymmetryClass:
    return SymmetryClass(name)


def _emit(obj) -> None:
    print(json.dumps(obj))


# commands --------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    matrices = asm.enumerate_matrices(args.order, _class(args.cls), args.cap)
    if args.output == "json":
        _emit({"class": args.cls, "order": args.order, "matrices": [m.to_lists() for m in matrices]})
    else:
        print("\n\n".join(m.to_text() for m in matrices))
    return 0


def cmd_count(args) -> int:
    n = asm.count(args.order, _class(args.cls), args.cap)
    if args.output == "text":
        print(n)
    else:
        _emit({"class": args.cls, "order": args.order, "count": str(n)})
    return 0


def cmd_genfunc(args) -> int:
    if args.cls == "asm":
        raise UsageError("--class must be dsasm or osasm")
    make = asm.genfunc_dsasm if args.cls == "dsasm" else asm.genfunc_osasm
    text = lp_format(make(args.order, args.cap))
    if args.output == "json":
        _emit({"class": args.cls, "order": args.order, "variables": list(asm.DSASM_VARS if args.cls == "dsasm" else asm.OSASM_VARS), "genfunc": text})
    else:
        print(text)
    return 0


def cmd_eval_partition(args) -> int:
    u = parse_values(args.u)
    n = args.order
    if len(u) != n:
        raise UsageError(f"--u needs {n} values, got {len(u)}")
    if args.field == "cyclo12":
        q = ZETA if args.q is None else parse_value(args.q)
    else:
        if args.q is None:
            raise UsageError("--q is required with --field rational")
        q = parse_value(args.q)
    if args.kind == "general":
        if args.weights is None:
            raise UsageError("--kind general needs --weights alpha,beta,gamma,delta")
        w = parse_values(args.weights)
        if len(w) != 4:
            raise UsageError("--weights takes exactly four values")
        p = WeightParams(*w, q)
        value = partition_pfaffian(n, u, p) if args.method == "pfaffian" else partition_direct(n, u, p, args.cap)
    elif args.kind == "specialized":
        value = partition_specialized(n, u, parse_value(args.s), q, args.cap)
    else:
        value = osasm_partition(n, u, q, args.cap)
    _emit({"order": n, "kind": args.kind, "method": args.method, "field": args.field, "value": render(value)})
    return 0


def _parse_matrix(text: str) -> asm.AsmMatrix:
    try:
        rows = [[int(x) for x in row.split()] for row in text.replace("/", ";").split(";") if row.strip()]
    except ValueError:
        raise UsageError(f"cannot parse matrix {text!r}") from None
    return asm.AsmMatrix(tuple(tuple(r) for r in rows))


def cmd_dump_config(args) -> int:
    if args.matrix is not None:
        a = _parse_matrix(args.matrix)
        report = asm.validate(a, SymmetryClass.DSASM)
        if not report:
            raise UsageError(f"not a DSASM ({report.rule} at {report.position}: {report.message})")
    else:
        if args.order is None:
            raise UsageError("give --matrix or --order with --index")
        for k, a in enumerate(asm.enumerate_matrices(args.order, SymmetryClass.DSASM, args.cap)):
            if k == args.index:
                break
        else:
            raise UsageError(f"DSASM({args.order}) has no index {args.index}")
    print(dsasm_to_config(a).dump())
    return 0


def cmd_check(args) -> int:
    if args.identity not in IDENTITY_IDS:
        raise UsageError(f"unknown identity {args.identity!r}; choose from {', '.join(IDENTITY_IDS)}")
    try:
        report = run_check(args.identity, args.size, args.trials, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.output == "text":
        print(f"{report.id} size={report.size} trials={report.trials} seed={report.seed} "
              f"field={report.field}: {report.status} ({report.elapsed_ms} ms)")
        for w in report.witnesses:
            print(f"  {json.dumps(w)}")
    else:
        _emit(report.to_dict())
    return 0 if report.passed else 1


def build_report(max_order: int, seed: int, checks: bool = True) -> dict:
    """Counts, X^O at (1, -1) and check outcomes; deterministic for fixed arguments."""
    for cls in (SymmetryClass.DSASM, SymmetryClass.OSASM):
        asm.check_cap(max_order, cls)
    orders = list(range(1, max_order + 1))
    formula = [products.count_osasm_even(n // 2) if n % 2 == 0 else products.count_osasm_odd(n // 2) for n in orders]
    doc = {
        "max_order": max_order,
        "seed": seed,
        "orders": orders,
        "dsasm": [asm.count(n, SymmetryClass.DSASM) for n in orders],
        "osasm": [asm.count(n, SymmetryClass.OSASM) for n in orders],
        "osasm_formula": formula,
        "xo_at_1_minus_1": [lp_eval(asm.genfunc_osasm(n), {"r": 1, "t": -1}) for n in orders],
    }
    if checks:
        doc["checks"] = [{"id": r.id, "size": r.size, "status": r.status} for r in run_all(seed=seed)]
    return doc


def report_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["order", "dsasm", "osasm", "osasm_formula", "xo_at_1_minus_1"])
    for row in zip(doc["orders"], doc["dsasm"], doc["osasm"], doc["osasm_formula"], doc["xo_at_1_minus_1"]):
        w.writerow(row)
    return buf.getvalue()


def cmd_report(args) -> int:
    doc = build_report(args.max_order, args.seed, checks=not args.no_checks and args.output == "json")
    if args.output == "csv":
        sys.stdout.write(report_csv(doc))
        return 0
    print(json.dumps(doc, indent=2))
    failed = [c for c in doc.get("checks", []) if c["status"] != "pass"]
    return 1 if failed else 0


# parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="asmkit", description="Alternating sign matrix toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_cap(p):
        p.add_argument("--cap", type=int, default=None, help="override the order cap for this run")
        return p

    classes = [c.value for c in SymmetryClass]

    p = with_cap(sub.add_parser("enumerate", help="list every matrix of a class"))
    p.add_argument("--class", dest="cls", choices=classes, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = with_cap(sub.add_parser("count", help="count the matrices of a class"))
    p.add_argument("--class", dest="cls", choices=classes, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--output", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_count)

    p = with_cap(sub.add_parser("genfunc", help="DSASM or OSASM generating function"))
    p.add_argument("--class", dest="cls", choices=classes, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--output", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_genfunc)

    p = with_cap(sub.add_parser("eval-partition", help="evaluate a partition function at a point"))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--u", required=True, help="comma-separated spectral parameters")
    p.add_argument("--q", default=None, help="crossing parameter (default zeta with --field cyclo12)")
    p.add_argument("--s", default="1", help="boundary weight s for --kind specialized")
    p.add_argument("--weights", default=None, help="alpha,beta,gamma,delta for --kind general")
    p.add_argument("--kind", choices=["general", "specialized", "osasm"], default="specialized")
    p.add_argument("--method", choices=["direct", "pfaffian"], default="direct")
    p.add_argument("--field", choices=["rational", "cyclo12"], default="rational")
    p.set_defaults(func=cmd_eval_partition)

    p = with_cap(sub.add_parser("dump-config", help="six-vertex configuration of a DSASM"))
    p.add_argument("--matrix", default=None, help='rows separated by ";", e.g. "0 1 0; 1 -1 1; 0 1 0"')
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--index", type=int, default=0, help="position in the enumeration order")
    p.set_defaults(func=cmd_dump_config)

    p = sub.add_parser("check", help="run one identity check")
    p.add_argument("identity", help="one of: " + ", ".join(IDENTITY_IDS))
    p.add_argument("--size", type=int, default=None)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("report", help="counts, special values and all check outcomes")
    p.add_argument("--max-order", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["json", "csv"], default="json")
    p.add_argument("--no-checks", action="store_true", help="skip the identity suite")
    p.set_defaults(func=cmd_report)
    parser.subcommands = sub.choices
    return parser


def _validate(args) -> None:
    for name in ("order", "max_order", "size", "trials", "cap"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    if getattr(args, "index", 0) < 0:
        raise UsageError("--index must be nonnegative")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except (UsageError, CapExceededError, ZeroDivisionError) as exc:
        print(f"asmkit {args.command}: {exc}", file=sys.stderr)
        print(parser.subcommands[args.command].format_usage().rstrip(), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
