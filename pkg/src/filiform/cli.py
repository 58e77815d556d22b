"""Command-line front end: gen, dims, check, verify-oracle, fixture.

Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
3 I/O error.  All output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle, serialize, systems
from .lie import make_fixture
from .polynomials import TOP

X_MODE_FLAG = {"free": "free", "0": "fixed-0", "1": "fixed-1"}


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _render_system(system, fmt: str) -> str:
    if fmt == "json":
        return serialize.canonical_json(serialize.system_doc(system))
    if fmt == "cas":
        return serialize.system_cas(system)
    return serialize.system_text(system)


def cmd_gen(args) -> int:
    if args.dim is not None:
        system = systems.system_finite(args.dim, X_MODE_FLAG[args.x])
    else:
        system = systems.system_truncated(args.truncate)
    _write(_render_system(system, args.format), args.output)
    return 0


def cmd_dims(args) -> int:
    report = systems.dims_report(args.dim)
    closed_vars, closed_eqs = systems.closed_form_counts(args.dim)
    system = systems.system_finite(args.dim, "free")
    enum_vars = len([v for v in system.variables if v != TOP])
    lines = [
        f"dimension: {args.dim}",
        f"num_vars: {report['num_vars']} "
        f"(closed form {closed_vars}, enumerated {enum_vars})",
        f"num_eqs: {report['num_eqs']} "
        f"(closed form {closed_eqs}, enumerated {len(system.equations)})",
        "h2 by weight: " + ", ".join(
            f"{w} -> {d}" for w, d in report["h2_by_weight"].items()),
        "h3 by weight: " + ", ".join(
            f"{w} -> {d}" for w, d in report["h3_by_weight"].items()),
    ]
    _write("\n".join(lines) + "\n", args.output)
    return 0


def _load_assignment(args) -> dict:
    if args.known is not None:
        if args.known == "mk" and args.k is None:
            raise ValueError("--known mk needs --k")
        return oracle.known_solution(
            args.known, 1, k=args.k, bound=(args.dim - 1) // 2)
    with open(args.assign, "r", encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ValueError(f"assignment file is not valid JSON: {exc}") from None
    return serialize.parse_assignment(doc)


def cmd_check(args) -> int:
    assignment = _load_assignment(args)
    system = systems.system_finite(args.dim, "free")
    residuals = oracle.evaluate_system(system, assignment)
    structure = oracle.deformed_structure(assignment, args.dim)
    defects = oracle.jacobi_scan(structure)
    report = serialize.report_doc(system.system_id, assignment, residuals, defects)
    _write(serialize.canonical_json(report), args.report)
    return 0 if report["verdict"] == "verified" else 1


def cmd_verify_oracle(args) -> int:
    diffs = []
    checked = 0
    if args.max_total is not None:
        system = systems.system_truncated(args.max_total)
        for eq in system.equations:
            checked += 1
            mine = oracle.oracle_coefficient(*eq.label)
            if mine != eq.poly:
                diffs.append((eq, mine))
    else:
        system = systems.system_finite(args.dim, "free")
        for eq in system.equations:
            checked += 1
            j, q, r = eq.label
            inventory = oracle.conclusive_inventory(j, q, r, with_top=eq.tilde)
            mine = oracle.oracle_coefficient(j, q, r, inventory)
            if mine != eq.poly:
                diffs.append((eq, mine))
    lines = [f"# {system.system_id}: {checked} labels compared, {len(diffs)} diffs"]
    for eq, mine in diffs:
        lines.append(f"label {eq.label}:")
        lines.append(f"  closed form: {eq.poly.text()}")
        lines.append(f"  oracle:      {mine.text()}")
    _write("\n".join(lines) + "\n", args.output)
    return 0 if not diffs else 1


def cmd_fixture(args) -> int:
    structure = make_fixture(args.name, args.dim, k=args.k, s=args.s, base=args.base)
    _write(serialize.canonical_json(serialize.fixture_doc(structure)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="filiform",
        description="Generate and verify the quadratic systems describing "
                    "deformations of the chain nilpotent Lie algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit an equation system")
    size = gen.add_mutually_exclusive_group(required=True)
    size.add_argument("--dim", type=int, help="finite variety dimension n >= 9")
    size.add_argument("--truncate", type=int,
                      help="total-index bound for the truncated system")
    gen.add_argument("--x", choices=sorted(X_MODE_FLAG), default="free",
                     help="marker handling for even dimensions")
    gen.add_argument("--format", choices=("text", "json", "cas"), default="text")
    gen.add_argument("--output", default=None)
    gen.set_defaults(func=cmd_gen)

    dims = sub.add_parser("dims", help="report variable/equation counts")
    dims.add_argument("--dim", type=int, required=True)
    dims.add_argument("--output", default=None)
    dims.set_defaults(func=cmd_dims)

    check = sub.add_parser("check", help="evaluate an assignment on a system")
    check.add_argument("--dim", type=int, required=True)
    source = check.add_mutually_exclusive_group(required=True)
    source.add_argument("--known", choices=oracle.KNOWN_FAMILIES)
    source.add_argument("--assign", help="JSON assignment file")
    check.add_argument("--k", type=int, default=None,
                       help="index for the mk family")
    check.add_argument("--report", default=None,
                       help="write the JSON report here instead of stdout")
    check.set_defaults(func=cmd_check)

    verify = sub.add_parser("verify-oracle",
                            help="compare closed forms against brute force")
    bound = verify.add_mutually_exclusive_group(required=True)
    bound.add_argument("--max-total", type=int)
    bound.add_argument("--dim", type=int)
    verify.add_argument("--output", default=None)
    verify.set_defaults(func=cmd_verify_oracle)

    fixture = sub.add_parser("fixture", help="emit a stock structure table")
    fixture.add_argument("--name", required=True)
    fixture.add_argument("--dim", type=int, required=True)
    fixture.add_argument("--k", type=int, default=None)
    fixture.add_argument("--s", type=int, default=None)
    fixture.add_argument("--base", default=None)
    fixture.add_argument("--output", default=None)
    fixture.set_defaults(func=cmd_fixture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
