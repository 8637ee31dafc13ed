"""Command line interface.

Subcommands: ``examples`` (run the example verification suite), ``classify``
(flags and operator identities for an algebra or operator), ``ideals``
(ideal search / simplicity verdicts), ``sweep`` (finite-field operator
sweeps), ``yangian`` (table comparison).  Every subcommand accepts ``--json``
and exits nonzero when any check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .algebra import classify_direct
from .catalog import (EXAMPLE_NAMES, OPERATOR_EXAMPLE_NAMES, make_example,
                      make_operator_example)
from .field import parse_field_tag
from .ideals import (exhaustive_ideal_search, invariant_ideal_search,
                     projective_1d_ideal_search, simplicity_report)
from .io import load_algebra, load_operator
from .operators import bracket_from_operator, check_identities, operator_from_bracket
from .suite import (examples_to_json, representability_to_json, run_examples,
                    run_negative_representability_check, run_yangian_check,
                    yangian_to_json)
from .sweep import run_sweep


def _emit(payload: dict, as_json: bool) -> int:
    failures = sum(1 for c in payload["checks"] if c["status"] == "fail")
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"== {payload['run']} ==")
        for check in payload["checks"]:
            print(f"  [{check['status']:4s}] {check['name']}: {check['details']}")
        if payload.get("counts"):
            print("  counts: " + ", ".join(
                f"{k}={v}" for k, v in payload["counts"].items()))
    return 1 if failures else 0


def _load_algebra_arg(source: str, field_tag: str | None):
    field = parse_field_tag(field_tag) if field_tag else None
    if os.path.exists(source):
        return load_algebra(source)
    return make_example(source, field=field)


def _format_subspace(space) -> str:
    rows = [
        "[" + ", ".join(space.field.format(x) for x in row) + "]"
        for row in space.basis()]
    return " span{" + "; ".join(rows) + "}" if rows else " {0}"


def _cmd_examples(args) -> int:
    reports = run_examples()
    return _emit(examples_to_json(reports), args.json)


def _cmd_classify(args) -> int:
    if args.operator:
        if os.path.exists(args.operator):
            R = load_operator(args.operator)
        else:
            field = parse_field_tag(args.field) if args.field else None
            R = make_operator_example(args.operator, field=field)
        V = bracket_from_operator(R)
        label = args.operator
    else:
        V = _load_algebra_arg(args.algebra, args.field)
        R = operator_from_bracket(V) if V.n <= 6 else None
        label = args.algebra
    flags = classify_direct(V)
    checks = [{"name": key, "status": "info", "details": str(getattr(flags, key))}
              for key in ("is_skew", "is_symmetric", "is_lie",
                          "is_associative", "is_commutative")]
    if R is not None:
        rep = check_identities(R)
        checks.extend({"name": f"operator_{k}", "status": "info",
                       "details": str(v)} for k, v in rep.as_dict().items())
    payload = {"run": f"classify {label}", "checks": checks,
               "counts": {"dim": V.n}}
    return _emit(payload, args.json)


def _cmd_ideals(args) -> int:
    V = _load_algebra_arg(args.algebra, args.field)
    dims = range(1, V.n) if args.max_dim is None \
        else range(1, min(args.max_dim, V.n - 1) + 1)
    checks = []
    if args.method == "auto":
        verdict = simplicity_report(V, cap=args.cap)
        details = verdict.kind + (f" ({verdict.reason})" if verdict.reason else "")
        if verdict.witness is not None:
            details += "; witness" + _format_subspace(verdict.witness)
        checks.append({"name": f"simplicity[{verdict.method}]",
                       "status": "info", "details": details})
    elif args.method == "exhaustive":
        verdict = exhaustive_ideal_search(V, dims=dims, cap=args.cap)
        details = verdict.kind + (f" ({verdict.reason})" if verdict.reason else "")
        if verdict.witness is not None:
            details += "; witness" + _format_subspace(verdict.witness)
        checks.append({"name": "exhaustive", "status": "info", "details": details})
    elif args.method == "1d":
        result = projective_1d_ideal_search(V)
        if result.all_lines:
            details = "every 1-dimensional subspace is an ideal"
        elif result.lines:
            details = "; ".join("ideal" + _format_subspace(s)
                                for s in result.lines)
        else:
            details = "no 1-dimensional ideals"
        checks.append({"name": "projective-1d", "status": "info",
                       "details": details})
    elif args.method == "closure":
        found = invariant_ideal_search(V)
        details = "; ".join("ideal" + _format_subspace(s) for s in found) \
            or "none found (search is incomplete)"
        checks.append({"name": "invariant-closure", "status": "info",
                       "details": details})
    payload = {"run": f"ideals {args.algebra}", "checks": checks,
               "counts": {"dim": V.n}}
    return _emit(payload, args.json)


def _cmd_sweep(args) -> int:
    field = parse_field_tag(args.field)
    report = run_sweep(field, args.n, mode=args.mode, samples=args.samples,
                       seed=args.seed, workers=args.workers)
    payload = report.to_json()
    payload["counts"]["elapsed_seconds"] = round(report.elapsed, 3)
    return _emit(payload, args.json)


def _cmd_yangian(args) -> int:
    report = run_yangian_check(args.N, args.D)
    return _emit(yangian_to_json(report), args.json)


def _cmd_representability(args) -> int:
    report = run_negative_representability_check()
    return _emit(representability_to_json(report), args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dalg",
        description="Exact toolkit for finite-dimensional double algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("examples", help="run the example verification suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_examples)

    p = sub.add_parser("classify", help="classify an algebra or operator")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--algebra",
                       help=f"algebra file or example name ({', '.join(EXAMPLE_NAMES)})")
    group.add_argument("--operator",
                       help="operator file or example name "
                            f"({', '.join(OPERATOR_EXAMPLE_NAMES)})")
    p.add_argument("--field", help="field tag for named examples (default Q)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("ideals", help="ideal search and simplicity verdicts")
    p.add_argument("--algebra", required=True,
                   help="algebra file or example name")
    p.add_argument("--field", help="field tag for named examples (default Q)")
    p.add_argument("--method", choices=("exhaustive", "1d", "closure", "auto"),
                   default="auto")
    p.add_argument("--max-dim", type=int, default=None,
                   help="restrict exhaustive search to dimensions <= this")
    p.add_argument("--cap", type=int, default=10 ** 6,
                   help="candidate-subspace cap for exhaustive search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ideals)

    p = sub.add_parser("sweep", help="finite-field operator sweep")
    p.add_argument("--field", required=True, help="e.g. gf2 or GF(3)")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--mode", choices=("full", "sample"), default="full")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("yangian", help="Yangian-style table comparison")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--D", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_yangian)

    p = sub.add_parser("representability",
                       help="GF(2) evidence that the dual of L_2 is not a "
                            "commutator algebra")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_representability)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
