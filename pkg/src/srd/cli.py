"""Command-line front end.

Subcommands: check-params (identities and routes on a parameter file),
closure (coherent closure of a matrix file, optionally extract and check),
enumerate (scan feasible tuples within bounds), audit-table (published
table vs derived coefficients), example (emit a bundled matrix).

Exit codes: 0 all checks passed / operation succeeded, 1 checks evaluated
and some failed (infeasible), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .audit import audit_published_table
from .config import canonical_relabel, detect_type, format_matrix_text, parse_matrix_text, wl_closure
from .errors import InfeasibleParameters, SpectrumInfeasible, TypeMismatchError
from .feasibility import FORMULAS, check_params, enumerate_feasible, fmt_exact, load_params_json
from .models import EXAMPLE_NAMES, gen_example
from .theory import extract_srd_params

_ROUTE_CHOICES = {
    "all": ("A", "B", "C"),
    "equations": (),
    "intersection": ("A",),
    "regrep": ("B",),
    "characters": ("C",),
}

_TABLE_COLUMNS = (
    "n1", "k1", "λ1", "μ1", "n2", "k2", "λ2", "μ2",
    "S1", "S2", "N1", "P1", "N2", "P2", "a1", "b1", "a2", "b2",
)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _print_equations(report, out):
    for eq in report.equations:
        mark = "pass" if eq.passed else "FAIL"
        residuals = ", ".join(fmt_exact(r) for r in eq.residuals)
        note = f"  [{eq.note}]" if eq.note else ""
        print(f"({eq.id:>2}) {eq.formula:<58} residual {residuals:<12} {mark}{note}", file=out)


def _print_routes(report, out):
    for key, route in report.routes.items():
        mark = "pass" if route.passed else "FAIL"
        print(f"route {key} ({route.name}): {route.checked} checks, {mark}", file=out)
        if route.first_failure:
            print(f"  first failure: {route.first_failure}", file=out)
        for ins in route.instances:
            m = "pass" if ins.passed else "FAIL"
            print(
                f"  identity ({ins.equation}) via {ins.description}: "
                f"{fmt_exact(ins.lhs)} vs {fmt_exact(ins.rhs)}  {m}",
                file=out,
            )
        for note in route.notes:
            print(f"  note: {note}", file=out)


def _cmd_check_params(args) -> int:
    try:
        params = load_params_json(_read_text(args.params))
    except SpectrumInfeasible as exc:
        payload = {
            "verdict": "fail",
            "equations": [
                {
                    "id": 1,
                    "variant": "corrected",
                    "lhs": None,
                    "rhs": [],
                    "residual": [],
                    "pass": False,
                    "reason": str(exc),
                }
            ],
            "routes": {},
            "labeling": None,
        }
        if args.json:
            print(json.dumps(payload, indent=2))
        else:
            print(f"(1) {FORMULAS[1]}: FAIL ({exc})")
            print("verdict: fail")
        return 1
    except InfeasibleParameters as exc:
        if args.json:
            print(json.dumps({"verdict": "fail", "reason": str(exc)}, indent=2))
        else:
            print(f"infeasible: {exc}")
        return 1
    variant = "as_printed" if args.eq15 == "as-printed" else "corrected"
    report = check_params(params, variant15=variant, routes=_ROUTE_CHOICES[args.route])
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print("parameters:", params)
        _print_equations(report, sys.stdout)
        _print_routes(report, sys.stdout)
        print(f"labeling: {report.labeling}")
        print(f"verdict: {'pass' if report.passed else 'fail'}")
    return 0 if report.passed else 1


def _cmd_closure(args) -> int:
    config = parse_matrix_text(_read_text(args.matrix))
    closed = wl_closure(config)
    ctype = detect_type(closed)
    payload: dict = {
        "fibers": [closed.n1, closed.n2],
        "colors": closed.color_count,
        "type": list(ctype),
    }
    exit_code = 0
    report = None
    if args.extract or args.check:
        try:
            canonical, mapping = canonical_relabel(closed)
            params = extract_srd_params(canonical)
            payload["relabeling"] = {str(old): new for old, new in sorted(mapping.items())}
            payload["params"] = params.as_dict()
            if args.check:
                report = check_params(params)
                payload["feasibility"] = report.to_json_dict()
                exit_code = 0 if report.passed else 1
        except (TypeMismatchError, InfeasibleParameters) as exc:
            payload["error"] = str(exc)
            exit_code = 1
    if args.json:
        print(json.dumps(payload, indent=2))
        return exit_code
    print(f"fibers: {closed.n1} + {closed.n2}")
    print(f"coherent closure: {closed.color_count} colors, type {ctype}")
    if "relabeling" in payload:
        print("canonical relabeling (input color -> relation):", payload["relabeling"])
    if "params" in payload:
        print("extracted parameters:", payload["params"])
    if "error" in payload:
        print(f"not a strongly regular design: {payload['error']}")
    if report is not None:
        _print_equations(report, sys.stdout)
        _print_routes(report, sys.stdout)
        print(f"verdict: {'pass' if report.passed else 'fail'}")
    return exit_code


def _cmd_enumerate(args) -> int:
    results = enumerate_feasible(args.max_n1, args.max_n2)
    if args.json:
        payload = [
            {"params": p.as_dict(), "feasibility": rep.to_json_dict()} for p, rep in results
        ]
        print(json.dumps(payload, indent=2))
        return 0
    header = " ".join(f"{c:>4}" for c in _TABLE_COLUMNS)
    print(header)
    for p, _ in results:
        print(" ".join(f"{x:>4}" for x in p.as_tuple()))
    print(f"# {len(results)} feasible tuples with n1 <= {args.max_n1}, n2 <= {args.max_n2}")
    return 0


def _cmd_audit_table(args) -> int:
    params = load_params_json(_read_text(args.params))
    report = audit_published_table(params)
    if args.json:
        payload = {
            "findings": [
                {
                    "product": [f.i, f.j],
                    "relation": f.k,
                    "published": f.transcribed,
                    "published_value": f.transcribed_value,
                    "derived": f.derived,
                    "derived_value": f.derived_value,
                }
                for f in report.findings
            ],
            "agreements": report.agreement_count,
            "zero_products_consistent": report.zero_products_consistent,
            "notes": list(report.notes),
        }
        print(json.dumps(payload, indent=2))
        return 0
    if report.findings:
        print(f"{len(report.findings)} published coefficients disagree with the derivation:")
        for f in report.findings:
            print(f"  {f}")
    else:
        print("published table agrees with the derivation everywhere")
    print(f"{report.agreement_count} coefficients agree")
    for note in report.notes:
        print(f"note: {note}")
    return 0


def _cmd_example(args) -> int:
    kind, matrix = gen_example(args.name)
    text = format_matrix_text(kind, matrix, comment=f"{args.name} ({kind})")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srd",
        description="Exact feasibility checks for strongly regular designs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-params", help="check the fifteen identities on a parameter file")
    p.add_argument("params", help="JSON parameter file ('-' for stdin)")
    p.add_argument("--eq15", choices=("corrected", "as-printed"), default="corrected",
                   help="variant of identity (15) to evaluate")
    p.add_argument("--route", choices=sorted(_ROUTE_CHOICES), default="all",
                   help="which verification routes to run")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_check_params)

    p = sub.add_parser("closure", help="coherent closure of a matrix file")
    p.add_argument("matrix", nargs="?", default="-", help="matrix file ('-'/omitted for stdin)")
    p.add_argument("--extract", action="store_true", help="extract design parameters")
    p.add_argument("--check", action="store_true", help="extract and run all checks")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("enumerate", help="scan feasible parameter tuples")
    p.add_argument("--max-n1", type=int, required=True)
    p.add_argument("--max-n2", type=int, required=True)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--table", action="store_true", help="fixed-width table (default)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("audit-table", help="audit the published multiplication table")
    p.add_argument("params", help="JSON parameter file ('-' for stdin)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_audit_table)

    p = sub.add_parser("example", help="emit a bundled example matrix")
    p.add_argument("name", choices=EXAMPLE_NAMES)
    p.add_argument("-o", "--output", help="write to file instead of stdout")
    p.set_defaults(func=_cmd_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (InfeasibleParameters, TypeMismatchError) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
