"""Command-line interface.

Subcommands:

* solve --m M                 solve one index
* solve-range --from A --to B solve a range of indices
* classify --from A --to B    group indices by splitting field
* conductor --m M             conductor of the splitting field
* cf --m M --terms K          continued fraction of the small negative root
* verify --<check>            recompute reference data and diff

Output is deterministic: identical flags produce identical bytes.  Formats
are text (default), json (one document, "schema": 1), and csv.  Exit status
is 0 on success, 1 on a verification mismatch, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .arith import factor
from .cf import cf_expand
from .isofield import classify_range, conductor
from .solver import SolutionSet, solve_family, solve_range
from .verify import CHECKS, run_checks

SCHEMA = 1

CSV_HEADER = ["m", "N", "-N-3", "2m+3", "lambda", "m^2+3m+9", "xy(x+y)", "solutions"]


def _pairs_text(members) -> str:
    return " ".join(f"({x},{y})" for x, y in members)


def _set_json(res: SolutionSet) -> dict:
    return {
        "m": res.m,
        "t": res.t,
        "t_factored": str(factor(res.t)),
        "orbits": [
            {"lambda": row.lam, "solutions": [list(p) for p in row.members], "N": row.n_value}
            for row in res.rows
        ],
        "certificate": res.plan.strategy,
    }


def _set_csv_rows(res: SolutionSet) -> list[list[str]]:
    rows = []
    t_str = str(factor(res.t))
    for row in res.rows:
        x, y = row.members[0]
        s = x * y * (x + y)
        rows.append([
            str(res.m), str(row.n_value), str(-row.n_value - 3), str(2 * res.m + 3),
            str(row.lam), t_str, str(s), _pairs_text(row.members),
        ])
    return rows


def _set_text(res: SolutionSet) -> list[str]:
    head = (f"m={res.m}  m^2+3m+9={res.t}={factor(res.t)}  "
            f"certificate={res.plan.strategy}")
    lines = [head]
    for row in res.rows:
        lines.append(f"  lambda={row.lam}  N={row.n_value}  "
                     f"orbit: {_pairs_text(row.members)}")
    if not res.rows:
        lines.append("  no nontrivial solutions")
    return lines


def _render_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(text: str, args: argparse.Namespace) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    elif not args.quiet:
        sys.stdout.write(text)


def _cmd_solve(args) -> int:
    results = [solve_family(args.m)]
    return _emit_solutions(results, args)


def _cmd_solve_range(args) -> int:
    results = solve_range(args.start, args.stop)
    return _emit_solutions(results, args)


def _emit_solutions(results: list[SolutionSet], args) -> int:
    if args.format == "json":
        doc = {"schema": SCHEMA, "results": [_set_json(r) for r in results]}
        _emit(_render_json(doc), args)
    elif args.format == "csv":
        rows = [row for r in results for row in _set_csv_rows(r)]
        _emit(_render_csv(CSV_HEADER, rows), args)
    else:
        lines = [line for r in results for line in _set_text(r)]
        _emit("\n".join(lines) + "\n", args)
    return 0


def _cmd_classify(args) -> int:
    classes = classify_range(args.start, args.stop)
    pairs = sorted(
        (a, b) for cls in classes for i, a in enumerate(cls) for b in cls[i + 1:]
    )
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "from": args.start,
            "to": args.stop,
            "classes": [list(c) for c in classes],
            "pairs": [list(p) for p in pairs],
        }
        _emit(_render_json(doc), args)
    elif args.format == "csv":
        _emit(_render_csv(["m", "n"], [[str(a), str(b)] for a, b in pairs]), args)
    else:
        lines = [f"class: {' '.join(str(m) for m in cls)}"
                 for cls in classes if len(cls) > 1]
        if not lines:
            lines.append("no coincidences")
        lines.append(f"pairs: {len(pairs)}")
        _emit("\n".join(lines) + "\n", args)
    return 0


def _cmd_conductor(args) -> int:
    c = conductor(args.m)
    if args.format == "json":
        doc = {
            "schema": SCHEMA,
            "m": args.m,
            "conductor": c.value,
            "three_part": c.three_part,
            "odd_primes": list(c.odd_primes),
        }
        _emit(_render_json(doc), args)
    elif args.format == "csv":
        _emit(_render_csv(["m", "conductor"], [[str(args.m), str(c.value)]]), args)
    else:
        _emit(f"{c.value}\n", args)
    return 0


def _cmd_cf(args) -> int:
    expansion = cf_expand(args.m, args.terms)
    q = expansion.quotients
    if args.format == "json":
        doc = {"schema": SCHEMA, "m": args.m, "terms": len(q), "quotients": list(q)}
        _emit(_render_json(doc), args)
    elif args.format == "csv":
        rows = [[str(i), str(a)] for i, a in enumerate(q)]
        _emit(_render_csv(["index", "quotient"], rows), args)
    else:
        _emit(f"{q[0]};{','.join(str(a) for a in q[1:])}\n", args)
    return 0


def _cmd_verify(args) -> int:
    names = [name for name in CHECKS if getattr(args, name.replace("-", "_"))]
    ok, lines = run_checks(names)
    if args.format == "json":
        doc = {"schema": SCHEMA, "ok": ok, "report": lines}
        _emit(_render_json(doc), args)
    else:
        _emit("\n".join(lines) + "\n", args)
    return 0 if ok else 1


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--output", metavar="PATH", default=None,
                   help="write the report to PATH instead of standard output")
    p.add_argument("--quiet", action="store_true",
                   help="suppress standard output (exit status still reports)")


def _add_range(p: argparse.ArgumentParser) -> None:
    p.add_argument("--from", dest="start", type=int, required=True, metavar="M")
    p.add_argument("--to", dest="stop", type=int, required=True, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplest-cubic",
        description="Exact solver and field classifier for a one-parameter "
                    "family of cubic Thue equations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve one index")
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("solve-range", help="solve a range of indices")
    _add_range(p)
    _add_common(p)
    p.set_defaults(func=_cmd_solve_range)

    p = sub.add_parser("classify", help="group indices by splitting field")
    _add_range(p)
    _add_common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("conductor", help="conductor of the splitting field")
    p.add_argument("--m", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_conductor)

    p = sub.add_parser("cf", help="continued fraction of the root in (-1/2, 0)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--terms", type=int, default=40)
    _add_common(p)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("verify", help="recompute reference data and diff")
    group = p.add_argument_group("checks (at least one required)")
    for name in CHECKS:
        group.add_argument(f"--{name}", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if getattr(args, "m", None) is not None and args.command in ("solve", "cf"):
        if args.m < -1:
            parser.error(f"--m must be at least -1, got {args.m}")
    if getattr(args, "start", None) is not None:
        if not -1 <= args.start <= args.stop:
            parser.error(f"range must satisfy -1 <= from <= to, "
                         f"got {args.start}..{args.stop}")
    if args.command == "cf" and args.terms < 1:
        parser.error("--terms must be positive")
    if args.command == "verify":
        if not any(getattr(args, n.replace("-", "_")) for n in CHECKS):
            parser.error("choose at least one check: "
                         + " ".join(f"--{n}" for n in CHECKS))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
