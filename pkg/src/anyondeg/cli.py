"""Command-line interface: every operation as a subcommand.

Output on stdout is deterministic (no timestamps); diagnostics go to
stderr.  Exit codes: 0 success, 1 verification mismatch, 2 usage error.
Big integers are emitted as decimal strings in JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .genfunc import generating_function, system_det, verify_series
from .lattice import Vertex
from .pathcount import degeneracy, table
from .poly import poly_to_json, poly_to_text
from .reproduce import reproduce
from .spectral import lambda_perron, lambda_trig, smallest_positive_root, \
    spectral_report
from .syt import Shape3, audit_published_formula, brute_force_count, \
    hook_count, unrestricted_count

DEFAULT_CAP_N = 10_000
DEFAULT_CAP_K = 64


class UsageError(Exception):
    pass


def _parse_vertex(text: str) -> Vertex:
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"bad vertex {text!r}; expected I,J") from None
    return Vertex(i, j)


def _parse_shape(text: str) -> Shape3:
    try:
        r1, r2, r3 = (int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"bad shape {text!r}; expected R1,R2,R3") from None
    return Shape3(r1, r2, r3)


def _check_caps(args, k: int | None = None, n: int | None = None) -> None:
    if k is not None and k > args.cap_k:
        raise UsageError(f"k={k} exceeds the cap {args.cap_k} (--cap-k to raise)")
    if n is not None and n > args.cap_n:
        raise UsageError(f"n={n} exceeds the cap {args.cap_n} (--cap-n to raise)")


def _cmd_count(args) -> int:
    _check_caps(args, k=args.k, n=args.n)
    print(degeneracy(args.k, args.n, _parse_vertex(args.vertex)))
    return 0


def _cmd_table(args) -> int:
    _check_caps(args, k=args.max_k, n=args.max_n)
    grid = table(args.max_k, args.max_n, _parse_vertex(args.vertex),
                 all_columns=args.all_columns)
    if args.format == "csv":
        print("k\\n," + ",".join(str(n) for n in grid.columns))
        for k in sorted(grid.rows):
            print(f"{k}," + ",".join(str(c) for c in grid.rows[k]))
    else:
        print(json.dumps({
            "vertex": list(grid.vertex),
            "columns": list(grid.columns),
            "rows": [{"k": k, "counts": [str(c) for c in row]}
                     for k, row in sorted(grid.rows.items())],
        }))
    return 0


def _cmd_genfunc(args) -> int:
    _check_caps(args, k=args.k)
    vertices = [_parse_vertex(args.vertex)] if args.vertex else None
    from .genfunc import solve_system
    sol = solve_system(args.k)
    items = vertices or sorted(sol.solutions)
    out = []
    for v in items:
        if v not in sol.solutions:
            raise UsageError(f"vertex {tuple(v)} not in the level-{args.k} lattice")
        fn = sol.solutions[v]
        if args.format == "json":
            out.append({"vertex": [v.i, v.j], "num": poly_to_json(fn.num),
                        "den": poly_to_json(fn.den)})
        else:
            print(f"F[{v.i},{v.j}] = ({poly_to_text(fn.num)})"
                  f" / ({poly_to_text(fn.den)})")
    if args.format == "json":
        print(json.dumps({"k": args.k, "genfuncs": out}))
    return 0


def _cmd_det(args) -> int:
    _check_caps(args, k=args.k)
    print(poly_to_text(system_det(args.k)))
    return 0


def _cmd_verify(args) -> int:
    _check_caps(args, k=args.k, n=args.n)
    mismatches = verify_series(args.k, args.n)
    if mismatches:
        for v, n, series, dp in mismatches:
            print(f"MISMATCH vertex=({v.i},{v.j}) n={n} "
                  f"series={series} dp={dp}", file=sys.stderr)
        return 1
    print(f"ok: series coefficients match walk counts for k={args.k}, "
          f"n<={args.n}")
    return 0


def _cmd_qdim(args) -> int:
    _check_caps(args, k=args.k)
    if args.method == "trig":
        print(repr(lambda_trig(args.k, args.N)))
    elif args.method == "eig":
        print(repr(lambda_perron(args.k, tol=args.tol)))
    elif args.method == "root":
        print(repr(1.0 / smallest_positive_root(system_det(args.k),
                                                tol=args.tol)))
    else:
        print(json.dumps(spectral_report(args.k).to_dict()))
    return 0


def _cmd_syt(args) -> int:
    _check_caps(args, n=args.n)
    if args.paper_formula:
        print(json.dumps(audit_published_formula(n_max=args.n)))
        return 0
    if args.shape:
        shape = _parse_shape(args.shape)
        count = hook_count(shape)
    else:
        v = _parse_vertex(args.vertex)
        count = unrestricted_count(args.n, v)
        from .syt import shape_for_vertex
        shape = shape_for_vertex(args.n, v)
    if args.oracle and shape is not None:
        oracle = brute_force_count(shape)
        if oracle != count:
            print(f"MISMATCH hook={count} brute_force={oracle}",
                  file=sys.stderr)
            return 1
    print(count)
    return 0


def _cmd_reproduce(args) -> int:
    report = reproduce(only=args.only, fault=args.inject_fault)
    print(json.dumps(report, indent=2))
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anyondeg",
        description="Exact walk counts, generating functions and growth "
                    "rates for level-restricted 3-row tableaux.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_caps(p):
        p.add_argument("--cap-n", type=int, default=DEFAULT_CAP_N,
                       help="refuse n above this bound")
        p.add_argument("--cap-k", type=int, default=DEFAULT_CAP_K,
                       help="refuse k above this bound")

    p = sub.add_parser("count", help="number of n-step walks to a vertex")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vertex", default="0,0")
    add_caps(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("table", help="grid of walk counts")
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--vertex", default="0,0")
    p.add_argument("--all-columns", action="store_true",
                   help="include columns with 3 not dividing n")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_caps(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("genfunc", help="exact generating function(s)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--vertex", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    add_caps(p)
    p.set_defaults(func=_cmd_genfunc)

    p = sub.add_parser("det", help="system determinant polynomial")
    p.add_argument("--k", type=int, required=True)
    add_caps(p)
    p.set_defaults(func=_cmd_det)

    p = sub.add_parser("verify", help="cross-check series vs walk counts")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_caps(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("qdim", help="total quantum dimension")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--method", choices=("trig", "eig", "root", "all"),
                   default="all")
    p.add_argument("--tol", type=float, default=1e-6)
    add_caps(p)
    p.set_defaults(func=_cmd_qdim)

    p = sub.add_parser("syt", help="standard-tableau counts")
    p.add_argument("--n", type=int, default=0)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--vertex", default="0,0")
    group.add_argument("--shape", default=None)
    p.add_argument("--oracle", action="store_true",
                   help="cross-check against brute-force enumeration")
    p.add_argument("--paper-formula", action="store_true",
                   help="audit the printed closed form against hook lengths")
    add_caps(p)
    p.set_defaults(func=_cmd_syt)

    p = sub.add_parser("reproduce", help="run the full golden suite")
    p.add_argument("--only", default=None,
                   help="run a single item (e.g. table1, table2)")
    p.add_argument("--inject-fault", action="store_true",
                   help=argparse.SUPPRESS)  # test hook for the failure path
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
