"""Command-line front end.

Exit codes: 0 when everything checked out, 1 when a mathematical check failed
(including route disagreement), 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import appell
from .appell import AppellSpec, parse_spec
from .exactpoly import Poly, parse_rat
from .partition import Partition, partitions_of
from .plancherel import report
from .suites import SUITES, run_suites
from .symfunc import augmented_schur_p_integral
from .wapoly import ROUTES, wap

FORMATS = ("plain", "json", "latex")
FORMAT_ENV = "WRONSKIAN_APPELL_FORMAT"
DEFAULT_MAX_SIZE = 12
WARN_MAX_SIZE = 16

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition_label(lam: Partition) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def _render_poly(p: Poly, fmt: str) -> str:
    return p.to_latex() if fmt == "latex" else p.to_str()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _fault(spec: AppellSpec, text: str | None) -> AppellSpec:
    if not text:
        return spec
    k, sep, delta = text.partition("=")
    if not sep or not k.strip().isdigit() or int(k) < 1:
        raise UsageError(f"--corrupt-cumulant expects K=DELTA with K >= 1, got {text!r}")
    return appell.with_cumulant_fault(spec, int(k), parse_rat(delta))


def cmd_compute(args) -> int:
    spec = _fault(parse_spec(args.seq), args.corrupt_cumulant)
    lam = Partition.parse(args.partition)
    p = wap(spec, lam, args.route)
    explain = augmented_schur_p_integral(lam) if args.explain else None
    if args.format == "json":
        out = {"spec": spec.name, "partition": list(lam), "route": args.route, "poly": p.to_json()}
        if explain is not None:
            out["explain"] = [{"partition": list(mu), "coefficient": str(d)} for mu, d in explain.items()]
        print(_dump(out))
    else:
        print(_render_poly(p, args.format))
        if explain is not None:
            print(f"# H(lambda) s_lambda in the power-sum basis for {_partition_label(lam)}:")
            for mu, d in explain.items():
                print(f"#   p{_partition_label(mu)}: {d}")
    return EXIT_OK


def cmd_table(args) -> int:
    spec = _fault(parse_spec(args.seq), args.corrupt_cumulant)
    rows = []
    for n in range(args.max_size + 1):
        for lam in partitions_of(n):
            rows.append((lam, wap(spec, lam, args.route)))
    if args.format == "json":
        print(_dump({
            "spec": spec.name,
            "route": args.route,
            "rows": [{"partition": list(lam), "poly": p.to_json()} for lam, p in rows],
        }))
    elif args.format == "latex":
        print(r"\begin{tabular}{ll}")
        print(r"$\lambda$ & $A_\lambda$ \\ \hline")
        for lam, p in rows:
            label = r"\emptyset" if not lam else f"({','.join(map(str, lam))})"
            print(f"${label}$ & ${p.to_latex()}$ \\\\")
        print(r"\end{tabular}")
    else:
        for lam, p in rows:
            print(f"{_partition_label(lam)}\t{p.to_str()}")
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = _fault(parse_spec(args.seq), args.corrupt_cumulant)
    names = list(args.identity)
    if "all" in names and len(names) > 1:
        raise UsageError("'all' cannot be combined with other identities")
    results = run_suites(names, spec, args.max_size)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(_dump({
            "spec": spec.name,
            "max_size": args.max_size,
            "status": "pass" if ok else "fail",
            "suites": [r.to_json() for r in results],
        }))
    else:
        for r in results:
            line = f"{r.status.upper():4}  {r.identity:18} checked={r.checked} failed={len(r.witnesses)}"
            if r.skipped:
                line += f"  ({r.skipped})"
            print(line)
            for w in r.witnesses[: args.max_witnesses]:
                print(f"      witness: {json.dumps(w)}")
        total = sum(r.checked for r in results)
        failed = sum(len(r.witnesses) for r in results)
        print(f"{'PASS' if ok else 'FAIL'}: {spec.name}, max size {args.max_size}, "
              f"{total} checks, {failed} failures")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_stats(args) -> int:
    spec = _fault(parse_spec(args.seq), args.corrupt_cumulant)
    reports = [report(spec, n, args.route) for n in range(args.max_size + 1)]
    if args.format == "json":
        print(_dump({"spec": spec.name, "reports": [r.to_json() for r in reports]}))
        return EXIT_OK
    for r in reports:
        bound = {True: "ok", False: "VIOLATED", None: "n/a"}[r.variance_degree_bound_ok]
        fields = [
            f"n={r.n}",
            f"mean={_render_poly(r.mean, args.format)}",
            f"second_moment={_render_poly(r.second_moment, args.format)}",
            f"variance={_render_poly(r.variance, args.format)}",
            f"variance_bound={bound}",
        ]
        print("\t".join(fields))
    return EXIT_OK


def _max_size(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("max size must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "plain")
    if default_format not in FORMATS:
        default_format = "plain"

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seq", default="hermite",
                        help="Appell sequence: monomial, hermite, yablonskii, exp-rt:a,r, "
                             "laguerre:a, jacobi:a,b, cumulants:c1,..., moments:1,z1,... "
                             "(default: hermite)")
    common.add_argument("--format", choices=FORMATS, default=default_format,
                        help=f"output format (default from ${FORMAT_ENV}, else plain)")
    common.add_argument("--route", choices=ROUTES + ("cross_checked",), default="cross_checked")
    common.add_argument("--corrupt-cumulant", metavar="K=DELTA",
                        help="shift c_K by DELTA without touching the moments (fault injection)")

    sized = argparse.ArgumentParser(add_help=False)
    sized.add_argument("--max-size", type=_max_size, default=DEFAULT_MAX_SIZE,
                       help=f"largest partition size (default {DEFAULT_MAX_SIZE})")

    parser = argparse.ArgumentParser(
        prog="wronskian-appell",
        description="Exact Wronskian Appell polynomials and identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="compute one A_lambda")
    p.add_argument("--partition", required=True, help='e.g. "3,2,1"; "" or "0" for the empty one')
    p.add_argument("--explain", action="store_true",
                   help="also print H(lambda) s_lambda in the power-sum basis")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", parents=[common, sized], help="all A_lambda up to a size")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common, sized], help="run identity suites")
    p.add_argument("identity", nargs="+", choices=list(SUITES) + ["all"])
    p.add_argument("--max-witnesses", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", parents=[common, sized], help="Plancherel statistics")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "max_size", 0) > WARN_MAX_SIZE:
        print(f"warning: max size {args.max_size} > {WARN_MAX_SIZE}; this may take a long time",
              file=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
