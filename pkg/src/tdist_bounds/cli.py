"""Command-line front end.

    tdist-bounds dist   --p 4 [--q inf]
    tdist-bounds bound  --p 12
    tdist-bounds table  --p-min 1.7242 --p-max 30 --steps 100
    tdist-bounds verify --suite all

Exit codes: 0 success, 2 usage or domain error, 3 numeric failure,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from contextlib import contextmanager
from typing import Iterable, Optional, Sequence

from . import __version__
from .bounds import P_MIN_B, bound_B_at_root
from .distance import kolmogorov_distance
from .distributions import dof
from .errors import DomainError, NumericError
from .verifier import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3
EXIT_VERIFY = 4

DIST_FIELDS = ("p", "q", "crossing", "d_ko", "d_tv")
BOUND_FIELDS = ("p", "a", "x_tilde", "bound_B", "C_over_p", "d_ko", "rel_err_B", "rel_err_C")
TABLE_FIELDS = ("p", "d_ko", "bound_B", "C_over_p", "rel_err_B", "rel_err_C")


def format_number(v) -> str:
    """17 significant digits; '' for missing values, 'inf' for infinity."""
    if v is None:
        return ""
    if isinstance(v, float) and math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.17g}"


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, str):
        return json.dumps(v)
    if math.isinf(v):
        return json.dumps(format_number(v))
    return format_number(v)


def render(records: Sequence[dict], fields: Sequence[str], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for rec in records:
            writer.writerow([format_number(rec.get(f)) for f in fields])
        return buf.getvalue()
    # hand-rolled so numbers keep exactly 17 significant digits
    objs = [
        "{" + ", ".join(f"{json.dumps(f)}: {_json_value(rec.get(f))}" for f in fields) + "}"
        for rec in records
    ]
    return "[\n  " + ",\n  ".join(objs) + "\n]\n" if objs else "[]\n"


def dist_record(p, q) -> dict:
    r = kolmogorov_distance(p, q)
    return {"p": r.p, "q": r.q, "crossing": r.crossing, "d_ko": r.d_ko, "d_tv": r.d_tv}


def bound_record(p: float) -> dict:
    r = bound_B_at_root(p, with_exact=True)
    return {
        "p": r.p, "a": r.a, "x_tilde": r.x_tilde, "bound_B": r.bound_B,
        "C_over_p": r.bound_C_over_p, "d_ko": r.d_ko_exact,
        "rel_err_B": r.rel_err_B, "rel_err_C": r.rel_err_C,
    }


def table_record(p: float) -> dict:
    rec = bound_record(p)
    return {f: rec[f] for f in TABLE_FIELDS}


def table_grid(p_min: float, p_max: float, steps: int) -> list[float]:
    if steps < 2:
        raise DomainError(f"--steps must be at least 2, got {steps}")
    if not (P_MIN_B <= p_min < p_max) or math.isinf(p_max):
        raise DomainError(
            f"need 50/29 <= p-min < p-max < inf, got p-min={p_min!r}, p-max={p_max!r}"
        )
    h = (p_max - p_min) / (steps - 1)
    return [p_min + i * h for i in range(steps - 1)] + [p_max]


@contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"must be a positive finite number: {text!r}")
    return value


def _dof_arg(text: str) -> float:
    try:
        return dof(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdist-bounds",
        description="Distances between Student t and normal laws, and their upper bounds.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default: standard output)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("dist", parents=[common], help="exact d_KO and d_TV between Student(p) and Student(q)")
    p_dist.add_argument("--p", type=_positive_float, required=True)
    p_dist.add_argument("--q", type=_dof_arg, default=math.inf, help="finite q > p, or 'inf' (default)")

    p_bound = sub.add_parser("bound", parents=[common], help="B(1/p, xt) and C/p against the exact d_KO(p)")
    p_bound.add_argument("--p", type=_positive_float, required=True)

    p_table = sub.add_parser("table", parents=[common], help="grid of d_KO, B, C/p and relative errors")
    p_table.add_argument("--p-min", type=_positive_float, required=True)
    p_table.add_argument("--p-max", type=_positive_float, required=True)
    p_table.add_argument("--steps", type=int, required=True)

    p_verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p_verify.add_argument("--suite", choices=("all", *SUITES), default="all")
    return parser


def _run(args) -> int:
    if args.command == "dist":
        records, fields = [dist_record(args.p, args.q)], DIST_FIELDS
    elif args.command == "bound":
        records, fields = [bound_record(args.p)], BOUND_FIELDS
    elif args.command == "table":
        grid = table_grid(args.p_min, args.p_max, args.steps)
        records, fields = [table_record(p) for p in grid], TABLE_FIELDS
    else:
        return _run_verify(args)
    with _output(args.out) as fh:
        fh.write(render(records, fields, args.format))
    return EXIT_OK


def _run_verify(args) -> int:
    results = run_suite(args.suite)
    ok = all(r.passed for r in results)
    with _output(args.out) as fh:
        if args.format == "json":
            payload = [
                {"check": r.name, "passed": r.passed, "detail": r.detail, "witness": r.witness}
                for r in results
            ]
            fh.write(json.dumps({"suite": args.suite, "passed": ok, "checks": payload}, indent=2) + "\n")
        else:
            for r in results:
                fh.write(r.line() + "\n")
            fh.write(f"suite {args.suite}: {'all checks passed' if ok else 'FAILED'}\n")
    if not ok:
        for r in results:
            if not r.passed:
                print(f"verification failed: {r.line()}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def main(argv: Optional[Iterable[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    try:
        return _run(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
