"""Command-line surface: factor, codes, census.

factor renders a FactorizationReport as text or JSON; codes counts or
enumerates Hermitian LCD / self-dual cyclic codes (each printed code is
re-verified first); census sweeps (q, n[, t]) grids into CSV or JSONL
with a fixed header and canonical row order. Exit codes: 2 bad flags or
values, 3 precondition violations, 4 internal re-verification failures,
5 unwritable output.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import chainring, fpoly, hlcd, scrim
from .errors import InternalCheckFailed, LiftMismatch, ScrimkitError

CENSUS_HEADER = [
    "q", "n", "t", "omega", "lambda", "lcd_count", "selfdual_count",
    "agree", "ms",
]


def _report_payload(report: scrim.FactorizationReport) -> dict:
    return {
        "q": report.q,
        "n": report.n,
        "omega": [fpoly.render(f) for f in report.omega],
        "lambda": [
            [fpoly.render(g), fpoly.render(gd)] for g, gd in report.lambda_pairs
        ],
        "counts": report.counts_by_method,
    }


def cmd_factor(args) -> int:
    report = scrim.factor_xn_minus_1(args.q, args.n)
    payload = _report_payload(report)
    if args.format == "json":
        print(json.dumps(payload))
        return 0
    print(f"x^{report.n} - 1 over GF({report.q}^2)")
    print(f"omega ({len(report.omega)}):")
    for s in payload["omega"]:
        print(f"  {s}")
    print(f"lambda ({len(report.lambda_pairs)}):")
    for g, gd in payload["lambda"]:
        print(f"  {g}  |  {gd}")
    c = report.counts_by_method
    print(
        "counts: explicit omega={} lambda={}; direct omega={} lambda={}; "
        "recursive omega={}; agree={}".format(
            c["explicit"]["omega"],
            c["explicit"]["lambda"],
            c["direct"]["omega"],
            c["direct"]["lambda"],
            c["recursive"]["omega"],
            str(report.counts_agree()).lower(),
        )
    )
    return 0


def cmd_codes(args) -> int:
    if args.mode == "selfdual":
        if args.t is None or args.t < 2:
            print("error: --mode selfdual requires --t >= 2", file=sys.stderr)
            return 3
        count = chainring.count_self_dual(args.q, args.n, args.t)
        print(count)
        if args.enumerate and count:
            for code in chainring.enumerate_self_dual(args.q, args.n, args.t):
                if not chainring.is_hermitian_self_dual(code):
                    print("error: enumerated code failed re-verification",
                          file=sys.stderr)
                    return 4
                print(fpoly.render(chainring.generator_poly(code)))
        return 0
    count = hlcd.count_hermitian_lcd(args.q, args.n)
    print(count)
    if args.enumerate:
        for code in hlcd.enumerate_hermitian_lcd(args.q, args.n):
            if not hlcd.is_hermitian_lcd(code):
                print("error: enumerated code failed re-verification",
                      file=sys.stderr)
                return 4
            print(fpoly.render(code.generator))
    return 0


def _census_row(item) -> dict:
    q, n, t = item
    start = time.monotonic()
    report = scrim.factor_xn_minus_1(q, n)
    lcd_count = hlcd.count_hermitian_lcd(q, n)
    selfdual_count = None
    if t is not None:
        selfdual_count = chainring.count_self_dual(q, n, t)
    ms = int((time.monotonic() - start) * 1000)
    c = report.counts_by_method["explicit"]
    return {
        "q": q,
        "n": n,
        "t": t,
        "omega": c["omega"],
        "lambda": c["lambda"],
        "lcd_count": lcd_count,
        "selfdual_count": selfdual_count,
        "agree": report.counts_agree(),
        "ms": ms,
    }


def cmd_census(args) -> int:
    q_list = sorted({int(s) for s in args.q_list.split(",") if s})
    t_list = [None]
    if args.t_list:
        t_list = sorted({int(s) for s in args.t_list.split(",") if s})
    work = []
    for q in q_list:
        for n in range(1, args.n_max + 1):
            if math.gcd(q, n) != 1:
                print(f"note: skipping q={q} n={n} (not coprime)",
                      file=sys.stderr)
                continue
            for t in t_list:
                work.append((q, n, t))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_census_row, work))
    else:
        rows = [_census_row(item) for item in work]

    try:
        sink = open(args.out_file, "w", newline="") if args.out_file else None
    except OSError as e:
        print(f"error: cannot write {args.out_file}: {e}", file=sys.stderr)
        return 5
    stream = sink if sink else sys.stdout
    try:
        if args.out == "csv":
            writer = csv.writer(stream)
            writer.writerow(CENSUS_HEADER)
            for r in rows:
                writer.writerow([
                    r["q"], r["n"],
                    "" if r["t"] is None else r["t"],
                    r["omega"], r["lambda"], r["lcd_count"],
                    "" if r["selfdual_count"] is None else r["selfdual_count"],
                    str(r["agree"]).lower(), r["ms"],
                ])
        else:
            for r in rows:
                stream.write(json.dumps(r) + "\n")
    finally:
        if sink:
            sink.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scrimkit",
        description="SCRIM factor toolkit: factor x^n - 1 over GF(q^2), "
        "count and enumerate Hermitian LCD and self-dual cyclic codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^n - 1 over GF(q^2)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("codes", help="count/enumerate cyclic codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--mode", choices=("lcd", "selfdual"), required=True)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(func=cmd_codes)

    p = sub.add_parser("census", help="sweep a (q, n[, t]) grid")
    p.add_argument("--q-list", required=True, help="comma-separated q values")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--t-list", default=None, help="comma-separated t values")
    p.add_argument("--out", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--out-file", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InternalCheckFailed, LiftMismatch) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return 4
    except ScrimkitError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
