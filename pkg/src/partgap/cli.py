"""Command-line front end.

Subcommands build partition tables, print the published table layouts
(optionally checking them against the frozen reference values), scan
for near-power and perfect-power behaviour, and fit log-polynomial
models.  Exit status: 0 success / verification passed, 1 verification
failed (reference mismatch, uncovered index, counterexample found),
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from typing import Sequence

from . import fitting, reference, repulsion, witnesses
from .partitions import (
    PartitionTable,
    build_table,
    dump_values,
    hardy_ramanujan_estimate,
    load_table,
    save_table,
)
from .roots import delta_k

CACHE_ENV = "PARTGAP_CACHE_DIR"
_CACHE_PATTERN = re.compile(r"^ptable_(\d+)\.txt$")


def _cache_dir(args) -> str | None:
    if getattr(args, "cache", None):
        return args.cache
    return os.environ.get(CACHE_ENV) or None


def _acquire_table(args, n_max: int) -> PartitionTable:
    """Build p(0..n_max), reusing a cached table when one suffices."""
    if n_max < 1:
        raise ValueError("--n-max must be >= 1, got %d" % n_max)
    directory = _cache_dir(args)
    if directory is None:
        return build_table(n_max)
    candidates = []
    if os.path.isdir(directory):
        for name in os.listdir(directory):
            m = _CACHE_PATTERN.match(name)
            if m and int(m.group(1)) >= n_max:
                candidates.append(int(m.group(1)))
    if candidates:
        path = os.path.join(directory, "ptable_%d.txt" % min(candidates))
        return load_table(path)
    table = build_table(n_max)
    os.makedirs(directory, exist_ok=True)
    save_table(table, os.path.join(directory, "ptable_%d.txt" % n_max))
    return table


def _parse_exponents(text: str) -> tuple[int, ...]:
    """Exponent list syntax: 'LO..HI' or comma-separated integers."""
    text = text.strip()
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError("empty exponent range %r" % text)
        return tuple(range(lo, hi + 1))
    try:
        return tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ValueError("bad exponent list %r (use LO..HI or a,b,c)" % text)


def _parse_k_list(text: str) -> tuple[int, ...]:
    try:
        ks = tuple(int(s) for s in text.split(","))
    except ValueError:
        raise ValueError("bad k list %r (use a comma-separated list)" % text)
    if any(k < 2 for k in ks):
        raise ValueError("every k must be >= 2")
    return ks


def _parse_threshold(text: str) -> int:
    """Exact threshold: plain decimal or 10^i."""
    m = re.fullmatch(r"10\^(\d+)", text.strip())
    if m:
        return 10 ** int(m.group(1))
    try:
        return int(text)
    except ValueError:
        raise ValueError("bad threshold %r (use an integer or 10^i)" % text)


def _emit_csv(header: Sequence[str], rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _emit_table(args, header: list[str], rows: list[list], json_obj) -> None:
    if args.format == "csv":
        _emit_csv(header, rows)
    elif args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        widths = [
            max(len(str(h)), *(len(str(r[i])) for r in rows))
            for i, h in enumerate(header)
        ]
        print("  ".join(str(h).rjust(w) for h, w in zip(header, widths)))
        for r in rows:
            print("  ".join(str(c).rjust(w) for c, w in zip(r, widths)))


def _check_outcome(name: str, mismatches: list[str], cells: int) -> int:
    if mismatches:
        for line in mismatches:
            print("MISMATCH %s" % line)
        print("%s: FAILED (%d mismatches)" % (name, len(mismatches)))
        return 1
    print("%s: OK (%d cells)" % (name, cells))
    return 0


# ---------------------------------------------------------------- pn

def cmd_pn(args) -> int:
    table = _acquire_table(args, max(args.n, 1))
    print(table.values[args.n])
    if args.estimate:
        if args.n < 1:
            raise ValueError("--estimate needs n >= 1")
        est = hardy_ramanujan_estimate(args.n)
        ratio = est / table.values[args.n]
        print("estimate=%.6g ratio=%.6g" % (est, ratio))
    if args.export:
        with open(args.export, "w", encoding="ascii") as fh:
            dump_values(table, fh)
    return 0


# ------------------------------------------------------------- delta

def cmd_delta(args) -> int:
    table = _acquire_table(args, max(args.n, 1))
    record = delta_k(table, args.n, args.k)
    if args.verbose:
        print(
            "n=%d k=%d nearest_base=%d distance=%d"
            % (record.n, record.k, record.nearest_base, record.distance)
        )
    else:
        print(record.distance)
    return 0


# ------------------------------------------------------------ tables

def cmd_table1(args) -> int:
    table = _acquire_table(args, 50)
    rows = repulsion.distance_samples(table)
    if args.check:
        mism = []
        for row, (n, expect) in zip(rows, reference.TABLE1):
            if row.n != n or row.distances != expect:
                mism.append("n=%d got %r want %r" % (row.n, row.distances, expect))
        return _check_outcome("table1", mism, 15)
    header = ["n", "p", "k2", "k3", "k4"]
    out = [[r.n, r.p, *r.distances] for r in rows]
    _emit_table(args, header, out, {"rows": out, "columns": header})
    return 0


def _threshold_table(args, d_values, expect, name, cells) -> int:
    table = _acquire_table(args, args.n_max)
    rows = repulsion.threshold_rows(
        table, d_values, reference.REFERENCE_K_VALUES, args.n_max
    )
    if args.check:
        mism = []
        for (d, got), (d2, want) in zip(rows, expect):
            if d != d2 or got != want:
                mism.append("d=%d got %r want %r" % (d, got, want))
        return _check_outcome(name, mism, cells)
    header = ["d", *["k%d" % k for k in reference.REFERENCE_K_VALUES]]
    out = [[d, *cells_] for d, cells_ in rows]
    _emit_table(
        args,
        header,
        out,
        {
            "n_max": args.n_max,
            "k_values": list(reference.REFERENCE_K_VALUES),
            "rows": [[d, list(c)] for d, c in rows],
        },
    )
    return 0


def cmd_table2(args) -> int:
    d_values = tuple(d for d, _ in reference.TABLE2)
    return _threshold_table(args, d_values, reference.TABLE2, "table2", 144)


def cmd_table3(args) -> int:
    d_values = tuple(d for d, _ in reference.TABLE3)
    return _threshold_table(args, d_values, reference.TABLE3, "table3", 63)


def cmd_table4(args) -> int:
    table = _acquire_table(args, args.n_max)
    intervals = repulsion.n_d_intervals(table, args.d_max, args.n_max)
    if args.check:
        want = [
            (lo, min(hi, args.d_max), v)
            for lo, hi, v in reference.TABLE4_INTERVALS
            if lo <= args.d_max
        ]
        mism = []
        if intervals != want:
            for got, exp in zip(intervals, want):
                if got != exp:
                    mism.append("got %r want %r" % (got, exp))
            if len(intervals) != len(want):
                mism.append(
                    "interval count %d vs %d" % (len(intervals), len(want))
                )
        return _check_outcome("table4", mism, len(want))
    header = ["d_lo", "d_hi", "n_d"]
    out = [list(t) for t in intervals]
    _emit_table(
        args, header, out, {"n_max": args.n_max, "intervals": out}
    )
    return 0


# ------------------------------------------------------- figure-data

def cmd_figure_data(args) -> int:
    k_values = _parse_k_list(args.k)
    exponents = _parse_exponents(args.d_exp)
    table = _acquire_table(args, args.n_max)
    grid = repulsion.mk_grid(table, k_values, exponents, args.n_max)
    if args.check:
        if exponents != tuple(range(0, 71)):
            raise ValueError("--check requires the default exponents 0..70")
        mism = []
        checked = 0
        for k in k_values:
            want = reference.FIGURE_SERIES.get(k)
            if want is None:
                continue
            checked += len(want)
            got = grid.series(k)
            for i, (a, b) in enumerate(zip(got, want)):
                if a != b:
                    mism.append("k=%d i=%d got %d want %d" % (k, i, a, b))
        if checked == 0:
            raise ValueError("no reference series for k in %r" % (k_values,))
        return _check_outcome("figure-data", mism, checked)
    if args.format == "csv":
        header = ["i", *["k%d" % k for k in grid.k_values]]
        rows = [
            [i, *(grid.series(k)[idx] for k in grid.k_values)]
            for idx, i in enumerate(grid.d_exponents)
        ]
        _emit_csv(header, rows)
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "n_max": grid.n_max,
                    "d_exponents": list(grid.d_exponents),
                    "series": {str(k): list(grid.series(k)) for k in grid.k_values},
                },
                indent=2,
            )
        )
    else:
        for k in grid.k_values:
            pairs = " ".join("(%d,%d)" % (i, m) for i, m in grid.coordinates(k))
            print("k=%d: %s" % (k, pairs))
    return 0


# ----------------------------------------------------------- s-check

def cmd_s_check(args) -> int:
    if (args.n is None) == (args.range is None):
        raise ValueError("give exactly one of N or --range LO HI")
    if args.n is not None:
        lo = hi = args.n
    else:
        lo, hi = args.range
    table = _acquire_table(args, max(hi, 1))
    statuses = witnesses.coverage_scan(table, lo, hi)
    uncovered = 0
    for st in statuses:
        if st.witness is not None:
            w = st.witness
            print(
                "n=%d covered: p(n) = %d^2 + %d^%d" % (st.n, w.x, w.prime, w.exponent)
            )
        else:
            uncovered += 1
            print("n=%d uncovered" % st.n)
    print("covered %d/%d" % (len(statuses) - uncovered, len(statuses)))
    return 1 if uncovered else 0


# ------------------------------------------------------------ missed

def cmd_missed(args) -> int:
    for v in witnesses.missed_values(args.bound):
        print(v)
    return 0


# --------------------------------------------------------- verify-bs

def cmd_verify_bs(args) -> int:
    if args.bs_list:
        tuples = witnesses.load_exceptional_list(args.bs_list)
    else:
        tuples = witnesses.bundled_exceptional_list()
    table = _acquire_table(args, args.n_max) if args.n_max else None
    report = witnesses.check_exceptional_powers(tuples, table)
    for c in report.checks:
        t = c.candidate
        verdict = (
            "IS p(%d)" % c.lookup.index
            if c.lookup.index is not None
            else "not a partition number"
        )
        print(
            "%d^%d + x^2 = %d^%d -> %d: %s"
            % (t.prime, t.exponent, t.base, t.power, c.value, verdict)
        )
    if report.all_clear:
        print("all clear: %d powers checked against n_max=%d" % (len(report.checks), report.n_max))
        return 0
    print("FAILED: some listed power is a partition number")
    return 1


# ---------------------------------------------------------- sun-scan

def cmd_sun_scan(args) -> int:
    table = _acquire_table(args, args.n_max)
    hits = witnesses.perfect_power_scan(table, 2, args.n_max)
    for n, w in hits:
        print("n=%d: p(n) = %d^%d" % (n, w.base, w.exponent))
    if hits:
        print("FOUND %d perfect powers" % len(hits))
        return 1
    print("no perfect powers among p(2..%d)" % args.n_max)
    return 0


# --------------------------------------------------------------- fit

def cmd_fit(args) -> int:
    exponents = _parse_exponents(args.d_exp)
    table = _acquire_table(args, args.n_max)
    grid = repulsion.mk_grid(table, (args.k,), exponents, args.n_max)
    model = fitting.fit_grid_series(grid, args.k, args.degree)
    evals = [
        (d, fitting.evaluate(model, d))
        for d in (_parse_threshold(s) for s in args.eval or [])
    ]
    if args.format == "json":
        obj = fitting.model_as_dict(model)
        obj["k"] = args.k
        obj["n_max"] = args.n_max
        if evals:
            obj["evaluations"] = [[d, v] for d, v in evals]
        print(json.dumps(obj, indent=2))
    else:
        print(
            "k=%d degree=%d window_exponent=%d n_max=%d"
            % (args.k, model.degree, model.window_exponent, args.n_max)
        )
        for j, c in enumerate(model.coefficients):
            print("c%d=%.6g" % (j, c))
        for d, v in evals:
            print("f(%d)=%.6g" % (d, v))
    return 0


# ------------------------------------------------------------ parser

def _add_cache(p) -> None:
    p.add_argument(
        "--cache",
        metavar="DIR",
        help="directory for table cache files (env %s)" % CACHE_ENV,
    )


def _add_format(p, choices=("csv", "json", "text"), default="csv") -> None:
    p.add_argument("--format", choices=list(choices), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partgap",
        description="Exact partition numbers and their distances to perfect powers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pn", help="print p(n)")
    p.add_argument("n", type=int)
    p.add_argument("--estimate", action="store_true", help="also print the asymptotic estimate and ratio")
    p.add_argument("--export", metavar="FILE", help="write p(0..n) to FILE, one value per line")
    _add_cache(p)
    p.set_defaults(func=cmd_pn)

    p = sub.add_parser("delta", help="distance from p(n) to the nearest k-th power")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--verbose", action="store_true", help="print the full distance record")
    _add_cache(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("table1", help="sample distances for n = 10..50, k = 2..4")
    p.add_argument("--check", action="store_true")
    _add_format(p)
    _add_cache(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="largest n within d of a k-th power, d = 0 and powers of ten")
    p.add_argument("--n-max", type=int, default=repulsion.DEFAULT_N_MAX)
    p.add_argument("--check", action="store_true")
    _add_format(p)
    _add_cache(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("table3", help="largest n within d of a k-th power, d = 0..6")
    p.add_argument("--n-max", type=int, default=repulsion.DEFAULT_N_MAX)
    p.add_argument("--check", action="store_true")
    _add_format(p)
    _add_cache(p)
    p.set_defaults(func=cmd_table3)

    p = sub.add_parser("table4", help="stabilization indices n_d as constant runs over d")
    p.add_argument("--n-max", type=int, default=repulsion.DEFAULT_N_MAX)
    p.add_argument("--d-max", type=int, default=2534)
    p.add_argument("--check", action="store_true")
    _add_format(p)
    _add_cache(p)
    p.set_defaults(func=cmd_table4)

    p = sub.add_parser("figure-data", help="per-k series at d = 10^i, plot-ready")
    p.add_argument("--n-max", type=int, default=repulsion.DEFAULT_N_MAX)
    p.add_argument("--k", default="2,3,4,5,6,7,8,50", help="comma-separated k list")
    p.add_argument("--d-exp", default="0..70", help="exponent range LO..HI or list a,b,c")
    p.add_argument("--check", action="store_true")
    _add_format(p, default="text")
    _add_cache(p)
    p.set_defaults(func=cmd_figure_data)

    p = sub.add_parser("s-check", help="square-plus-prime-power decompositions of p(n)")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--range", type=int, nargs=2, metavar=("LO", "HI"))
    _add_cache(p)
    p.set_defaults(func=cmd_s_check)

    p = sub.add_parser("missed", help="values with no square-plus-prime-power form")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_missed)

    p = sub.add_parser("verify-bs", help="check the exceptional powers against the partition sequence")
    p.add_argument("--bs-list", metavar="PATH", help="tuple file (default: bundled list)")
    p.add_argument("--n-max", type=int, help="table size (default: sized automatically)")
    _add_cache(p)
    p.set_defaults(func=cmd_verify_bs)

    p = sub.add_parser("sun-scan", help="scan p(n) for perfect powers")
    p.add_argument("--n-max", type=int, default=10000)
    _add_cache(p)
    p.set_defaults(func=cmd_sun_scan)

    p = sub.add_parser("fit", help="least-squares log-polynomial model of a series")
    p.add_argument("--k", type=int, default=50)
    p.add_argument("--degree", type=int, default=5)
    p.add_argument("--n-max", type=int, default=repulsion.DEFAULT_N_MAX)
    p.add_argument("--d-exp", default="0..70", help="exponent range LO..HI or list a,b,c")
    p.add_argument("--eval", action="append", metavar="D", help="evaluate the model at D (integer or 10^i); repeatable")
    _add_format(p, choices=("json", "text"), default="text")
    _add_cache(p)
    p.set_defaults(func=cmd_fit)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
