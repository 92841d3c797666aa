"""Command-line surface: table export, verification drivers, reports.

Subcommands: table, verify {lemmas|bound|reduction}, ratio, oracle,
plot-data.  Exit codes: 0 all good, 1 failed check or bad data, 2 usage
error.  Data goes to files or stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from . import bounds, lemmas, oracle
from .constants import DESK_SCALE_MAX_N, Q_FLOOR, QSCAN_DEFAULT_HI
from .core import CUTOFF_MODES, LandauTable, build_table
from .errors import LandauError
from .primes import sieve

CSV_HEADER = "n,g_factorization,ell,log_g,largest_prime,ratio"


def _fact_str(pairs) -> str:
    if not pairs:
        return "1"
    return "*".join(f"{p}^{a}" if a > 1 else str(p) for p, a in pairs)


def _table_rows(table: LandauTable):
    """Rendered CSV rows, ascending n.

    log_g carries 12 decimal places, ratio 10; both are fixed-width so
    identical builds render byte-identical files.
    """
    log_g = table.log_g_array
    pmax = table.largest_prime_array
    ellv = table.ell_array
    for n, pairs in table.iter_pairs():
        p = int(pmax[n])
        if n >= 2 and p:
            r = f"{p / math.sqrt(n * math.log(n)):.10f}"
        else:
            r = ""
        yield (
            f"{n},{_fact_str(pairs)},{int(ellv[n])},{log_g[n]:.12f},"
            f"{p if p else ''},{r}"
        )


def _open_out(path: str):
    if path == "-":
        return sys.stdout, False
    return open(path, "w", newline=""), True


def cmd_table(args) -> int:
    table = build_table(args.max_n, args.cutoff, long_run=args.long_run)
    try:
        out, owned = _open_out(args.out)
    except OSError as exc:
        print(f"error: cannot open {args.out}: {exc}", file=sys.stderr)
        return 1
    try:
        out.write(CSV_HEADER + "\n")
        for row in _table_rows(table):
            out.write(row + "\n")
    except OSError as exc:
        print(f"error: write failed: {exc}", file=sys.stderr)
        return 1
    finally:
        if owned:
            out.close()
    return 0


def cmd_ratio(args) -> int:
    if args.max_n < 215:
        print("error: ratio headline needs --max-n >= 215", file=sys.stderr)
        return 2
    table = build_table(args.max_n, long_run=args.long_run)
    pmax = table.largest_prime_array
    scored = []
    for n in range(5, table.max_n + 1):
        p = int(pmax[n])
        scored.append((p / math.sqrt(n * math.log(n)), n, p))
    scored.sort(reverse=True)
    print("rank  n        P(g(n))  ratio")
    for i, (r, n, p) in enumerate(scored[: args.top], start=1):
        print(f"{i:<5} {n:<8} {p:<8} {r:.10f}")
    best_r, best_n, best_p = scored[0]
    print(f"argmax: n={best_n} P={best_p} ratio={best_r:.10f}")
    bound = float(bounds.FINAL_BOUND)
    ok = best_r <= bound
    print(f"all ratios <= {bound}: {'yes' if ok else 'NO'}")
    return 0 if ok else 1


def cmd_oracle(args) -> int:
    if args.max_n < 1 or args.max_n > oracle.SUBSET_LIMIT:
        print(
            f"error: --max-n must be in [1, {oracle.SUBSET_LIMIT}]",
            file=sys.stderr,
        )
        return 2
    mismatches = 0
    print("n     g_partitions  g_subsets")
    for n in range(1, args.max_n + 1):
        subs = oracle.g_by_prime_power_subsets(n)
        if n <= oracle.PARTITION_LIMIT:
            parts = oracle.g_by_partitions(n)
            mark = "" if parts == subs else "  MISMATCH"
            if parts != subs:
                mismatches += 1
            print(f"{n:<5} {parts:<13} {subs}{mark}")
        else:
            print(f"{n:<5} {'-':<13} {subs}")
    return 0 if mismatches == 0 else 1


def cmd_verify(args) -> int:
    if args.which == "reduction":
        ok = oracle.verify_reduction(args.max_n or 30)
        print(f"reduction check to n={args.max_n or 30}: "
              f"{'pass' if ok else 'FAIL'}")
        return 0 if ok else 1

    if args.which == "lemmas":
        n_hi = args.max_n or 10_000
        table = build_table(n_hi, long_run=args.long_run)
        q_max = int(table.largest_prime_array.max())
        ps = sieve(max(q_max, 2))
        violations = lemmas.scan_lemmas(table, ps, n_lo=5, n_hi=n_hi)
        for line in violations:
            print(line)
        print(f"lemma scan 5..{n_hi}: "
              f"{'pass' if not violations else f'{len(violations)} violations'}")
        return 0 if not violations else 1

    # bound chain
    q_hi = args.qmax or QSCAN_DEFAULT_HI
    ps = sieve(q_hi)
    report = bounds.build_bound_report(
        ps, Q_FLOOR, q_hi, long_run=args.long_run
    )
    print(report.text())
    if not report.residual_holds_from_floor and report.residual_ok:
        print(
            f"note: residual bound first holds at q="
            f"{report.residual_min_passing_q}, above the q-floor {Q_FLOOR}",
            file=sys.stderr,
        )
    if args.out:
        try:
            with open(args.out, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["link_name", "range", "pass", "min_passing_q",
                            "details"])
                w.writerows(report.rows())
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
    return 0 if report.all_ok else 1


def cmd_plot_data(args) -> int:
    col = {"ratio": 5, "log_g": 3, "P": 4}[args.series]
    try:
        fh = open(args.inp, newline="")
    except OSError as exc:
        print(f"error: cannot open {args.inp}: {exc}", file=sys.stderr)
        return 1
    lines = []
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_HEADER.split(","):
            print("error: line 1: bad header", file=sys.stderr)
            return 1
        for lineno, row in enumerate(reader, start=2):
            if len(row) != 6 or not row[0].isdigit():
                print(f"error: line {lineno}: malformed row", file=sys.stderr)
                return 1
            val = row[col]
            if not val:
                continue
            try:
                float(val)
            except ValueError:
                print(f"error: line {lineno}: bad value {val!r}",
                      file=sys.stderr)
                return 1
            lines.append(f"{row[0]}\t{val}")
    try:
        out, owned = _open_out(args.out)
        try:
            for line in lines:
                out.write(line + "\n")
        finally:
            if owned:
                out.close()
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="landau",
        description="Exact maximal permutation orders and bound verification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="write the g(n) table as CSV")
    t.add_argument("--max-n", type=int, default=DESK_SCALE_MAX_N)
    t.add_argument("--cutoff", choices=CUTOFF_MODES, default="safe")
    t.add_argument("--out", default="-")
    t.add_argument("--long-run", action="store_true")
    t.set_defaults(fn=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("which", choices=("lemmas", "bound", "reduction"))
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--qmax", type=int, default=None)
    v.add_argument("--out", default=None)
    v.add_argument("--long-run", action="store_true")
    v.set_defaults(fn=cmd_verify)

    r = sub.add_parser("ratio", help="largest ratios P(g(n))/sqrt(n ln n)")
    r.add_argument("--max-n", type=int, default=DESK_SCALE_MAX_N)
    r.add_argument("--top", type=int, default=10)
    r.add_argument("--long-run", action="store_true")
    r.set_defaults(fn=cmd_ratio)

    o = sub.add_parser("oracle", help="brute-force values for small n")
    o.add_argument("--max-n", type=int, default=30)
    o.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("plot-data", help="extract a series from a table CSV")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", default="-")
    p.add_argument("--series", choices=("ratio", "log_g", "P"),
                   default="ratio")
    p.set_defaults(fn=cmd_plot_data)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except LandauError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
