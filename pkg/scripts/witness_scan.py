#!/usr/bin/env python3
"""Scan the witness case tree over a range of n and summarize what it finds.

Tallies how often each branch fires, tracks the largest omega gap between
the two witness degrees, and flags any failing report (none are expected).

Usage:
    python scripts/witness_scan.py 8 100000
    python scripts/witness_scan.py 8 5000 --csv-out /tmp/branches.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from collections import Counter

from snpd.theorem_suite import case_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n_from", type=int)
    parser.add_argument("n_to", type=int)
    parser.add_argument("--csv-out", default=None, help="write one row per n to this path")
    args = parser.parse_args()
    if args.n_from < 8 or args.n_from > args.n_to:
        parser.error("need 8 <= n_from <= n_to")

    branch_counts: Counter[str] = Counter()
    gap_counts: Counter[int] = Counter()
    best_gap = -1
    best_n = None
    failures = []
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        report = case_report(n)
        low, high = report.witness
        gap = high.omega - low.omega
        branch_counts[report.branch.value] += 1
        gap_counts[gap] += 1
        if gap > best_gap:
            best_gap, best_n = gap, n
        if not report.passed:
            failures.append(n)
        if args.csv_out:
            rows.append([n, report.branch.value, low.omega, high.omega, gap])

    total = args.n_to - args.n_from + 1
    print(f"scanned n in [{args.n_from}, {args.n_to}] ({total} values)")
    print("branch frequencies:")
    for branch, count in sorted(branch_counts.items()):
        print(f"  {branch:<22}{count:>10}  ({100.0 * count / total:.2f}%)")
    print("omega-gap distribution:")
    for gap, count in sorted(gap_counts.items()):
        print(f"  gap {gap}: {count}")
    sample = case_report(best_n)
    low, high = sample.witness
    print(f"largest gap {best_gap} at n={best_n}: {low} < {high}")
    if failures:
        print(f"FAILURES at n = {failures}")
    else:
        print("no failing reports")

    if args.csv_out:
        with open(args.csv_out, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(["n", "branch", "low_omega", "high_omega", "gap"])
            writer.writerows(rows)
        print(f"wrote {len(rows)} rows to {args.csv_out}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
