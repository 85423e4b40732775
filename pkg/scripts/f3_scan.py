#!/usr/bin/env python3
"""Sweep the ternary lower-bound scan over a range of dimensions.

For each n the scan enumerates every positive-dimensional subspace V of
F_3^n and records the exact uniformity sup of the leading-one set on V,
checking it never drops below the 1/12 squared-magnitude floor.  The
table printed here shows how close the minimum gets to the floor as n
grows.

Example:

    python3 scripts/f3_scan.py --max-n 4
"""

from __future__ import annotations

import argparse
import time

from subuniform import scan_leading_one_set


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-n", type=int, default=1)
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument(
        "--long-run",
        action="store_true",
        help="allow n = 5 (every subspace of F_3^5; takes a while)",
    )
    args = parser.parse_args()

    print(f"{'n':>2} {'subspaces':>10} {'min sup^2':>12} {'~sup':>8}  verdict")
    for n in range(args.min_n, args.max_n + 1):
        start = time.monotonic()
        report = scan_leading_one_set(n, long_run=args.long_run)
        elapsed = time.monotonic() - start
        min_sq = report.min_sup_sq()
        sup = float(min_sq) ** 0.5
        verdict = "all passed" if report.all_passed else "FLOOR VIOLATED"
        print(
            f"{n:>2} {report.total_subspaces:>10} {str(min_sq):>12}"
            f" {sup:>8.5f}  {verdict} ({elapsed:.2f}s)"
        )
        for record in report.records:
            if not record.passed:
                basis = ",".join(row.digits() for row in record.space.basis)
                print(f"     failing subspace: span{{{basis}}}")
    print("floor: sup^2 >= 1/12, i.e. sup >= 0.28868")


if __name__ == "__main__":
    main()
