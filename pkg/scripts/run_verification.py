#!/usr/bin/env python3
"""Run every desk-scale verification suite and print a summary.

Usage:
    python scripts/run_verification.py [--order-max N] [--t-max T] [--n-max N]
                                       [--trials K] [--seed S]

Exit status is nonzero when any suite reports a violation.
"""

from __future__ import annotations

import argparse
import sys

from dissoc import (
    verify_asymptotic_bounds,
    verify_family_values,
    verify_path_cycle_bounds,
    verify_recurrences,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order-max", type=int, default=6)
    parser.add_argument("--t-max", type=int, default=3)
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    reports = [
        verify_path_cycle_bounds(n_max=args.n_max),
        verify_family_values(max_t=args.t_max),
        verify_recurrences(pivot_trials=args.trials, seed=args.seed),
        verify_asymptotic_bounds(order_max=args.order_max, seed=args.seed),
    ]

    failures = 0
    for report in reports:
        status = "pass" if report.passed else "FAIL"
        print(f"{report.suite:<14} {status}  {report.checks:>6} checks  "
              f"{len(report.violations):>3} violations  {report.elapsed_ms:>9.0f} ms")
        for v in report.violations:
            failures += 1
            print(f"    {v.check}: {v.detail}")

    bounds = reports[-1]
    print("\nExtremal maxima found by the exhaustive scans:")
    print(f"{'n':>3} {'class':<14} {'max phi':>8} {'max phi_prime':>14} {'classes':>8}")
    records = bounds.details["records"]
    for order in sorted({r["order"] for r in records}):
        for label in ("all", "triangle-free"):
            phi_rec = next(r for r in records
                           if r["order"] == order and r["filter"] == label
                           and r["quantity"] == "phi")
            pm_rec = next(r for r in records
                          if r["order"] == order and r["filter"] == label
                          and r["quantity"] == "phi_max")
            print(f"{order:>3} {label:<14} {phi_rec['max_value']:>8} "
                  f"{pm_rec['max_value']:>14} {len(phi_rec['extremal_graph6']):>8}")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
