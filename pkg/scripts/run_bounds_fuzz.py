#!/usr/bin/env python3
"""Run the inequality fuzz campaign over random convex bodies and pairs."""

import argparse
import sys

from chirality2d.bounds_lab import run_campaign, write_report_csv


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bodies", type=int, default=500)
    parser.add_argument("--pairs", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default="bounds_report.csv")
    args = parser.parse_args()

    reports = run_campaign(n_bodies=args.bodies, n_pairs=args.pairs,
                           seed=args.seed)
    write_report_csv(args.out, reports)
    failures = [r for r in reports if not r.all_passed]
    for rep in failures:
        for c in rep.checks:
            if not c.passed:
                print(f"FAIL {rep.body_id} {c.name}: lhs={c.lhs:.12g} "
                      f"rhs={c.rhs:.12g} margin={c.margin:.3g}")
    print(f"{len(reports)} reports, {len(failures)} failures -> {args.out}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
