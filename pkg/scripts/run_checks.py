#!/usr/bin/env python3
"""Run every enumeration-based check and print a summary table.

Usage: python scripts/run_checks.py [--max-n 7] [--maxine-max-n 6] [--out report.json]

Exits nonzero if any check reports a violation.
"""

import argparse
import json
import os
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hhresidue.harness import (  # noqa: E402
    verify_class_chain,
    verify_forb_equivalence,
    verify_lemma_c4_or_p5,
    verify_minimal_forbidden,
    verify_r_equals_alpha_on_strong_hh,
    verify_residue_bounds,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=7,
                        help="order bound for the sweeps (default 7)")
    parser.add_argument("--maxine-max-n", type=int, default=6,
                        help="order bound for full Maxine branching in the "
                             "residue-bounds check (default 6)")
    parser.add_argument("--out", default=None, help="write all reports to this JSON file")
    args = parser.parse_args()

    n = args.max_n
    runs = [
        ("forb-equivalence", lambda: verify_forb_equivalence(min(n, 8))),
        ("minimal-forbidden", lambda: verify_minimal_forbidden(min(n, 8))),
        ("residue-bounds", lambda: verify_residue_bounds(min(n, 7), args.maxine_max_n)),
        ("r-equals-alpha-S", lambda: verify_r_equals_alpha_on_strong_hh(min(n, 8))),
        ("lemma-c4-p5", lambda: verify_lemma_c4_or_p5(min(n, 7))),
        ("class-chain", lambda: verify_class_chain(min(n, 7))),
    ]

    reports = []
    failed = 0
    print(f"{'check':<20} {'n<=':>4} {'graphs':>7} {'violations':>10} {'time':>8}  result")
    for name, run in runs:
        started = time.monotonic()
        report = run()
        elapsed = time.monotonic() - started
        reports.append(report.to_dict())
        status = "PASS" if report.passed else "FAIL"
        if not report.passed:
            failed += 1
        print(f"{name:<20} {report.n_max:>4} {report.graphs_checked:>7} "
              f"{len(report.violations):>10} {elapsed:>7.1f}s  {status}")
        for v in report.violations[:5]:
            print(f"    {v.graph6}: {v.message}")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(reports, fh, indent=2)
        print(f"reports written to {args.out}")

    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
