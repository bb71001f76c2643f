#!/usr/bin/env python3
"""Sweep the LP oracle over many random marginal sets and summarize sharpness.

Usage: python3 scripts/verification_sweep.py [--count 100] [--n-min 2]
       [--n-max 5] [--seed 0]
"""

import argparse
import sys
import time

from halfrare import random_marginals, verify_bounds


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    span = args.n_max - args.n_min + 1
    start = time.perf_counter()
    failures = 0
    for k in range(args.count):
        n = args.n_min + k % span
        m = random_marginals(n, args.seed + k, half_rare=k % 2 == 0)
        rep = verify_bounds(m)
        if not rep.verdict:
            failures += 1
            bad = rep.first_mismatch()
            print(f"MISMATCH n={n} seed={args.seed + k} subset={bad.subset}: "
                  f"closed [{bad.closed_form_lower}, {bad.closed_form_upper}] "
                  f"vs LP [{bad.lp_min}, {bad.lp_max}]")
    elapsed = time.perf_counter() - start
    print(f"{args.count - failures}/{args.count} instances sharp "
          f"({elapsed:.1f}s, N in [{args.n_min}, {args.n_max}])")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
