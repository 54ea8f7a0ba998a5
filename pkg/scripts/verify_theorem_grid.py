#!/usr/bin/env python3
"""Grid check: exhaustive optimum versus the closed-form survival value.

Writes one CSV row per (N, n, f) with the formula value, the searched
optimum, elapsed seconds, and whether they agree.  Rows whose search
would exceed the state budget are reported as skipped.
"""

import argparse
import csv
import sys
import time

from faultsched import (
    BudgetExceededError,
    GameParams,
    SearchBudget,
    brute_optimum,
    h_value,
)


def parse_args() -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-N", type=int, default=5)
    ap.add_argument("--max-states", type=int, default=10**8)
    ap.add_argument("--no-symmetry", action="store_true")
    return ap.parse_args()


def main() -> int:
    args = parse_args()
    budget = SearchBudget(
        max_states=args.max_states, symmetry_pruning=not args.no_symmetry
    )
    writer = csv.writer(sys.stdout)
    writer.writerow(["N", "n", "f", "h", "brute_T_opt", "seconds", "match"])
    mismatched = False
    for big_n in range(1, args.max_N + 1):
        for n in range(1, big_n + 1):
            for f in range(1, n):
                params = GameParams(N=big_n, n=n, f=f)
                expected = h_value(n, f, big_n)
                start = time.perf_counter()
                try:
                    found = brute_optimum(params, budget)
                except BudgetExceededError:
                    writer.writerow([big_n, n, f, expected, "", "", "skipped"])
                    continue
                elapsed = time.perf_counter() - start
                match = found == expected
                mismatched = mismatched or not match
                writer.writerow(
                    [big_n, n, f, expected, found, f"{elapsed:.3f}", str(match).lower()]
                )
    return 2 if mismatched else 0


if __name__ == "__main__":
    sys.exit(main())
