#!/usr/bin/env python3
"""Tabulate deterministic versus randomized online game values.

Covers every (N, n, f) the exact solver accepts up to --max-N and
prints both values side by side, the randomized support size, and the
gain from mixing.  Values are exact rationals.
"""

import argparse
import sys
from math import comb

from faultsched import BudgetExceededError, GameParams, online_game_value


def parse_args() -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-N", type=int, default=4)
    return ap.parse_args()


def main() -> int:
    args = parse_args()
    print("N n f deterministic randomized support gain")
    for big_n in range(2, args.max_N + 1):
        for n in range(2, big_n + 1):
            if comb(big_n, n) > 6:
                continue
            for f in range(1, n):
                params = GameParams(N=big_n, n=n, f=f)
                det = online_game_value(params, "deterministic")
                try:
                    rnd = online_game_value(params, "randomized")
                except BudgetExceededError as exc:
                    print(f"{big_n} {n} {f} {det.value} skipped ({exc})")
                    continue
                gain = rnd.value - det.value
                print(
                    f"{big_n} {n} {f} {det.value} {rnd.value}"
                    f" {len(rnd.strategy_support)} {gain}"
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
