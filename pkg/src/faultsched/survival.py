"""Closed-form worst-case survival arithmetic.

A system runs n processors drawn from a pool, tolerates up to f
simultaneous faults per operating set, and is reconfigured after each
fault report.  The survival function below gives the exact number of
fault reports the best schedule on a pool of k processors outlives.

Everything here is pure integer arithmetic on immutable values; no
floating point, safe for concurrent callers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .game import GameParams


@dataclass(frozen=True)
class HArgs:
    """Arguments of the survival function.

    n is the operating-set size, f the per-set fault tolerance, k the
    pool size.  f = 0 is admitted as a degenerate extension (needed when
    a two-pool split leaves a pool with no slack); the game model itself
    requires f >= 1.
    """

    n: int
    f: int
    k: int

    def __post_init__(self) -> None:
        if self.n <= 0:
            raise ValueError(f"set size n must be positive, got n={self.n}")
        if not 0 <= self.f < self.n:
            raise ValueError(
                f"fault tolerance must satisfy 0 <= f < n, got f={self.f}, n={self.n}"
            )
        if self.k < 0:
            raise ValueError(f"pool size k must be nonnegative, got k={self.k}")


def h_eval(args: HArgs) -> int:
    """Survival budget of a size-k pool under (n, f) operation.

    Computed as floor(k/n)*f + (k mod n + f - n)^+ where (x)^+ is the
    positive part.  Each full batch of n processors is worth f reports;
    the leftover k mod n processors add value only once they can be
    topped up into a full set with enough slack.
    """
    q, r = divmod(args.k, args.n)
    return q * args.f + max(r + args.f - args.n, 0)


def h_value(n: int, f: int, k: int) -> int:
    """Convenience form of :func:`h_eval` on raw integers (validates)."""
    return h_eval(HArgs(n, f, k))


def optimum_survival_time(params: GameParams) -> int:
    """Best worst-case survival time over all schedules for the game."""
    return h_value(params.n, params.f, params.N)


def apriori_upper_bound(params: GameParams) -> int:
    """Counting bound N - n + f + 1: once only n - f - 1 processors are
    left alive no set can meet its quorum of n - f non-faulty members."""
    return params.N - params.n + params.f + 1
