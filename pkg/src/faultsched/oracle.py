"""Brute-force reference implementations.

Everything here recomputes a quantity the fast modules obtain through
matchings or closed forms, by direct enumeration and independently of
those modules wherever feasible.  ``brute_deficiency`` touches no
matching code at all; ``brute_adversary_min`` replays raw kill
sequences; ``brute_optimum`` searches schedule prefixes.  Budgets are
hard caps, not hints: exceeding one raises instead of degrading.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .game import GameParams, Schedule, _require_valid
from .matching import BipartiteGraph, DeficiencyWitness, max_matching


@dataclass(frozen=True)
class SearchBudget:
    """Enumeration cap; ``symmetry_pruning`` toggles prefix
    canonicalization in ``brute_optimum``."""

    max_states: int = 10**8
    symmetry_pruning: bool = True

    def __post_init__(self) -> None:
        if self.max_states <= 0:
            raise ValueError("max_states must be positive")


class BudgetExceededError(RuntimeError):
    """Search would (or did) enumerate more states than the budget allows."""


def brute_adversary_min(s: Schedule, budget: SearchBudget | None = None) -> int:
    """Exact minimum of ``survival_time`` over all kill sequences.

    Depth-first over choices s_t in S_t with two cutoffs: a branch stops
    as soon as its kill set overlaps the current set in more than f
    places, and a branch that has already survived past the best known
    minimum cannot improve it.
    """
    _require_valid(s)
    budget = budget or SearchBudget()
    n, f, length = s.params.n, s.params.f, len(s)
    if n**length > budget.max_states:
        raise BudgetExceededError(
            f"{n}^{length} kill sequences exceed max_states={budget.max_states}"
        )

    best = length

    def descend(u: int, killed: frozenset[int]) -> None:
        nonlocal best
        if u - 1 >= best:
            return
        if u > length:
            return
        current = set(s.sets[u - 1])
        for p in s.sets[u - 1]:
            nxt = killed | {p}
            if len(nxt & current) > f:
                best = u - 1
                return
            descend(u + 1, nxt)

    descend(1, frozenset())
    return best


def _canonical(prefix: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Relabel ids by order of first appearance, rows scanned ascending."""
    label: dict[int, int] = {}
    out = []
    for row in prefix:
        for p in row:
            if p not in label:
                label[p] = len(label) + 1
        out.append(tuple(sorted(label[p] for p in row)))
    return tuple(out)


def brute_optimum(params: GameParams, budget: SearchBudget | None = None) -> int:
    """Exact optimum worst-case survival by prefix search.

    A schedule survives t rounds iff its first t sets form a prefix
    whose every time graph has matching number below f, so the optimum
    equals the deepest such prefix (never deeper than N).  Extensions
    whose newest time graph reaches f are dead and pruned; with
    ``symmetry_pruning`` prefixes are deduplicated up to relabeling.
    """
    budget = budget or SearchBudget()
    candidates = [
        tuple(c) for c in itertools.combinations(range(1, params.N + 1), params.n)
    ]
    seen: set[tuple[tuple[int, ...], ...]] = set()
    states = 0
    best = 0

    def alive(prefix: tuple[tuple[int, ...], ...]) -> bool:
        last = prefix[-1]
        col = {p: j for j, p in enumerate(last, start=1)}
        adj = tuple(tuple(col[p] for p in row if p in col) for row in prefix[:-1])
        g = BipartiteGraph(left_count=len(prefix) - 1, right_count=len(last), adj=adj)
        return max_matching(g).size < params.f

    def descend(prefix: tuple[tuple[int, ...], ...]) -> None:
        nonlocal states, best
        best = max(best, len(prefix))
        if len(prefix) >= params.N:
            return
        for cand in candidates:
            child = prefix + (cand,)
            if budget.symmetry_pruning:
                child = _canonical(child)
                if child in seen:
                    continue
                seen.add(child)
            states += 1
            if states > budget.max_states:
                raise BudgetExceededError(
                    f"prefix search exceeded max_states={budget.max_states}"
                )
            if alive(child):
                descend(child)

    descend(())
    return best


def brute_deficiency(g: BipartiteGraph, side: str = "right") -> DeficiencyWitness:
    """Exact deficiency minimum by enumerating all subsets of side B.

    Matching-free on purpose: the value doubles as an independent check
    of the matching number.  Ties break toward the smallest subset,
    then lexicographically.
    """
    if side == "right":
        b_count = g.right_count
        rows = g.right_adj()
    elif side == "left":
        b_count = g.left_count
        rows = g.adj
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if b_count > 20:
        raise BudgetExceededError(f"side of size {b_count} exceeds the 2^20 subset cap")

    best_value = b_count + 1 + sum(len(r) for r in rows)
    best_c: tuple[int, ...] = ()
    for mask in range(1 << b_count):
        members = tuple(b for b in range(1, b_count + 1) if mask >> (b - 1) & 1)
        gamma: set[int] = set()
        for b in members:
            gamma.update(rows[b - 1])
        value = (b_count - len(members)) + len(gamma)
        key = (value, len(members), members)
        if key < (best_value, len(best_c), best_c):
            best_value, best_c = value, members
    return DeficiencyWitness(side=side, C=frozenset(best_c), value=best_value)


def random_schedule(params: GameParams, length: int, seed: int) -> Schedule:
    """Schedule of independent uniform size-n subsets, reproducible by seed."""
    if not (1 <= length <= params.N):
        raise ValueError(f"length must be in 1..{params.N}, got {length}")
    rng = random.Random(seed)
    pool = range(1, params.N + 1)
    sets = tuple(
        tuple(sorted(rng.sample(pool, params.n))) for _ in range(length)
    )
    return Schedule(params=params, sets=sets)
