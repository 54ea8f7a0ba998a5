"""Killability analysis of schedules via bipartite time graphs.

For a schedule S_1, ..., S_T the time graph at t pairs earlier times
u < t (left) with the members of S_t (right); (u, p) is an edge iff
p is in both S_u and S_t.  A maximum matching of size at least f in
that graph is exactly a plan for the adversary to have f members of
S_t already dead by time t, one killed per earlier round.  The first
such t, written t* here, pins down the minimal survival time, and a
truncated matching converts into an explicit kill sequence.

``PInstance`` packages the abstract form of a surviving prefix: a
left-ordered bipartite graph whose rows all have degree n and whose
time graphs all have matching number at most f - 1.  ``reduce_instance``
shrinks such an instance by one row while preserving membership,
trading rows against right vertices at the rate the survival function
prescribes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .game import Adversary, Schedule, _require_valid
from .matching import BipartiteGraph, deficiency_witness, max_matching, neighborhood


@dataclass(frozen=True)
class TimeGraph:
    """Bipartite graph of a schedule at time t: left vertices are the
    times 1..t-1 in order, right vertices re-index ``right_ids`` (the
    members of S_t, ascending)."""

    t: int
    graph: BipartiteGraph
    right_ids: tuple[int, ...]


@dataclass(frozen=True)
class PInstance:
    """Left-ordered bipartite graph with parameters (n, f): ``rows[i]``
    lists the right ids used by left vertex i + 1.  Right ids are an
    arbitrary ascending subset of the positive integers."""

    n: int
    f: int
    right_ids: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not (1 <= self.f < self.n):
            raise ValueError(f"need 1 <= f < n, got n={self.n} f={self.f}")
        if list(self.right_ids) != sorted(set(self.right_ids)):
            raise ValueError("right_ids must be strictly ascending")
        if self.right_ids and self.right_ids[0] < 1:
            raise ValueError("right ids must be positive")
        universe = set(self.right_ids)
        norm = []
        for i, row in enumerate(self.rows, start=1):
            if not set(row) <= universe:
                raise ValueError(f"row {i} uses ids outside right_ids")
            if len(set(row)) != len(row):
                raise ValueError(f"row {i} repeats an id")
            norm.append(tuple(sorted(row)))
        object.__setattr__(self, "rows", tuple(norm))

    @property
    def left_count(self) -> int:
        return len(self.rows)

    @property
    def right_count(self) -> int:
        return len(self.right_ids)


@dataclass(frozen=True)
class MembershipReport:
    """Outcome of the degree-and-matching membership test; ``violating_t``
    is the first left index that fails, 0 when the instance belongs."""

    member: bool
    violating_t: int
    reason: str


def time_graph(s: Schedule, t: int) -> TimeGraph:
    """Time graph of ``s`` at round t, 1 <= t <= len(s)."""
    _require_valid(s)
    if not (1 <= t <= len(s)):
        raise ValueError(f"t={t} outside schedule of length {len(s)}")
    right_ids = s.sets[t - 1]
    col = {p: j for j, p in enumerate(right_ids, start=1)}
    adj = tuple(
        tuple(col[p] for p in s.sets[u - 1] if p in col) for u in range(1, t)
    )
    g = BipartiteGraph(left_count=t - 1, right_count=len(right_ids), adj=adj)
    return TimeGraph(t=t, graph=g, right_ids=right_ids)


def _instance_time_graph(inst: PInstance, t: int) -> BipartiteGraph:
    row_t = inst.rows[t - 1]
    col = {p: j for j, p in enumerate(row_t, start=1)}
    adj = tuple(
        tuple(col[p] for p in inst.rows[u - 1] if p in col) for u in range(1, t)
    )
    return BipartiteGraph(left_count=t - 1, right_count=len(row_t), adj=adj)


def first_killable_time(s: Schedule) -> int:
    """Smallest t with matching number of the time graph at least f,
    or 0 when no round of ``s`` is killable."""
    _require_valid(s)
    f = s.params.f
    for t in range(1, len(s) + 1):
        if max_matching(time_graph(s, t).graph).size >= f:
            return t
    return 0


def minimal_survival_time(s: Schedule) -> int:
    """Worst-case survival of ``s`` over all adversaries: t* - 1 when a
    killable round t* exists, else the full length."""
    t_star = first_killable_time(s)
    return t_star - 1 if t_star else len(s)


def minimal_adversary(s: Schedule) -> Adversary:
    """A kill sequence attaining ``minimal_survival_time(s)``.

    At the first killable round t* a maximum matching of the time graph
    is truncated to its f earliest-time pairs (the matching number may
    exceed f); each pair (u, p) schedules the kill of p at round u, the
    remaining rounds default to the least member of their set, and the
    kill at t* is the least member of S_t* outside the truncated
    matching, which exists because f < n.
    """
    _require_valid(s)
    t_star = first_killable_time(s)
    kills = [min(st) for st in s.sets]
    if t_star == 0:
        return Adversary(kills=tuple(kills))
    tg = time_graph(s, t_star)
    pairs = sorted(max_matching(tg.graph).pairs)[: s.params.f]
    hit = set()
    for u, j in pairs:
        p = tg.right_ids[j - 1]
        kills[u - 1] = p
        hit.add(p)
    kills[t_star - 1] = min(p for p in tg.right_ids if p not in hit)
    return Adversary(kills=tuple(kills))


def schedule_instance(s: Schedule) -> PInstance:
    """The schedule itself as a left-ordered instance over pool {1..N}."""
    _require_valid(s)
    return PInstance(
        n=s.params.n,
        f=s.params.f,
        right_ids=tuple(range(1, s.params.N + 1)),
        rows=s.sets,
    )


def surviving_prefix_instance(s: Schedule) -> PInstance:
    """Instance formed by the rounds strictly before the first killable
    one (the whole schedule when none is killable)."""
    _require_valid(s)
    t_star = first_killable_time(s)
    cut = t_star - 1 if t_star else len(s)
    return PInstance(
        n=s.params.n,
        f=s.params.f,
        right_ids=tuple(range(1, s.params.N + 1)),
        rows=s.sets[:cut],
    )


def membership_in_P(inst: PInstance) -> MembershipReport:
    """Degree-and-matching membership test.

    An instance belongs iff every row has exactly n entries and every
    time graph has matching number at most f - 1.  The report names the
    first left index violating either condition.
    """
    for t in range(1, inst.left_count + 1):
        if len(inst.rows[t - 1]) != inst.n:
            return MembershipReport(
                member=False,
                violating_t=t,
                reason=f"row {t} has degree {len(inst.rows[t - 1])}, expected {inst.n}",
            )
        nu = max_matching(_instance_time_graph(inst, t)).size
        if nu >= inst.f:
            return MembershipReport(
                member=False,
                violating_t=t,
                reason=f"time graph at t={t} has matching number {nu} >= f={inst.f}",
            )
    return MembershipReport(member=True, violating_t=0, reason="")


# Instance JSON: {"n": 2, "f": 1, "right_ids": [1, 2, 3, 4], "rows": [[1, 2], [3, 4]]}
# Ids 1-based, right_ids and each row ascending.


def instance_to_dict(inst: PInstance) -> dict:
    return {
        "n": inst.n,
        "f": inst.f,
        "right_ids": list(inst.right_ids),
        "rows": [list(row) for row in inst.rows],
    }


def instance_from_dict(doc: dict) -> PInstance:
    try:
        return PInstance(
            n=int(doc["n"]),
            f=int(doc["f"]),
            right_ids=tuple(int(p) for p in doc["right_ids"]),
            rows=tuple(tuple(int(p) for p in row) for row in doc["rows"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed instance document: {exc}") from exc


def load_instance(path: Path) -> PInstance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_dict(json.load(fh))


def save_instance(inst: PInstance, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_dict(inst), fh)
        fh.write("\n")


def reduce_instance(inst: PInstance) -> PInstance:
    """One-row reduction preserving membership.

    Let L be the row count and B the last row.  A deficiency witness C
    of the time graph at L (over side B) satisfies
    |B - C| + |gamma(C)| = nu <= f - 1.  Dropping row L, every earlier
    row meeting C, and the right vertices of C yields an instance with
    L' = L - 1 - |gamma_{I_L}(C)| rows over |R| - |C| right ids that
    still belongs.  Raises on non-members and on empty instances.
    """
    report = membership_in_P(inst)
    if not report.member:
        raise ValueError(f"instance is not reducible: {report.reason}")
    if inst.left_count == 0:
        raise ValueError("cannot reduce an instance with no rows")

    big_l = inst.left_count
    last_row = inst.rows[big_l - 1]
    g = _instance_time_graph(inst, big_l)
    wit = deficiency_witness(g, side="right")
    c_ids = frozenset(last_row[j - 1] for j in wit.C)
    gamma = neighborhood(g, wit.C, side="right")

    keep_rows = tuple(
        inst.rows[u - 1]
        for u in range(1, big_l)
        if u not in gamma
    )
    keep_ids = tuple(p for p in inst.right_ids if p not in c_ids)
    reduced = PInstance(n=inst.n, f=inst.f, right_ids=keep_ids, rows=keep_rows)

    assert reduced.left_count == big_l - 1 - len(gamma)
    return reduced
