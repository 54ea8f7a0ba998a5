"""Bipartite graphs, maximum matching, and deficiency witnesses.

The matching size nu of a bipartite graph equals, by Ore's deficiency
formula, the minimum over subsets C of one side B of |B - C| + |gamma(C)|,
where gamma is the neighborhood map.  ``deficiency_witness`` returns a
minimizing C constructively from a maximum matching (the Koenig-style
alternating-reachability argument), so every matching computed here comes
with a same-size certificate of optimality.

Vertices are 1-based on both sides.  Graphs are immutable; all functions
are pure and deterministic (searches visit vertices in ascending order).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

_INF = -1


@dataclass(frozen=True)
class BipartiteGraph:
    """Left-ordered bipartite graph; ``adj[i - 1]`` lists the sorted right
    neighbors of left vertex i.  Left indices carry the total order of
    their labels."""

    left_count: int
    right_count: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.left_count < 0 or self.right_count < 0:
            raise ValueError("vertex counts must be nonnegative")
        if len(self.adj) != self.left_count:
            raise ValueError(
                f"adjacency has {len(self.adj)} rows for {self.left_count} left vertices"
            )
        for i, nbrs in enumerate(self.adj, start=1):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbors of left vertex {i} must be sorted and duplicate-free")
            if nbrs and (nbrs[0] < 1 or nbrs[-1] > self.right_count):
                raise ValueError(f"edge endpoint out of range at left vertex {i}")

    @classmethod
    def from_edges(
        cls, left_count: int, right_count: int, edges: Iterable[tuple[int, int]]
    ) -> BipartiteGraph:
        rows: list[set[int]] = [set() for _ in range(left_count)]
        seen: set[tuple[int, int]] = set()
        for l, r in edges:
            if not (1 <= l <= left_count and 1 <= r <= right_count):
                raise ValueError(f"edge ({l}, {r}) out of range")
            if (l, r) in seen:
                raise ValueError(f"duplicate edge ({l}, {r})")
            seen.add((l, r))
            rows[l - 1].add(r)
        return cls(left_count, right_count, tuple(tuple(sorted(row)) for row in rows))

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((l, r) for l, nbrs in enumerate(self.adj, start=1) for r in nbrs)

    def right_adj(self) -> tuple[tuple[int, ...], ...]:
        rows: list[list[int]] = [[] for _ in range(self.right_count)]
        for l, nbrs in enumerate(self.adj, start=1):
            for r in nbrs:
                rows[r - 1].append(l)
        return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class Matching:
    """Vertex-disjoint edge set of a host graph; ``size`` is nu."""

    pairs: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        lefts = [l for l, _ in self.pairs]
        rights = [r for _, r in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("matching pairs must be vertex-disjoint")

    @property
    def size(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class DeficiencyWitness:
    """Subset C of the designated side B attaining the deficiency minimum
    |B - C| + |gamma(C)|; the attained value equals the matching size."""

    side: str
    C: frozenset[int]
    value: int


def neighborhood(g: BipartiteGraph, c: Iterable[int], side: str = "left") -> frozenset[int]:
    """Union of adjacencies of the vertex set ``c`` on the stated side."""
    members = set(c)
    if side == "left":
        bound = g.left_count
        if any(v < 1 or v > bound for v in members):
            raise ValueError("vertex index out of range")
        return frozenset(r for v in members for r in g.adj[v - 1])
    if side == "right":
        bound = g.right_count
        if any(v < 1 or v > bound for v in members):
            raise ValueError("vertex index out of range")
        return frozenset(
            l for l, nbrs in enumerate(g.adj, start=1) if any(r in members for r in nbrs)
        )
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def max_matching(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching by Hopcroft-Karp.

    Phases of BFS layering plus DFS along shortest augmenting paths;
    vertices are visited in ascending index order so the returned pair
    set is deterministic.
    """
    pair_l: list[int] = [0] * (g.left_count + 1)  # 0 = free
    pair_r: list[int] = [0] * (g.right_count + 1)
    dist: list[int] = [0] * (g.left_count + 1)

    def bfs() -> bool:
        q: deque[int] = deque()
        for l in range(1, g.left_count + 1):
            if pair_l[l] == 0:
                dist[l] = 0
                q.append(l)
            else:
                dist[l] = _INF
        found = _INF
        while q:
            l = q.popleft()
            if found != _INF and dist[l] >= found:
                continue
            for r in g.adj[l - 1]:
                l2 = pair_r[r]
                if l2 == 0:
                    if found == _INF:
                        found = dist[l] + 1
                elif dist[l2] == _INF:
                    dist[l2] = dist[l] + 1
                    q.append(l2)
        return found != _INF

    def dfs(l: int) -> bool:
        for r in g.adj[l - 1]:
            l2 = pair_r[r]
            if l2 == 0 or (dist[l2] == dist[l] + 1 and dfs(l2)):
                pair_l[l] = r
                pair_r[r] = l
                return True
        dist[l] = _INF
        return False

    while bfs():
        for l in range(1, g.left_count + 1):
            if pair_l[l] == 0:
                dfs(l)
    pairs = frozenset(
        (l, pair_l[l]) for l in range(1, g.left_count + 1) if pair_l[l] != 0
    )
    return Matching(pairs)


def deficiency_witness(g: BipartiteGraph, side: str = "right") -> DeficiencyWitness:
    """Minimizing subset C of side B for |B - C| + |gamma(C)|.

    Construction: from a maximum matching, grow alternating-path
    reachability from the unmatched vertices of B (non-matching edges
    away from B, matching edges back); C is the reached part of B.  The
    attained value then equals the matching size, certifying both.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    m = max_matching(g)

    if side == "right":
        b_count = g.right_count
        b_adj = g.right_adj()
        partner_of_b = {r: l for l, r in m.pairs}
        partner_of_other = {l: r for l, r in m.pairs}
    else:
        b_count = g.left_count
        b_adj = g.adj
        partner_of_b = {l: r for l, r in m.pairs}
        partner_of_other = {r: l for l, r in m.pairs}

    reached_b = {b for b in range(1, b_count + 1) if b not in partner_of_b}
    reached_other: set[int] = set()
    q = deque(sorted(reached_b))
    while q:
        b = q.popleft()
        for a in b_adj[b - 1]:
            if partner_of_b.get(b) == a or a in reached_other:
                continue
            reached_other.add(a)
            b2 = partner_of_other.get(a)
            if b2 is not None and b2 not in reached_b:
                reached_b.add(b2)
                q.append(b2)

    c = frozenset(reached_b)
    gamma = neighborhood(g, c, side=side) if c else frozenset()
    value = (b_count - len(c)) + len(gamma)
    return DeficiencyWitness(side=side, C=c, value=value)
