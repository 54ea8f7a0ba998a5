"""Scheduler-versus-adversary game model.

A schedule is a sequence of size-n operating sets over a pool of N
processors; the adversary kills one member of each set in turn.  The
system survives time t if no prefix of kills ever leaves more than f
dead processors inside the set in use.

All value types are immutable; operations are pure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .survival import h_value


@dataclass(frozen=True)
class GameParams:
    """Pool size N, operating-set size n, per-set fault tolerance f."""

    N: int
    n: int
    f: int

    def __post_init__(self) -> None:
        if not 1 <= self.f < self.n <= self.N:
            raise ValueError(
                f"parameters must satisfy 1 <= f < n <= N, "
                f"got N={self.N}, n={self.n}, f={self.f}"
            )


@dataclass(frozen=True)
class Schedule:
    """Ordered operating sets; processor ids are 1-based, sets kept sorted.

    Construction normalizes each set to a sorted tuple but does not
    validate; :func:`validate_schedule` reports the first violation so
    malformed input files can be diagnosed precisely.
    """

    params: GameParams
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "sets", tuple(tuple(sorted(s)) for s in self.sets)
        )

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class Adversary:
    """Kill sequence; kills[t-1] must be a member of the schedule's set t."""

    kills: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kills", tuple(self.kills))

    def __len__(self) -> int:
        return len(self.kills)


@dataclass(frozen=True)
class Violation:
    """First invariant breach found; index is the 1-based time (0 when the
    problem is schedule-wide, such as an empty schedule)."""

    index: int
    kind: str
    message: str


def validate_schedule(s: Schedule) -> Violation | None:
    """Return None if the schedule is well formed, else the first violation."""
    N, n = s.params.N, s.params.n
    if len(s.sets) == 0:
        return Violation(0, "empty", "empty schedule")
    if len(s.sets) > N:
        return Violation(0, "too-long", f"schedule length {len(s.sets)} exceeds pool size {N}")
    for t, row in enumerate(s.sets, start=1):
        if len(row) != n:
            return Violation(t, "wrong-cardinality", f"set of size {len(row)} at t={t}, expected {n}")
        if len(set(row)) != len(row):
            return Violation(t, "duplicate-id", f"duplicate id at t={t}")
        if row[0] < 1 or row[-1] > N:
            return Violation(t, "id-out-of-range", f"id out of range at t={t}")
    return None


def validate_adversary(s: Schedule, a: Adversary) -> Violation | None:
    """Return None if the adversary is legal for the schedule."""
    if len(a.kills) != len(s.sets):
        return Violation(
            0, "length-mismatch",
            f"adversary length {len(a.kills)} != schedule length {len(s.sets)}",
        )
    for t, (kill, row) in enumerate(zip(a.kills, s.sets), start=1):
        if kill not in row:
            return Violation(t, "kill-not-in-set", f"kill {kill} not in set at t={t}")
    return None


def _require_valid(s: Schedule) -> None:
    v = validate_schedule(s)
    if v is not None:
        raise ValueError(f"invalid schedule: {v.message}")


def _require_valid_pair(s: Schedule, a: Adversary) -> None:
    _require_valid(s)
    v = validate_adversary(s, a)
    if v is not None:
        raise ValueError(f"invalid adversary: {v.message}")


def survival_time(s: Schedule, a: Adversary) -> int:
    """Largest t such that every prefix u <= t leaves at most f distinct
    killed processors inside the set in use at u.

    Re-kills of dead processors are legal and harmless: the killed set is
    a set.  The kill at time u participates in the check at time u.
    """
    _require_valid_pair(s, a)
    f = s.params.f
    killed: set[int] = set()
    for u, (row, kill) in enumerate(zip(s.sets, a.kills), start=1):
        killed.add(kill)
        hit = sum(1 for p in row if p in killed)
        if hit > f:
            return u - 1
    return len(s.sets)


def trivial_schedule(params: GameParams) -> Schedule:
    """Batch schedule attaining the optimum survival time.

    The pool is split into floor(N/n) full batches used f periods each;
    the leftover p processors, topped up with the first n - p ids of the
    last full batch, are used (f + p - n)^+ periods.  That meaningful
    prefix has length h(n, f, N); it is padded to length N by repeating
    the last emitted set, which cannot lower the minimal survival time
    below the optimum.
    """
    N, n, f = params.N, params.n, params.f
    q, p = divmod(N, n)
    sets: list[tuple[int, ...]] = []
    for i in range(q):
        batch = tuple(range(i * n + 1, (i + 1) * n + 1))
        sets.extend([batch] * f)
    if p > 0:
        last_batch_start = (q - 1) * n + 1
        fill = tuple(range(last_batch_start, last_batch_start + (n - p)))
        tail = tuple(range(N - p + 1, N + 1))
        final = tuple(sorted(fill + tail))
        sets.extend([final] * max(f + p - n, 0))
    assert len(sets) == h_value(n, f, N)
    sets.extend([sets[-1]] * (N - len(sets)))
    return Schedule(params, tuple(sets))


# ---------------------------------------------------------------------------
# JSON wire formats.
#
# Schedule: {"N": 4, "n": 2, "f": 1, "sets": [[1, 2], [3, 4], [3, 4], [3, 4]]}
# Adversary: {"kills": [1, 3, 4, 4]}
# Ids are 1-based; sets are serialized in ascending id order.
# ---------------------------------------------------------------------------


def schedule_to_dict(s: Schedule) -> dict:
    return {
        "N": s.params.N,
        "n": s.params.n,
        "f": s.params.f,
        "sets": [list(row) for row in s.sets],
    }


def schedule_from_dict(d: dict) -> Schedule:
    try:
        params = GameParams(N=int(d["N"]), n=int(d["n"]), f=int(d["f"]))
        sets = tuple(tuple(int(p) for p in row) for row in d["sets"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed schedule document: {exc}") from exc
    return Schedule(params, sets)


def adversary_to_dict(a: Adversary) -> dict:
    return {"kills": list(a.kills)}


def adversary_from_dict(d: dict) -> Adversary:
    try:
        kills = tuple(int(k) for k in d["kills"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed adversary document: {exc}") from exc
    return Adversary(kills)


def load_schedule(path: str | Path) -> Schedule:
    return schedule_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def save_schedule(s: Schedule, path: str | Path) -> None:
    Path(path).write_text(json.dumps(schedule_to_dict(s)) + "\n", encoding="utf-8")


def load_adversary(path: str | Path) -> Adversary:
    return adversary_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def save_adversary(a: Adversary, path: str | Path) -> None:
    Path(path).write_text(json.dumps(adversary_to_dict(a)) + "\n", encoding="utf-8")
