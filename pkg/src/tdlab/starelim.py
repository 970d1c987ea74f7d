"""Star-elimination lower bounds for regular graphs.

A vertex labeled ``j`` with ``delta`` neighbors needs ``delta`` distinct
neighbor labels avoiding ``j``, ``2j``, ``j/2`` and both members of any pair
``j - d, j + d``. If the labels still in play cannot supply that many, ``j``
is vulnerable and can be discarded. Discarding only shrinks the pool, so
vulnerability is monotone and the fixpoint does not depend on the order of
removals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


def _reduced(j: int, a: set[int]) -> set[int]:
    out = set(a)
    out.discard(j)
    out.discard(2 * j)
    if j % 2 == 0:
        out.discard(j // 2)
    return out


def max_acceptable_size(j: int, a: Iterable[int]) -> int:
    """Size of the largest j-acceptable subset of ``a`` minus ``{j}``.

    The mirrored pairs ``{j - d, j + d}`` are disjoint for fixed j, so the
    maximum keeps everything except one element from each complete pair.
    """
    a = set(a)
    if j not in a:
        raise ValueError(f"{j} is not in the label set")
    rest = _reduced(j, a)
    pairs = sum(1 for x in rest if x < j and 2 * j - x in rest)
    return len(rest) - pairs


def is_vulnerable(j: int, a: Iterable[int], delta: int) -> bool:
    return max_acceptable_size(j, a) < delta


@dataclass(frozen=True)
class EliminationStep:
    label: int
    round: int
    acceptable: int
    remaining: tuple[int, ...]


@dataclass
class EliminationTrace:
    x: int
    delta: int
    steps: list[EliminationStep] = field(default_factory=list)
    survivors: tuple[int, ...] = ()
    contradiction: bool = False

    @property
    def removed(self) -> list[int]:
        return [s.label for s in self.steps]

    def to_record(self) -> dict:
        return {
            "x": self.x,
            "delta": self.delta,
            "steps": [
                {"label": s.label, "round": s.round, "acceptable": s.acceptable, "remaining": list(s.remaining)}
                for s in self.steps
            ],
            "survivors": list(self.survivors),
            "contradiction": self.contradiction,
        }

    @classmethod
    def from_record(cls, rec: dict) -> EliminationTrace:
        steps = [
            EliminationStep(s["label"], s["round"], s["acceptable"], tuple(s["remaining"])) for s in rec["steps"]
        ]
        return cls(rec["x"], rec["delta"], steps, tuple(rec["survivors"]), rec["contradiction"])


def eliminate_fixpoint(
    x: int, delta: int, order: Sequence[int] | None = None, stop_at_contradiction: bool = False
) -> EliminationTrace:
    """Remove vulnerable labels from ``{1..x}`` until none is left to remove.

    Without ``order`` every currently vulnerable label is dropped in the same
    round. With ``order`` labels are dropped one at a time, always the first
    vulnerable label in ``order`` (labels not listed come after, ascending);
    the survivors are the same either way. ``stop_at_contradiction`` ends the
    trace as soon as fewer than ``delta + 1`` labels remain.
    """
    if x < 0 or delta < 1:
        raise ValueError("need x >= 0 and delta >= 1")
    pool = set(range(1, x + 1))
    trace = EliminationTrace(x, delta)
    rnd = 0

    def done() -> bool:
        return stop_at_contradiction and len(pool) < delta + 1

    if order is None:
        while not done():
            rnd += 1
            sizes = {j: max_acceptable_size(j, pool) for j in sorted(pool)}
            hit = [j for j, s in sizes.items() if s < delta]
            if not hit:
                break
            pool.difference_update(hit)
            remaining = tuple(sorted(pool))
            trace.steps.extend(EliminationStep(j, rnd, sizes[j], remaining) for j in hit)
    else:
        rank = {j: i for i, j in enumerate(order)}
        while not done():
            rnd += 1
            pick = None
            for j in sorted(pool, key=lambda j: (rank.get(j, len(rank)), j)):
                s = max_acceptable_size(j, pool)
                if s < delta:
                    pick = (j, s)
                    break
            if pick is None:
                break
            pool.discard(pick[0])
            trace.steps.append(EliminationStep(pick[0], rnd, pick[1], tuple(sorted(pool))))
    trace.survivors = tuple(sorted(pool))
    trace.contradiction = len(pool) < delta + 1
    return trace


def replay_elimination(x: int, delta: int, removals: Sequence[int]) -> EliminationTrace:
    """Check a hand-ordered elimination sequence step by step.

    Raises ``ValueError`` naming the first label that was not vulnerable at the
    moment it was removed.
    """
    pool = set(range(1, x + 1))
    trace = EliminationTrace(x, delta)
    for rnd, j in enumerate(removals, 1):
        if j not in pool:
            raise ValueError(f"step {rnd}: label {j} is not available")
        s = max_acceptable_size(j, pool)
        if s >= delta:
            raise ValueError(f"step {rnd}: label {j} is not vulnerable (acceptable subset of size {s})")
        pool.discard(j)
        trace.steps.append(EliminationStep(j, rnd, s, tuple(sorted(pool))))
    trace.survivors = tuple(sorted(pool))
    trace.contradiction = len(pool) < delta + 1
    return trace


def star_elim_lower_bound(delta: int) -> int:
    """Least x at which elimination from ``{1..x}`` leaves at least delta + 1 labels.

    Every smaller ceiling ends in a contradiction, so no graph of minimum
    degree delta has a proper TDL with labels at most x - 1.
    """
    if delta < 1:
        raise ValueError("delta must be >= 1")
    x = delta + 1
    while eliminate_fixpoint(x, delta).contradiction:
        x += 1
    return x


def lower_bound_traces(delta: int, max_x: int | None = None) -> list[EliminationTrace]:
    """Traces for every ceiling from delta + 1 up to the bound (or ``max_x``)."""
    top = star_elim_lower_bound(delta) if max_x is None else max_x
    return [eliminate_fixpoint(x, delta) for x in range(delta + 1, top + 1)]


# Hand-ordered removal sequences at the ceiling just below each bound; each
# replays cleanly and ends in a contradiction.
HAND_SEQUENCES = {3: (6, (3, 2, 5)), 4: (7, (4, 3, 6)), 6: (11, (5, 6, 4, 9, 2, 7))}


def hand_trace(delta: int) -> EliminationTrace:
    if delta not in HAND_SEQUENCES:
        raise ValueError(f"no hand sequence for delta={delta}")
    x, seq = HAND_SEQUENCES[delta]
    return replay_elimination(x, delta, seq)
