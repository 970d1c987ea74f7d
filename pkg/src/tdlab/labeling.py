"""Vertex labelings and the proper total difference labeling checker.

A vertex labeling determines every edge label as the absolute difference of
its endpoints, so only vertex labels are stored. A labeling is a proper TDL
exactly when none of four local patterns occur:

* ``AdjacentEqual``: an edge whose endpoints share a label,
* ``Double``: an edge whose endpoint labels are ``a`` and ``2a``,
* ``Sandwich``: a path ``u-v-w`` with ``f(u) == f(w)``,
* ``Staircase``: a path ``u-v-w`` whose labels form an arithmetic progression.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graphs import Graph

ADJACENT_EQUAL = "AdjacentEqual"
DOUBLE = "Double"
SANDWICH = "Sandwich"
STAIRCASE = "Staircase"
KINDS = (ADJACENT_EQUAL, DOUBLE, SANDWICH, STAIRCASE)


class LabelingError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Violation:
    """One forbidden pattern.

    Pair kinds carry ``(u, v)`` with ``u < v``; triple kinds carry
    ``(u, v, w)`` with ``v`` the middle vertex and ``u < w``.
    """

    witness: tuple
    kind: str

    def to_record(self) -> dict:
        return {"kind": self.kind, "witness": list(self.witness)}

    @classmethod
    def from_record(cls, rec: Mapping) -> Violation:
        if rec["kind"] not in KINDS:
            raise LabelingError(f"unknown violation kind {rec['kind']!r}")
        return cls(tuple(rec["witness"]), rec["kind"])


def as_labels(g: Graph, f: Sequence[int] | Mapping[int, int]) -> list[int]:
    """Normalize a labeling to a list indexed by vertex, checking coverage and positivity."""
    if isinstance(f, Mapping):
        missing = [v for v in range(g.n) if v not in f]
        if missing:
            raise LabelingError(f"missing labels for vertices {missing}")
        labels = [f[v] for v in range(g.n)]
    else:
        labels = list(f)
        if len(labels) != g.n:
            raise LabelingError(f"labeling has {len(labels)} entries for {g.n} vertices")
    for v, a in enumerate(labels):
        if int(a) != a or a < 1:
            raise LabelingError(f"vertex {v} has non-positive or non-integer label {a!r}")
    return [int(a) for a in labels]


def edge_labels(g: Graph, f) -> dict[tuple[int, int], int]:
    labels = as_labels(g, f)
    return {(u, v): abs(labels[u] - labels[v]) for u, v in g.sorted_edges()}


def max_label(f) -> int:
    values = list(f.values()) if isinstance(f, Mapping) else list(f)
    if not values:
        raise LabelingError("empty labeling")
    return max(values)


def local_violations(nbrs: Sequence[Sequence[int]], labels: Sequence[int]) -> list[Violation]:
    """Check every pattern given per-vertex neighbor lists (u < w order inside triples)."""
    found: set[Violation] = set()
    for v, around in enumerate(nbrs):
        a = labels[v]
        for u in around:
            if u <= v:
                continue
            b = labels[u]
            if a == b:
                found.add(Violation((v, u), ADJACENT_EQUAL))
            elif a == 2 * b or b == 2 * a:
                found.add(Violation((v, u), DOUBLE))
        # group neighbors by label: equal labels give sandwiches, mirrored labels staircases
        by_label: dict[int, list[int]] = {}
        for u in around:
            by_label.setdefault(labels[u], []).append(u)
        for b, us in by_label.items():
            for i, u in enumerate(us):
                for w in us[i + 1 :]:
                    found.add(Violation((min(u, w), v, max(u, w)), SANDWICH))
            c = 2 * a - b
            if c > b:
                for u in us:
                    for w in by_label.get(c, ()):
                        found.add(Violation((min(u, w), v, max(u, w)), STAIRCASE))
    return sorted(found)


def validate(g: Graph, f) -> list[Violation]:
    """All violations of ``f`` on ``g``; an empty list certifies a proper TDL."""
    return local_violations(g.adjacency, as_labels(g, f))


def is_proper(g: Graph, f) -> bool:
    return not validate(g, f)


def used_labels(f) -> set[int]:
    return set(f.values()) if isinstance(f, Mapping) else set(f)


# ---------------------------------------------------------------------------
# files


def read_labeling(text: str) -> dict[int, int]:
    """Parse ``vertex label`` pairs, one per line; ``#`` starts a comment."""
    out: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise LabelingError(f"line {lineno}: expected 'vertex label', got {raw!r}")
        try:
            v, a = int(parts[0]), int(parts[1])
        except ValueError:
            raise LabelingError(f"line {lineno}: expected integers, got {raw!r}") from None
        if v in out:
            raise LabelingError(f"line {lineno}: vertex {v} labeled twice")
        out[v] = a
    return out


def write_labeling(f) -> str:
    items = f.items() if isinstance(f, Mapping) else enumerate(f)
    return "".join(f"{v} {a}\n" for v, a in sorted(items))


def violations_to_jsonl(violations: Iterable[Violation]) -> str:
    return "".join(json.dumps(v.to_record()) + "\n" for v in violations)


def violations_from_jsonl(text: str) -> list[Violation]:
    return [Violation.from_record(json.loads(line)) for line in text.splitlines() if line.strip()]
