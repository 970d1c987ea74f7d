"""Periodic labelings of infinite lattices and of the infinite binary tree.

Coordinates are integer vectors. In the plane ``(x, y)`` has ``y`` growing
downwards, so a drawn row of a figure is a fixed ``y``.

* square: offsets +-e1, +-e2
* triangular: square plus +-(1, 1)
* hexagonal: the brick wall inside the square lattice; the vertical edge
  between ``(x, y)`` and ``(x, y + 1)`` exists iff ``x + y`` is even
* cubic: +-e1, +-e2, +-e3

A periodic labeling is a label per coset of a translation sublattice ``L``.
Every violation is a translate of one whose first endpoint (pairs) or middle
vertex (triples) lies in the fundamental domain, so checking the domain
against full neighborhoods certifies the infinite labeling.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from . import wsr
from .graphs import Graph
from .labeling import ADJACENT_EQUAL, DOUBLE, SANDWICH, STAIRCASE, Violation
from .solver import BudgetExceeded, ConstraintNetwork, SearchConfig, _deadline

Vec = tuple[int, ...]

MAX_SEARCH_DOMAIN = 36


class LatticeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# models


@dataclass(frozen=True)
class LatticeModel:
    name: str
    dim: int

    def offsets(self, v: Vec) -> list[Vec]:
        if self.name == "square":
            return [(1, 0), (-1, 0), (0, 1), (0, -1)]
        if self.name == "triangular":
            return [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
        if self.name == "hexagonal":
            return [(1, 0), (-1, 0), (0, 1) if (v[0] + v[1]) % 2 == 0 else (0, -1)]
        if self.name == "cubic":
            return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
        raise LatticeError(f"unknown model {self.name!r}")

    def neighbors(self, v: Vec) -> list[Vec]:
        return [add(v, o) for o in self.offsets(v)]

    @property
    def degree(self) -> int:
        return len(self.offsets((0,) * self.dim))

    @property
    def group_modulus(self) -> int:
        # translations preserving the neighbor rule: x + y even for the brick wall
        return 2 if self.name == "hexagonal" else 1

    def in_group(self, t: Vec) -> bool:
        return self.name != "hexagonal" or (t[0] + t[1]) % 2 == 0


SQUARE = LatticeModel("square", 2)
TRIANGULAR = LatticeModel("triangular", 2)
HEXAGONAL = LatticeModel("hexagonal", 2)
CUBIC = LatticeModel("cubic", 3)
MODELS = {m.name: m for m in (SQUARE, TRIANGULAR, HEXAGONAL, CUBIC)}


def get_model(name: str) -> LatticeModel:
    key = {"hex": "hexagonal", "tri": "triangular"}.get(name, name)
    if key not in MODELS:
        raise LatticeError(f"unknown lattice model {name!r}; choose from {sorted(MODELS)}")
    return MODELS[key]


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# translation sublattices


def triangular_basis(vectors: Iterable[Sequence[int]], dim: int) -> tuple[Vec, ...]:
    """Canonical triangular basis of the lattice spanned by ``vectors``.

    Vector ``i`` of the result has zeros beyond coordinate ``i``, a positive
    entry at ``i`` and entries ``0 <= h[i][j] < h[j][j]`` for ``j < i``. Two
    generating sets span the same lattice iff their bases are equal.
    """
    rows = [list(v) for v in vectors if any(v)]
    for v in rows:
        if len(v) != dim:
            raise LatticeError(f"vector {v} does not have {dim} coordinates")
    pivots: list[list[int] | None] = [None] * dim
    for c in range(dim - 1, -1, -1):
        # Euclid on column c until at most one row is nonzero there
        while True:
            live = [r for r in rows if r[c] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda r: abs(r[c]))
            p = live[0]
            for r in live[1:]:
                q = r[c] // p[c]
                for j in range(dim):
                    r[j] -= q * p[j]
        live = [r for r in rows if r[c] != 0]
        if not live:
            raise LatticeError("vectors do not span a full-rank sublattice")
        p = live[0]
        if p[c] < 0:
            p = [-a for a in p]
        pivots[c] = p
        rows = [r for r in rows if r[c] == 0 and any(r)]
    basis = [list(p) for p in pivots]
    for i in range(dim):
        for j in range(i - 1, -1, -1):
            q = basis[i][j] // basis[j][j]
            if q:
                basis[i] = [a - q * b for a, b in zip(basis[i], basis[j])]
    return tuple(tuple(v) for v in basis)


@dataclass(frozen=True)
class Sublattice:
    basis: tuple[Vec, ...]

    @classmethod
    def spanned_by(cls, vectors: Iterable[Sequence[int]], dim: int) -> Sublattice:
        return cls(triangular_basis(vectors, dim))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def index(self) -> int:
        return math.prod(self.basis[i][i] for i in range(self.dim))

    def reduce(self, v: Sequence[int]) -> Vec:
        v = list(v)
        for c in range(self.dim - 1, -1, -1):
            h = self.basis[c]
            q = v[c] // h[c]
            if q:
                v = [a - q * b for a, b in zip(v, h)]
        return tuple(v)

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def representatives(self) -> list[Vec]:
        """Coset representatives in row-major order (last coordinate slowest)."""
        ranges = [range(self.basis[i][i]) for i in range(self.dim)]
        return [tuple(reversed(p)) for p in itertools.product(*reversed(ranges))]


def sublattices(model: LatticeModel, max_index: int, min_index: int = 1) -> Iterator[Sublattice]:
    """Every translation sublattice of the model with index in range, by index then basis."""
    d = model.dim
    for n in range(min_index, max_index + 1):
        found = []
        for diag in _factorizations(n, d):
            free = []
            for i in range(d):
                for j in range(i):
                    free.append(range(diag[j]))
            for off in itertools.product(*free):
                it = iter(off)
                basis = []
                for i in range(d):
                    v = [0] * d
                    for j in range(i):
                        v[j] = next(it)
                    v[i] = diag[i]
                    basis.append(tuple(v))
                if all(model.in_group(v) for v in basis):
                    found.append(Sublattice(tuple(basis)))
        yield from sorted(found, key=lambda s: s.basis)


def _factorizations(n: int, d: int) -> list[tuple[int, ...]]:
    if d == 1:
        return [(n,)]
    out = []
    for a in range(1, n + 1):
        if n % a == 0:
            out.extend((a,) + rest for rest in _factorizations(n // a, d - 1))
    return out


# ---------------------------------------------------------------------------
# periodic labelings


@dataclass(frozen=True)
class PeriodicLabeling:
    model: LatticeModel
    lattice: Sublattice
    labels: Mapping[Vec, int] = field(hash=False)
    name: str = field(default="", compare=False)

    @property
    def basis(self) -> tuple[Vec, ...]:
        return self.lattice.basis

    def label_at(self, v: Sequence[int]) -> int:
        return self.labels[self.lattice.reduce(v)]

    @property
    def max_label(self) -> int:
        return max(self.labels.values())

    def used_labels(self) -> set[int]:
        return set(self.labels.values())

    def patch(self, shape: Sequence[int], origin: Sequence[int] | None = None) -> dict[Vec, int]:
        origin = origin or (0,) * self.model.dim
        return {v: self.label_at(add(v, origin)) for v in box(shape)}


def make_periodic(model: LatticeModel, basis: Iterable[Sequence[int]], labels: Mapping, name: str = "") -> PeriodicLabeling:
    """Build a periodic labeling, reducing the given coordinates onto coset representatives.

    Raises ``LatticeError`` if two coordinates of one coset disagree, if a coset
    is missing, or if the basis is not made of translations of the model.
    """
    basis = [tuple(v) for v in basis]
    for v in basis:
        if len(v) != model.dim:
            raise LatticeError(f"basis vector {v} does not match dimension {model.dim}")
        if not model.in_group(v):
            raise LatticeError(f"{v} is not a translation of the {model.name} lattice")
    lat = Sublattice.spanned_by(basis, model.dim)
    reduced: dict[Vec, int] = {}
    for v, a in labels.items():
        v = tuple(v)
        if len(v) != model.dim:
            raise LatticeError(f"coordinate {v} does not match dimension {model.dim}")
        if int(a) != a or a < 1:
            raise LatticeError(f"label {a!r} at {v} is not a positive integer")
        r = lat.reduce(v)
        if reduced.setdefault(r, int(a)) != a:
            raise LatticeError(f"labels {reduced[r]} and {a} meet in the coset of {r}")
    missing = [r for r in lat.representatives() if r not in reduced]
    if missing:
        raise LatticeError(f"{len(missing)} of {lat.index} cosets unlabeled, e.g. {missing[0]}")
    return PeriodicLabeling(model, lat, reduced, name)


def from_rows(model: LatticeModel, rows: Sequence[Sequence[int]], basis, name: str = "") -> PeriodicLabeling:
    """Periodic labeling from a drawn planar patch (row ``y``, column ``x``)."""
    return make_periodic(model, basis, rows_to_cells(rows), name)


def rows_to_cells(rows: Sequence[Sequence[int]]) -> dict[Vec, int]:
    return {(x, y): a for y, row in enumerate(rows) for x, a in enumerate(row)}


def _local_check(model: LatticeModel, v: Vec, label_of) -> list[Violation]:
    """Violations whose first endpoint (pairs) or middle vertex (triples) is v."""
    a = label_of(v)
    found = []
    around = [(u, label_of(u)) for u in model.neighbors(v)]
    for u, b in around:
        if u <= v:
            continue
        if a == b:
            found.append(Violation((v, u), ADJACENT_EQUAL))
        elif a == 2 * b or b == 2 * a:
            found.append(Violation((v, u), DOUBLE))
    for (u, b), (w, c) in itertools.combinations(around, 2):
        lo, hi = min(u, w), max(u, w)
        if b == c:
            found.append(Violation((lo, v, hi), SANDWICH))
        elif b + c == 2 * a:
            found.append(Violation((lo, v, hi), STAIRCASE))
    return found


def validate_periodic(p: PeriodicLabeling) -> list[Violation]:
    """All violations meeting one fundamental domain, with lattice coordinates as witnesses.

    An empty list certifies the labeling of the whole infinite lattice.
    """
    model = p.model
    for v in p.basis:
        if not model.in_group(v):
            raise LatticeError(f"{v} is not a translation of the {model.name} lattice")
    reps = p.lattice.representatives()
    if set(reps) != set(p.labels):
        raise LatticeError("labels do not match the fundamental domain of the basis")
    found: list[Violation] = []
    for v in reps:
        found.extend(_local_check(model, v, p.label_at))
    return sorted(set(found))


def box(shape: Sequence[int]) -> list[Vec]:
    return [tuple(reversed(p)) for p in itertools.product(*(range(s) for s in reversed(shape)))]


def patch_graph(model: LatticeModel, cells: Iterable[Sequence[int]]) -> tuple[Graph, list[Vec]]:
    """The finite subgraph induced on ``cells``; vertex i is ``coords[i]``."""
    coords = sorted({tuple(c) for c in cells}, key=lambda c: tuple(reversed(c)))
    index = {c: i for i, c in enumerate(coords)}
    edges = []
    for c, i in index.items():
        for u in model.neighbors(c):
            j = index.get(u)
            if j is not None and i < j:
                edges.append((i, j))
    return Graph.from_edges(len(coords), edges, name=f"{model.name} patch"), coords


def validate_patch(model: LatticeModel, cells: Mapping[Vec, int]) -> list[Violation]:
    """Violations of a finite labeled patch, witnesses in lattice coordinates."""
    inside = {tuple(v): a for v, a in cells.items()}
    clipped = _Restricted(model, inside)
    found = []
    for v in inside:
        found.extend(_local_check(clipped, v, inside.__getitem__))
    return sorted(set(found))


class _Restricted:
    # a model whose neighborhoods are clipped to a finite cell set
    def __init__(self, model: LatticeModel, cells: Mapping[Vec, int]):
        self.model = model
        self.cells = cells

    def neighbors(self, v: Vec) -> list[Vec]:
        return [u for u in self.model.neighbors(v) if u in self.cells]


# ---------------------------------------------------------------------------
# constructions and search


def linear_functional_labeling(
    model: LatticeModel, row: Sequence[int], coeffs: Sequence[int], name: str = ""
) -> PeriodicLabeling:
    """Label ``v`` with ``row[(coeffs . v) mod m]``."""
    m = len(row)
    if m < 1:
        raise LatticeError("row must be nonempty")
    if len(coeffs) != model.dim:
        raise LatticeError(f"need {model.dim} coefficients, got {len(coeffs)}")
    lat = kernel_lattice(model, coeffs, m)
    labels = {r: row[sum(c * x for c, x in zip(coeffs, r)) % m] for r in lat.representatives()}
    return PeriodicLabeling(model, lat, labels, name)


def kernel_lattice(model: LatticeModel, coeffs: Sequence[int], m: int) -> Sublattice:
    """Translations t of the model with coeffs . t divisible by m."""
    d = model.dim
    side = m * model.group_modulus
    gens = [tuple(side if i == j else 0 for j in range(d)) for i in range(d)]
    for t in itertools.product(range(side), repeat=d):
        if sum(c * x for c, x in zip(coeffs, t)) % m == 0 and model.in_group(t) and any(t):
            gens.append(t)
    return Sublattice.spanned_by(gens, d)


def quotient_network(model: LatticeModel, lat: Sublattice) -> tuple[ConstraintNetwork, list[Vec]]:
    reps = lat.representatives()
    index = {r: i for i, r in enumerate(reps)}
    nbrs = [[index[lat.reduce(u)] for u in model.neighbors(r)] for r in reps]
    return ConstraintNetwork(nbrs), reps


def search_periodic(
    model: LatticeModel,
    k: int,
    basis: Iterable[Sequence[int]],
    cfg: SearchConfig | None = None,
    fixed: Mapping[Vec, int] | None = None,
    allowed: Iterable[int] | None = None,
) -> PeriodicLabeling | None:
    """A valid periodic labeling with labels at most k for this basis, or None.

    ``fixed`` pins labels at lattice coordinates; ``allowed`` restricts the
    label set. Raises ``BudgetExceeded`` if the time budget runs out.
    """
    basis = [tuple(v) for v in basis]
    for v in basis:
        if not model.in_group(v):
            raise LatticeError(f"{v} is not a translation of the {model.name} lattice")
    lat = Sublattice.spanned_by(basis, model.dim)
    if lat.index > MAX_SEARCH_DOMAIN:
        raise LatticeError(f"fundamental domain of {lat.index} cells exceeds {MAX_SEARCH_DOMAIN}")
    return _search(model, lat, k, _deadline(cfg), fixed, allowed)


def _search(model, lat, k, deadline, fixed=None, allowed=None):
    net, reps = quotient_network(model, lat)
    index = {r: i for i, r in enumerate(reps)}
    pins: dict[int, int] = {}
    for v, a in (fixed or {}).items():
        i = index[lat.reduce(v)]
        if pins.setdefault(i, a) != a:
            return None
    domains = None
    if allowed is not None:
        mask = sum(1 << a for a in set(allowed))
        domains = [mask] * len(reps)
    sol = net.first_solution(k, deadline=deadline, fixed=pins, domains=domains)
    if sol is None:
        return None
    p = PeriodicLabeling(model, lat, dict(zip(reps, sol)))
    if validate_periodic(p):
        raise AssertionError("search produced an invalid periodic labeling")
    return p


def search_all_domains(
    model: LatticeModel,
    k: int,
    max_domain: int,
    cfg: SearchConfig | None = None,
    min_domain: int = 1,
    allowed: Iterable[int] | None = None,
) -> tuple[PeriodicLabeling | None, int]:
    """First labeling over every sublattice by increasing index, and the number of bases tried."""
    if max_domain > MAX_SEARCH_DOMAIN:
        raise LatticeError(f"domain cap {max_domain} exceeds {MAX_SEARCH_DOMAIN}")
    deadline = _deadline(cfg)
    tried = 0
    for lat in sublattices(model, max_domain, min_domain):
        tried += 1
        p = _search(model, lat, k, deadline, allowed=allowed)
        if p is not None:
            return p, tried
    return None, tried


def linear_functional_search(
    model: LatticeModel, k: int, m: int, cfg: SearchConfig | None = None, allowed: Iterable[int] | None = None
) -> PeriodicLabeling | None:
    """Search rows of length m and coefficient vectors (1, a, b, ...) with 0 <= a, b < m.

    For a translation-invariant model the labeling ``row[(c . v) mod m]`` is
    proper iff the row is a proper labeling of the circulant graph on Z/m whose
    vertex r neighbors r + c . o for every offset o, so the search runs there.
    """
    if model.group_modulus != 1:
        raise LatticeError("linear functional search needs a translation-invariant model")
    deadline = _deadline(cfg)
    origin = (0,) * model.dim
    domains = None
    if allowed is not None:
        domains = [sum(1 << a for a in set(allowed))] * m
    for tail in itertools.product(range(m), repeat=model.dim - 1):
        coeffs = (1,) + tail
        steps = [sum(c * o for c, o in zip(coeffs, off)) for off in model.offsets(origin)]
        net = ConstraintNetwork([[(r + s) % m for s in steps] for r in range(m)])
        row = net.first_solution(k, deadline=deadline, domains=domains)
        if row is not None:
            p = linear_functional_labeling(model, row, coeffs, name=f"row {tuple(row)} coeffs {coeffs}")
            if validate_periodic(p):
                raise AssertionError("linear functional search produced an invalid labeling")
            return p
    return None


# ---------------------------------------------------------------------------
# fixtures transcribed from drawn figures

FIG3_ROW = (1, 3, 4, 9, 10)
FIG3_COEFFS = (1, 3)  # y grows downwards; (1, 2) is the mirror image and equally valid
FIG4_ROWS = [[2, 3, 7, 2, 3, 7], [8, 1, 6, 8, 1, 6], [3, 7, 2, 3, 7, 2], [1, 6, 8, 1, 6, 8]]
FIG4_BASIS = [(3, 0), (-1, 2)]
FIG7_ROWS = [[1, 3, 7, 8, 1, 3], [7, 8, 1, 3, 7, 8]] * 2
FIG7_BASIS = [(4, 0), (0, 2)]
FIG10_ROWS = [[4, 6, 2, 7, 5, 1], [3, 1, 5, 3, 2, 7]] * 2
FIG10_BASIS = [(6, 0), (0, 2)]
# drawn exactly as printed; the last row sits under the third with a
# 5 above a 10, so this patch is not a proper labeling
FIG15_ROWS = [[1, 4, 5, 2, 3, 1], [7, 10, 9, 11, 12, 7], [5, 2, 3, 1, 4, 5], [10, 9, 11, 12, 7, 10]]
FIG15_LABELS = (1, 2, 3, 4, 5, 7, 9, 10, 11, 12)


def figure_fixture(name: str) -> PeriodicLabeling:
    if name == "fig3":
        return linear_functional_labeling(SQUARE, FIG3_ROW, FIG3_COEFFS, name="fig3")
    if name == "fig4":
        return from_rows(SQUARE, FIG4_ROWS, FIG4_BASIS, name="fig4")
    if name == "fig7":
        return from_rows(HEXAGONAL, FIG7_ROWS, FIG7_BASIS, name="fig7")
    if name == "fig10":
        return from_rows(HEXAGONAL, FIG10_ROWS, FIG10_BASIS, name="fig10")
    raise LatticeError(f"no periodic fixture {name!r}; known: {sorted(PERIODIC_FIXTURES)}")


PERIODIC_FIXTURES = ("fig3", "fig4", "fig7", "fig10")


def fig15_patch() -> dict[Vec, int]:
    return rows_to_cells(FIG15_ROWS)


# ---------------------------------------------------------------------------
# fixture files: "model NAME", then "basis ..." lines, then "coords... label"


def write_fixture(p: PeriodicLabeling) -> str:
    lines = [f"model {p.model.name}"]
    lines += ["basis " + " ".join(map(str, v)) for v in p.basis]
    for r in p.lattice.representatives():
        lines.append(" ".join(map(str, r)) + f" {p.labels[r]}")
    return "\n".join(lines) + "\n"


def read_fixture(text: str) -> PeriodicLabeling:
    model = None
    basis = []
    cells: dict[Vec, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "model":
                model = get_model(rest[0])
            elif head == "basis":
                basis.append(tuple(int(t) for t in rest))
            else:
                if model is None:
                    raise LatticeError("label line before the model line")
                nums = [int(t) for t in line.split()]
                if len(nums) != model.dim + 1:
                    raise LatticeError(f"expected {model.dim} coordinates and a label")
                cells[tuple(nums[:-1])] = nums[-1]
        except (LatticeError, ValueError, IndexError) as exc:
            raise LatticeError(f"line {lineno}: {exc}") from None
    if model is None:
        raise LatticeError("fixture has no model line")
    return make_periodic(model, basis, cells)


def load_fixture(source: str) -> PeriodicLabeling:
    if source in PERIODIC_FIXTURES:
        return figure_fixture(source)
    if not os.path.exists(source):
        raise LatticeError(f"{source!r} is neither a fixture file nor one of {list(PERIODIC_FIXTURES)}")
    with open(source) as fh:
        return read_fixture(fh.read())


# ---------------------------------------------------------------------------
# the infinite binary tree

CLOSURE = "Closure"


@dataclass(frozen=True)
class TreeRuleMap:
    root_label: int
    rules: Mapping[int, tuple[int, int]] = field(hash=False)

    def reachable(self) -> list[int]:
        seen = {self.root_label}
        todo = [self.root_label]
        while todo:
            a = todo.pop()
            for b in self.rules.get(a, ()):
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
        return sorted(seen)

    @property
    def max_label(self) -> int:
        return max(self.reachable())


TREE_RULES = TreeRuleMap(1, {1: (3, 5), 2: (5, 7), 3: (2, 7), 4: (6, 7), 5: (4, 7), 6: (1, 2), 7: (1, 6)})


def validate_tree_rulemap(t: TreeRuleMap) -> list[Violation]:
    """Violations over all realizable (parent, vertex) label configurations.

    Witnesses are label tuples: ``(label,)`` for a missing rule, ``(a, b)`` for
    a bad edge, ``(x, a, y)`` for a bad pair of neighbors around label ``a``.
    """
    missing = [a for a in t.reachable() if a not in t.rules]
    if missing:
        return [Violation((a,), CLOSURE) for a in missing]
    found = set()
    seen = set()
    todo: list[tuple[int | None, int]] = [(None, t.root_label)]
    while todo:
        parent, a = todo.pop()
        if (parent, a) in seen:
            continue
        seen.add((parent, a))
        children = t.rules[a]
        around = list(children) + ([parent] if parent is not None else [])
        for b in children:
            if a == b:
                found.add(Violation((a, b), ADJACENT_EQUAL))
            elif a == 2 * b or b == 2 * a:
                found.add(Violation(tuple(sorted((a, b))), DOUBLE))
            todo.append((a, b))
        for b, c in itertools.combinations(around, 2):
            lo, hi = min(b, c), max(b, c)
            if b == c:
                found.add(Violation((lo, a, hi), SANDWICH))
            elif b + c == 2 * a:
                found.add(Violation((lo, a, hi), STAIRCASE))
    return sorted(found)


def generic_infinite_upper_bound(delta: int) -> int:
    """E(delta^2 + 1), an upper bound for every countable graph of maximum degree delta."""
    if delta < 1:
        raise ValueError("delta must be >= 1")
    n = delta * delta + 1
    if n > wsr.BUDGETED_MAX_N:
        raise ValueError(f"E({n}) is beyond the computed range n <= {wsr.BUDGETED_MAX_N}")
    return wsr.minimal_max(n)
