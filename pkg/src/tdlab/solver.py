"""Exact search for proper total difference labelings of finite graphs.

The search is depth-first over vertex labels with forward checking. Every
violation pattern involves at most three vertices, so once all but one of
them carry labels, the value that would complete the pattern is struck from
the remaining vertex's domain.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import starelim, wsr
from .graphs import Graph
from .labeling import validate


class BudgetExceeded(RuntimeError):
    """The search ran out of time before reaching a definite answer."""

    def __init__(self, message: str = "time budget exceeded", lower: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


@dataclass
class SearchConfig:
    max_k: int | None = None
    time_budget: float | None = None
    deterministic: bool = True
    count_all: bool = False


class ConstraintNetwork:
    """Label constraints generated by per-vertex neighbor lists.

    ``nbrs[v]`` lists the vertices adjacent to ``v``. It may repeat a vertex
    or contain ``v`` itself; that happens on small quotients of periodic
    lattices and makes the network unsatisfiable (a sandwich or a loop).
    """

    def __init__(self, nbrs: Sequence[Sequence[int]]):
        self.n = n = len(nbrs)
        self.nbrs = [list(a) for a in nbrs]
        self.unsatisfiable = any(v in a or len(set(a)) != len(a) for v, a in enumerate(self.nbrs))
        adj = [set() for _ in range(n)]
        dist2 = [set() for _ in range(n)]
        ends: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for m, around in enumerate(self.nbrs):
            for u in around:
                adj[u].add(m)
                adj[m].add(u)
            for u, w in itertools.permutations(around, 2):
                if u != w:
                    dist2[u].add(w)
                    ends[u].append((m, w))
        self.adj = [sorted(s) for s in adj]
        self.dist2 = [sorted(s) for s in dist2]
        self.ends = ends
        self.degree = [len(a) for a in self.nbrs]

    @classmethod
    def from_graph(cls, g: Graph) -> ConstraintNetwork:
        return cls(g.adjacency)

    # -- search -------------------------------------------------------------

    def solutions(
        self,
        k: int,
        fixed: dict[int, int] | None = None,
        deadline: float | None = None,
        domains: Sequence[int] | None = None,
    ) -> Iterator[list[int]]:
        """Yield every labeling with labels in ``1..k``, in a deterministic order."""
        if self.unsatisfiable or k < 1:
            return
        n = self.n
        full = ((1 << (k + 1)) - 1) & ~1
        dom = [full] * n if domains is None else [d & full for d in domains]
        labels = [0] * n
        nbrs, adj, dist2, ends = self.nbrs, self.adj, self.dist2, self.ends
        order_key = [(-self.degree[v], v) for v in range(n)]
        counter = [0]

        def assign(dom: list[int], v: int, a: int) -> bool:
            labels[v] = a
            dom[v] = 1 << a
            strike = 1 << a | 1 << (2 * a)
            if a % 2 == 0:
                strike |= 1 << (a // 2)
            for u in adj[v]:
                if not labels[u]:
                    d = dom[u] & ~strike
                    if not d:
                        return False
                    dom[u] = d
            bit = ~(1 << a)
            for w in dist2[v]:
                if not labels[w]:
                    d = dom[w] & bit
                    if not d:
                        return False
                    dom[w] = d
            for m, w in ends[v]:
                b = labels[m]
                if b:
                    if not labels[w]:
                        c = 2 * b - a
                        if c > 0:
                            d = dom[w] & ~(1 << c)
                            if not d:
                                return False
                            dom[w] = d
                elif labels[w]:
                    s = a + labels[w]
                    if s % 2 == 0:
                        d = dom[m] & ~(1 << (s // 2))
                        if not d:
                            return False
                        dom[m] = d
            around = nbrs[v]
            for u in around:
                c = labels[u]
                if c:
                    e = 2 * a - c
                    if e > 0:
                        mask = ~(1 << e)
                        for w in around:
                            if not labels[w]:
                                d = dom[w] & mask
                                if not d:
                                    return False
                                dom[w] = d
            return True

        def rec(dom: list[int], depth: int) -> Iterator[list[int]]:
            if depth == n:
                yield labels[:]
                return
            counter[0] += 1
            if deadline is not None and counter[0] & 1023 == 0 and time.monotonic() > deadline:
                raise BudgetExceeded()
            best = None
            best_key = None
            for v in range(n):
                if not labels[v]:
                    key = (dom[v].bit_count(), order_key[v])
                    if best_key is None or key < best_key:
                        best, best_key = v, key
            v = best
            d = dom[v]
            while d:
                low = d & -d
                a = low.bit_length() - 1
                d ^= low
                child = dom[:]
                if assign(child, v, a):
                    yield from rec(child, depth + 1)
                labels[v] = 0

        start = dom[:]
        depth = 0
        for v, a in sorted((fixed or {}).items()):
            if not start[v] >> a & 1 or not assign(start, v, a):
                return
            depth += 1
        yield from rec(start, depth)

    def first_solution(self, k: int, deadline: float | None = None, **kw) -> list[int] | None:
        return next(self.solutions(k, deadline=deadline, **kw), None)


def _deadline(cfg: SearchConfig | None) -> float | None:
    if cfg is None or cfg.time_budget is None:
        return None
    return time.monotonic() + cfg.time_budget


# ---------------------------------------------------------------------------
# bounds


def star_chi(m: int) -> int:
    """chi_td of the star K_{1,m}: m + 1 for even m, m + 2 for odd m."""
    if m == 0:
        return 1
    return m + 1 if m % 2 == 0 else m + 2


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, by Bron-Kerbosch with pivoting."""
    masks = g.adjacency_masks
    best: list[int] = []

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = r[:]
            return
        if len(r) + p.bit_count() <= len(best):
            return
        pivot = (p | x).bit_length() - 1
        cand = p & ~masks[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            r.append(v)
            expand(r, p & masks[v], x & masks[v])
            r.pop()
            p &= ~low
            x |= low

    if g.n:
        expand([], (1 << g.n) - 1, 0)
    return sorted(best)


@dataclass
class BoundReport:
    star_lb: int
    diameter2_lb: int | None
    clique_lb: int
    greedy_ub: int
    starelim_lb: int | None = None
    provenance: dict[str, str] = field(default_factory=dict)

    @property
    def best_lower(self) -> int:
        return max(b for b in (self.star_lb, self.diameter2_lb, self.clique_lb, self.starelim_lb) if b is not None)

    @property
    def lower_bounds(self) -> dict[str, int]:
        named = {
            "star": self.star_lb,
            "diameter2": self.diameter2_lb,
            "clique": self.clique_lb,
            "starelim": self.starelim_lb,
        }
        return {k: v for k, v in named.items() if v is not None}

    def best_source(self) -> str:
        bounds = self.lower_bounds
        return max(bounds, key=lambda k: bounds[k])


def lower_bound_report(g: Graph) -> BoundReport:
    if g.n == 0:
        raise ValueError("empty graph")
    delta = g.max_degree
    diam = g.diameter()
    clique = max_clique(g)
    ub = 3 ** math.ceil(math.log2(g.n)) if g.n > 1 else 1
    report = BoundReport(
        star_lb=star_chi(delta),
        diameter2_lb=g.n if diam <= 2 else None,
        clique_lb=wsr.chi_td_complete(len(clique)),
        greedy_ub=ub,
        starelim_lb=starelim.star_elim_lower_bound(g.min_degree) if g.min_degree >= 1 else None,
    )
    report.provenance = {
        "star": f"contains K1,{delta}",
        "clique": f"contains K{len(clique)} on {clique}",
        "greedy": f"greedy well-spaced row with 2^{math.ceil(math.log2(g.n)) if g.n > 1 else 0} elements",
    }
    if report.diameter2_lb is not None:
        report.provenance["diameter2"] = f"diameter {diam} <= 2 forces distinct labels"
    if report.starelim_lb is not None:
        report.provenance["starelim"] = f"star elimination at minimum degree {g.min_degree}"
    return report


# ---------------------------------------------------------------------------
# decision, optimization, enumeration


def has_tdl(g: Graph, k: int, cfg: SearchConfig | None = None) -> list[int] | None:
    """A proper TDL with labels at most k, or None once the search is exhausted.

    Raises ``BudgetExceeded`` if the time budget runs out first.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    witness = ConstraintNetwork.from_graph(g).first_solution(k, deadline=_deadline(cfg))
    if witness is not None:
        assert not validate(g, witness), "search produced an invalid labeling"
    return witness


@dataclass
class ChiResult:
    chi: int
    witness: list[int]
    # how "no labeling at chi - 1" is known: a bound name or "search"
    lower_certificate: str
    bounds: BoundReport


def chi_td(
    g: Graph,
    cfg: SearchConfig | None = None,
    search_below: bool = False,
    known_lower: tuple[int, str] | None = None,
) -> ChiResult:
    """Exact chi_td with a witness, searching upward from the best lower bound.

    ``known_lower`` is an extra ``(bound, reason)`` pair, e.g. chi_td of a
    subgraph. With ``search_below`` the level just under chi_td is also
    refuted by exhaustive search, independently of the bounds.
    """
    report = lower_bound_report(g)
    deadline = _deadline(cfg)
    net = ConstraintNetwork.from_graph(g)
    k = report.best_lower
    source = report.best_source()
    if known_lower is not None and known_lower[0] > k:
        k, source = known_lower
    cap = cfg.max_k if cfg is not None and cfg.max_k is not None else report.greedy_ub
    while True:
        if k > cap:
            raise BudgetExceeded(f"no labeling with labels <= {cap}", lower=k, upper=None)
        try:
            witness = net.first_solution(k, deadline=deadline)
        except BudgetExceeded as exc:
            raise BudgetExceeded(str(exc), lower=k, upper=report.greedy_ub) from None
        if witness is not None:
            break
        source = "search"
        k += 1
    assert not validate(g, witness)
    if search_below and source != "search" and k > 1:
        if net.first_solution(k - 1, deadline=deadline) is not None:
            raise AssertionError(f"lower bound {source} contradicted by a labeling at {k - 1}")
        source = "search"
    return ChiResult(k, witness, source, report)


def enumerate_tdls(g: Graph, k: int, cfg: SearchConfig | None = None) -> list[tuple[int, ...]]:
    """Every proper TDL with labels at most k, as raw vertex-indexed tuples (sorted)."""
    net = ConstraintNetwork.from_graph(g)
    return sorted(tuple(s) for s in net.solutions(k, deadline=_deadline(cfg)))


def count_tdls(g: Graph, k: int, cfg: SearchConfig | None = None) -> int:
    net = ConstraintNetwork.from_graph(g)
    return sum(1 for _ in net.solutions(k, deadline=_deadline(cfg)))
