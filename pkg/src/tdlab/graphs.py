"""Finite simple graphs, named builders, canonical forms and small-graph enumeration.

Vertices are always the integers ``0..n-1``. Builders document their vertex
numbering so that labelings transcribed from drawings map onto vertices
deterministically.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable


class GraphError(ValueError):
    """Raised for invalid graphs, builder parameters or malformed graph files."""


MAX_CANONICAL_ORDER = 10
MAX_ENUMERATION_ORDER = 7


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        clean = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            clean.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(clean))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> Graph:
        return cls(n, frozenset(tuple(e) for e in edges), name)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in a) for a in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency_masks[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adjacency), default=0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def distances_from(self, s: int) -> list[int]:
        """BFS distances from ``s``; unreachable vertices get -1."""
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in self.adjacency[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return min(self.distances_from(0)) >= 0

    def diameter(self) -> float:
        """Eccentricity maximum; ``inf`` for disconnected graphs."""
        best = 0
        for s in range(self.n):
            d = self.distances_from(s)
            if min(d) < 0:
                return float("inf")
            best = max(best, max(d))
        return best

    def is_regular(self) -> bool:
        return self.n > 0 and self.min_degree == self.max_degree

    def relabel(self, perm: list[int], name: str | None = None) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(
            self.n, ((perm[u], perm[v]) for u, v in self.edges), self.name if name is None else name
        )

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep), ((index[u], index[v]) for u, v in self.edges if u in index and v in index)
        )

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} n={self.n} m={len(self.edges)}>"


# ---------------------------------------------------------------------------
# named builders


def path(n: int) -> Graph:
    """P_n with vertices 0..n-1 in path order."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"P{n}")


def cycle(n: int) -> Graph:
    """C_n with vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"C{n}")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2), f"K{n}")


def star(m: int) -> Graph:
    """K_{1,m}: center 0, leaves 1..m."""
    if m < 0:
        raise GraphError("star needs m >= 0")
    return Graph.from_edges(m + 1, ((0, i) for i in range(1, m + 1)), f"K1,{m}")


def hypercube(d: int) -> Graph:
    """Q_d on bit strings 0..2^d-1, adjacent when they differ in one bit."""
    if d < 0:
        raise GraphError("hypercube needs d >= 0")
    n = 1 << d
    return Graph.from_edges(
        n, ((v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1), f"Q{d}"
    )


# Drawing of the Petersen graph whose node names double as a valid labeling
# (vertex i carries label i + 1).
PETERSEN_EDGES = [
    (1, 3), (1, 4), (1, 8), (2, 3), (2, 5), (2, 10), (3, 7), (4, 5),
    (4, 6), (5, 9), (6, 7), (6, 10), (7, 9), (8, 9), (8, 10),
]  # fmt: skip


def petersen() -> Graph:
    return Graph.from_edges(10, ((u - 1, v - 1) for u, v in PETERSEN_EDGES), "Petersen")


TRIFORCE_EDGES = [(1, 2), (1, 3), (2, 3), (2, 5), (3, 5), (3, 6), (4, 5), (5, 6)]


def triforce() -> Graph:
    """Triforce with one outer edge missing (6 vertices, 8 edges).

    Vertex 0 is the apex, 1 and 2 the middle row, 3, 4, 5 the bottom row
    from left to right.
    """
    return Graph.from_edges(6, ((u - 1, v - 1) for u, v in TRIFORCE_EDGES), "triforce")


def graph_i() -> Graph:
    """Two K4 on {0..3} and {4..7} joined by the edge 3-6."""
    edges = list(itertools.combinations(range(4), 2))
    edges += list(itertools.combinations(range(4, 8), 2))
    edges.append((3, 6))
    return Graph.from_edges(8, edges, "graph_I")


def binary_tree(h: int) -> Graph:
    """Complete binary tree of depth h in heap order (children of v are 2v+1, 2v+2)."""
    if h < 0:
        raise GraphError("binary tree needs depth >= 0")
    n = (1 << (h + 1)) - 1
    return Graph.from_edges(n, ((v, (v - 1) // 2) for v in range(1, n)), f"T{h}")


def grid(rows: int, cols: int) -> Graph:
    """rows x cols patch of the square lattice; vertex r*cols + c sits at row r, column c."""
    if rows < 1 or cols < 1:
        raise GraphError("grid needs positive dimensions")
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges, f"grid{rows}x{cols}")


BUILDERS = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
    "triforce": (triforce, 0),
    "graph_I": (graph_i, 0),
    "binary_tree": (binary_tree, 1),
    "grid": (grid, 2),
}


def build_named(name: str, params: Iterable[int] = ()) -> Graph:
    """Build one of the named graphs, e.g. ``build_named("hypercube", [3])``."""
    try:
        builder, arity = BUILDERS[name]
    except KeyError:
        raise GraphError(f"unknown builder {name!r}; known: {', '.join(sorted(BUILDERS))}") from None
    params = [int(p) for p in params]
    if len(params) != arity:
        raise GraphError(f"builder {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


def parse_builtin(spec: str) -> Graph:
    """Parse compact names such as ``petersen``, ``Q4``, ``C5``, ``K1,4``, ``grid:3x4``, ``cycle:7``."""
    s = spec.strip()
    if ":" in s:
        name, _, args = s.partition(":")
        return build_named(name, [int(a) for a in args.replace("x", ",").split(",") if a])
    lowered = s.lower()
    if lowered in ("petersen", "triforce"):
        return build_named(lowered)
    if lowered in ("graph_i", "i"):
        return graph_i()
    prefixes = {"p": path, "c": cycle, "q": hypercube, "t": binary_tree}
    if s[:3].upper() == "K1," and s[3:].isdigit():
        return star(int(s[3:]))
    if s[:1].upper() == "K" and s[1:].isdigit():
        return complete(int(s[1:]))
    if s[:1].lower() in prefixes and s[1:].isdigit():
        return prefixes[s[:1].lower()](int(s[1:]))
    raise GraphError(f"cannot parse builtin graph {spec!r}")


# ---------------------------------------------------------------------------
# products


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """G1 □ G2 with vertex (a, b) numbered a * g2.n + b."""
    if g1.n == 0 or g2.n == 0:
        raise GraphError("cartesian product needs nonempty factors")
    n2 = g2.n
    edges = [(a * n2 + u, a * n2 + v) for a in range(g1.n) for u, v in g2.edges]
    edges += [(u * n2 + b, v * n2 + b) for b in range(n2) for u, v in g1.edges]
    name = f"{g1.name or 'G'}□{g2.name or 'H'}"
    return Graph.from_edges(g1.n * n2, edges, name)


def clone(g: Graph) -> Graph:
    """G □ K2: vertex 2i is the original copy of i, 2i+1 its twin."""
    h = cartesian_product(g, complete(2))
    return Graph(h.n, h.edges, f"cl({g.name or 'G'})")


# ---------------------------------------------------------------------------
# canonical forms


def _refine(masks: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; sub-cells are ordered by an isomorphism-invariant signature."""
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple((masks[v] & cm).bit_count() for cm in cell_masks) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            out.extend(groups[k] for k in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _leaf_code(masks: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = code << 1 | (mj >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)`` where ``order[i]`` is the vertex placed at position i.

    ``code`` is the minimal upper-triangle adjacency bit string over all
    orderings reachable by individualization and refinement, which is an
    isomorphism invariant and a complete one.
    """
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical form limited to n <= {MAX_CANONICAL_ORDER}, got {g.n}")
    masks = g.adjacency_masks
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(masks, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(masks, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        for v in cell:
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1 :])

    if g.n == 0:
        return 0, []
    search([list(range(g.n))])
    return best[0], best[1]


def canonical_form(g: Graph) -> bytes:
    """Certificate bytes: equal for two graphs iff they are isomorphic."""
    code, _ = canonical_labeling(g)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    """The representative of g's isomorphism class in canonical vertex order."""
    _, order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and len(g1.edges) == len(g2.edges) and canonical_form(g1) == canonical_form(g2)


def enumerate_connected(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class of connected graphs on n vertices.

    Every connected graph has a vertex whose removal leaves it connected, so
    order-n classes are all reached by attaching a new vertex to a nonempty
    neighbor set of an order-(n-1) representative.
    """
    if not 1 <= n <= MAX_ENUMERATION_ORDER:
        raise GraphError(f"enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}")
    level = {canonical_form(complete(1)): complete(1)}
    for order in range(2, n + 1):
        nxt: dict[bytes, Graph] = {}
        new = order - 1
        for g in level.values():
            for mask in range(1, 1 << new):
                extra = [(u, new) for u in range(new) if mask >> u & 1]
                h = Graph.from_edges(order, list(g.edges) + extra)
                cert = canonical_form(h)
                if cert not in nxt:
                    nxt[cert] = canonical_graph(h)
        level = nxt
    out = []
    for i, cert in enumerate(sorted(level)):
        g = level[cert]
        out.append(Graph(g.n, g.edges, f"G{n}_{i}"))
    return out


# ---------------------------------------------------------------------------
# file formats


def to_graph6(g: Graph) -> str:
    n = g.n
    if n < 63:
        head = chr(n + 63)
    elif n < 258048:
        head = "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    else:
        head = "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(sum(b << (5 - k) for k, b in enumerate(bits[i : i + 6])) + 63) for i in range(0, len(bits), 6)
    )
    return head + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s or any(not 63 <= ord(ch) <= 126 for ch in s):
        raise GraphError(f"not a graph6 string: {text!r}")
    data = [ord(ch) - 63 for ch in s]
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n = data[1] << 12 | data[2] << 6 | data[3]
        pos = 4
    else:
        n = 0
        for x in data[2:8]:
            n = n << 6 | x
        pos = 8
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - pos != need:
        raise GraphError(f"graph6 body has {len(data) - pos} bytes, expected {need} for n={n}")
    bits = [x >> (5 - k) & 1 for x in data[pos:] for k in range(6)]
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def to_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    """Parse ``n`` on the first line and one ``u v`` pair per following line.

    Blank lines and ``#`` comments are ignored. Errors name the offending line.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise GraphError(f"line {lineno}: expected vertex count, got {raw!r}")
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = nums
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: invalid edge {u} {v} for n={n}")
        edges.append((u, v))
    if n is None:
        raise GraphError("empty edge list")
    return Graph.from_edges(n, edges)


def load_graph(source: str) -> Graph:
    """Load a graph from a file (graph6 or edge list) or a builtin name."""
    import os

    if os.path.exists(source):
        with open(source) as fh:
            text = fh.read()
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        if first.startswith(">>graph6<<") or not first.split("#")[0].strip().isdigit():
            g = from_graph6(first)
        else:
            g = from_edgelist(text)
        return Graph(g.n, g.edges, os.path.basename(source))
    return parse_builtin(source)
