"""Saturability, the small-order survey, and clone / product bound checks."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import solver
from .graphs import Graph, canonical_form, cartesian_product, clone, complete, enumerate_connected, to_graph6
from .solver import SearchConfig
from .store import ResultRecord, ResultStore

NOT_APPLICABLE = "not_applicable"
NOT_SATURABLE = "not_saturable"
SATURABLE = "saturable"
SUPERSATURABLE = "supersaturable"


@dataclass(frozen=True)
class SaturabilityVerdict:
    chi: int
    order: int
    applicable: bool
    minimal_count: int | None
    saturated_count: int | None
    cls: str

    @property
    def is_saturable(self) -> bool:
        return self.cls in (SATURABLE, SUPERSATURABLE)


def is_saturated(labels, chi: int) -> bool:
    return len(labels) == chi and set(labels) == set(range(1, chi + 1))


def saturability(g: Graph, cfg: SearchConfig | None = None, chi: int | None = None) -> SaturabilityVerdict:
    """Classify g from the full list of its chi_td-labelings.

    A saturated labeling uses exactly the labels 1..n on an order-n graph with
    chi_td = n. Only such graphs are classified; others are ``not_applicable``.
    """
    if chi is None:
        chi = solver.chi_td(g, cfg).chi
    if chi != g.n:
        return SaturabilityVerdict(chi, g.n, False, None, None, NOT_APPLICABLE)
    labelings = solver.enumerate_tdls(g, chi, cfg)
    saturated = sum(1 for f in labelings if is_saturated(f, chi))
    if saturated == 0:
        cls = NOT_SATURABLE
    elif saturated == len(labelings):
        cls = SUPERSATURABLE
    else:
        cls = SATURABLE
    return SaturabilityVerdict(chi, g.n, True, len(labelings), saturated, cls)


@dataclass
class SurveySummary:
    order: int
    scanned: int
    chi_equals_order: int
    saturable: int
    supersaturable: int
    records: list[dict]

    def saturable_graphs(self) -> list[dict]:
        return [r for r in self.records if r["class"] in (SATURABLE, SUPERSATURABLE)]


def survey_order(n: int, cfg: SearchConfig | None = None, store: ResultStore | None = None) -> SurveySummary:
    """Classify every connected graph of order n, resuming from ``store`` when given."""
    records = []
    query = {"op": "saturability"}
    for g in enumerate_connected(n):
        cert = canonical_form(g).hex()
        cached = store.get(cert, query) if store is not None else None
        if cached is not None:
            records.append(cached.value)
            continue
        t0 = time.monotonic()
        verdict = saturability(g, cfg)
        rec = {
            "certificate": cert,
            "graph6": to_graph6(g),
            "edges": [list(e) for e in g.sorted_edges()],
            "diameter": g.diameter(),
            "chi": verdict.chi,
            "minimal_count": verdict.minimal_count,
            "saturated_count": verdict.saturated_count,
            "class": verdict.cls,
        }
        if store is not None:
            store.put(ResultRecord(cert, query, rec, time.monotonic() - t0))
        records.append(rec)
    return SurveySummary(
        order=n,
        scanned=len(records),
        chi_equals_order=sum(1 for r in records if r["chi"] == n),
        saturable=sum(1 for r in records if r["class"] in (SATURABLE, SUPERSATURABLE)),
        supersaturable=sum(1 for r in records if r["class"] == SUPERSATURABLE),
        records=records,
    )


def check_clone_bound(g: Graph, cfg: SearchConfig | None = None) -> dict:
    """chi_td of g and of its clone against the doubling bound 2 chi_td(g) + 1."""
    chi_g = solver.chi_td(g, cfg).chi
    res = solver.chi_td(clone(g), cfg, known_lower=(chi_g, "subgraph"))
    bound = 2 * chi_g + 1
    return {
        "chi_g": chi_g,
        "chi_clone": res.chi,
        "bound_2chi_plus_1": bound,
        "holds": res.chi <= bound,
        "tight": res.chi == bound,
        "clone_exceeds": res.chi > chi_g,
        "witness": res.witness,
    }


def clone_complete_labeling(n: int) -> list[int]:
    """Labeling of cl(K_n) with largest label at most 2 E(n).

    A minimal row on one copy, the row shifted by E(n) on the other, except
    that the twin of the largest vertex takes a small label (1 or 2) missing
    from the row. Every minimal row is tried. For n = 3 the only minimal row
    is (1, 3, 4), whose twin label 2 doubles into 4, so no labeling of this
    shape exists and ``ValueError`` is raised.
    """
    from .labeling import validate
    from .wsr import enumerate_minimal_wsrs

    if n < 1:
        raise ValueError("needs n >= 1")
    g = clone(complete(n))
    for row in enumerate_minimal_wsrs(n):
        e = row[-1]
        for small in (1, 2):
            if small in row:
                continue
            labels = [0] * (2 * n)
            for i, a in enumerate(row):
                labels[2 * i] = a
                labels[2 * i + 1] = a + e
            labels[2 * (n - 1) + 1] = small
            if not validate(g, labels):
                return labels
    raise ValueError(f"no shifted-row labeling of cl(K{n})")


def check_product_bound(g: Graph, m: int, cfg: SearchConfig | None = None) -> dict:
    """chi_td(K_m □ g) against m chi_td(g) + m(m-1)/2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    chi_g = solver.chi_td(g, cfg).chi
    h = cartesian_product(complete(m), g)
    res = solver.chi_td(h, cfg, known_lower=(chi_g, "subgraph"))
    bound = m * chi_g + m * (m - 1) // 2
    return {"m": m, "chi_g": chi_g, "chi_product": res.chi, "bound": bound, "holds": res.chi <= bound}
