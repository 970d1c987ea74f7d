"""Well-spaced rows: sets of positive integers with no pair ``(a, 2a)`` and no 3-term
arithmetic progression.

A set of vertex labels is a proper TDL of the complete graph K_n exactly when
it is an n-element well-spaced row, so the least possible maximum ``E(n)``
is chi_td(K_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

# Upper end of the range the exact search is budgeted for; larger n still
# works but runtime grows steeply.
BUDGETED_MAX_N = 20


@dataclass(frozen=True)
class WsrStats:
    n: int
    os: int
    e: int
    d: int
    mi1: int
    mi2: int

    def as_row(self) -> tuple[int, int, int, int, int, int]:
        return (self.n, self.os, self.e, self.d, self.mi1, self.mi2)


def is_wsr(s: Iterable[int]) -> bool:
    elems = sorted(set(s))
    if any(x < 1 for x in elems):
        raise ValueError("well-spaced rows contain positive integers only")
    present = set(elems)
    for i, a in enumerate(elems):
        if 2 * a in present:
            return False
        for c in elems[i + 1 :]:
            if (a + c) % 2 == 0 and (a + c) // 2 in present:
                return False
    return True


def is_non_averaging(s: Iterable[int]) -> bool:
    """No element is the average of two others."""
    elems = sorted(set(s))
    present = set(elems)
    return not any(
        (a + c) % 2 == 0 and (a + c) // 2 in present
        for i, a in enumerate(elems)
        for c in elems[i + 1 :]
    )


def greedy_wsr(n: int) -> list[int]:
    """Append the least integer that keeps the row well spaced, n times."""
    if n < 1:
        raise ValueError("n must be >= 1")
    row: list[int] = []
    present: set[int] = set()
    candidate = 1
    while len(row) < n:
        ok = candidate % 2 == 1 or candidate // 2 not in present
        if ok:
            # candidate is the largest element, so it can only end a progression
            ok = all(2 * b - candidate not in present for b in row if 2 * b > candidate)
        if ok:
            row.append(candidate)
            present.add(candidate)
        candidate += 1
    return row


def greedy_element(k: int) -> int:
    """k-th greedy element: the binary digits of k read in base 3."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return int(format(k, "b"), 3)


# ---------------------------------------------------------------------------
# minimal rows


def _rows_with_max(n: int, m: int, capacity: list[int]) -> list[tuple[int, ...]]:
    """All n-element rows with largest element exactly m.

    Elements are chosen in decreasing order. ``capacity[x]`` bounds the size
    of any row inside ``{1..x}``; it is exact below the current m because the
    smaller E values are already known.
    """
    rows: list[tuple[int, ...]] = []
    chosen = [m]

    def extend(forbidden: int, below: int) -> None:
        need = n - len(chosen)
        if need == 0:
            rows.append(tuple(reversed(chosen)))
            return
        avail = ((1 << below) - 2) & ~forbidden
        if avail.bit_count() < need:
            return
        while avail:
            t = avail.bit_length() - 1
            if capacity[t] < need:
                return
            avail ^= 1 << t
            nf = forbidden
            if t % 2 == 0:
                nf |= 1 << (t // 2)
            for b in chosen:
                x = 2 * t - b
                if x >= 1:
                    nf |= 1 << x
            chosen.append(t)
            extend(nf, t)
            chosen.pop()

    extend(1 << (m // 2) if m % 2 == 0 else 0, m)
    return rows


@lru_cache(maxsize=None)
def _minimal_rows(n: int) -> tuple[int, tuple[tuple[int, ...], ...]]:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1, ((1,),)
    known = [_minimal_rows(k)[0] for k in range(1, n)]
    m = known[-1] + 1
    while True:
        # rows of size k fit inside {1..x} iff E(k) <= x; exact for x < m <= E(n)
        capacity = [sum(1 for e in known if e <= x) for x in range(m + 1)]
        rows = _rows_with_max(n, m, capacity)
        if rows:
            return m, tuple(sorted(rows))
        m += 1


def minimal_max(n: int) -> int:
    """E(n), the least possible largest element of an n-element well-spaced row."""
    return _minimal_rows(n)[0]


def enumerate_minimal_wsrs(n: int) -> list[tuple[int, ...]]:
    """Every n-element row whose largest element is E(n), sorted."""
    return list(_minimal_rows(n)[1])


def minimal_wsr_stats(n: int) -> WsrStats:
    e, rows = _minimal_rows(n)
    firsts = [r[0] for r in rows]
    return WsrStats(
        n=n,
        os=greedy_element(n),
        e=e,
        d=len(rows),
        mi1=min(min(r) for r in rows),
        mi2=max(firsts),
    )


def wsr_table(max_n: int) -> list[WsrStats]:
    return [minimal_wsr_stats(n) for n in range(1, max_n + 1)]


def j_sequence(n: int) -> int:
    """First difference E(n+1) - E(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return minimal_max(n + 1) - minimal_max(n)


def chi_td_complete(n: int) -> int:
    return minimal_max(n)


def capacity(x: int) -> int:
    """Largest size of a well-spaced row inside ``{1..x}``."""
    k = 0
    while minimal_max(k + 1) <= x:
        k += 1
    return k
