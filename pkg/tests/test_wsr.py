import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_minimal_max
from tdlab import wsr

E_VALUES = [1, 3, 4, 8, 10, 12, 13, 19, 23, 25, 29, 31, 35, 39, 40, 50, 53, 57, 62, 70]


def test_row_checks():
    assert wsr.is_wsr([1, 3, 4, 9, 10])
    assert not wsr.is_wsr([1, 2])
    assert not wsr.is_wsr([1, 3, 5])
    assert wsr.is_non_averaging([0, 1, 3, 4])
    assert not wsr.is_non_averaging([0, 2, 3, 4])


@given(st.sets(st.integers(1, 30), max_size=8))
def test_wsr_is_non_averaging_with_zero(s):
    assert wsr.is_wsr(s) == wsr.is_non_averaging(s | {0})


def test_greedy_rows():
    assert wsr.greedy_wsr(5) == [1, 3, 4, 9, 10]
    assert wsr.greedy_element(13) == 37
    assert wsr.greedy_element(20) == 90
    assert wsr.is_wsr(wsr.greedy_wsr(40))


def test_greedy_formula_agrees():
    row = wsr.greedy_wsr(256)
    assert [wsr.greedy_element(k) for k in range(1, 257)] == row


def test_minimal_max_matches_brute_force():
    assert [brute_minimal_max(n) for n in range(1, 9)] == E_VALUES[:8]
    assert [wsr.minimal_max(n) for n in range(1, 9)] == E_VALUES[:8]


def test_minimal_rows_are_minimal_and_complete():
    for n in range(1, 8):
        e = wsr.minimal_max(n)
        brute = [r + (e,) for r in itertools.combinations(range(1, e), n - 1) if wsr.is_wsr(r + (e,))]
        assert wsr.enumerate_minimal_wsrs(n) == sorted(brute)


def test_table_prefix():
    rows = [s.as_row() for s in wsr.wsr_table(8)]
    assert rows[3] == (4, 9, 8, 4, 1, 2)
    assert rows[7] == (8, 27, 19, 2, 1, 2)


def test_j_and_complete_graphs():
    assert wsr.j_sequence(15) == 10
    assert wsr.chi_td_complete(1) == 1
    assert wsr.chi_td_complete(8) == 19


def test_capacity():
    assert wsr.capacity(3) == 2
    assert wsr.capacity(19) == 8
    assert wsr.capacity(18) == 7


def test_stats_inequalities_small():
    for s in wsr.wsr_table(12):
        assert s.mi1 <= s.mi2 <= s.e <= s.os
        if s.d == 1:
            assert s.mi1 == s.mi2


def test_bad_arguments():
    with pytest.raises(ValueError):
        wsr.j_sequence(0)
