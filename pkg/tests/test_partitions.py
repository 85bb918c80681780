from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from multiorder import (
    Box,
    Multipartition,
    Partition,
    boxes,
    enumerate_multipartitions,
    enumerate_partitions,
    multipartition,
    removable_boxes,
)
from oracles import count_multipartitions, count_partitions


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((-1,))
    assert Partition((3, 0, 0)).rows == (3,)
    assert Partition((0,)).rows == ()
    assert Partition(()).size == 0


def test_partition_str_round():
    assert str(Partition((2, 1))) == "(2,1)"
    assert str(Partition(())) == "()"
    assert str(multipartition((2, 1), 0)) == "(2,1)|()"


def test_enumerate_partitions_small():
    assert [p.rows for p in enumerate_partitions(0)] == [()]
    assert [p.rows for p in enumerate_partitions(2)] == [(2,), (1, 1)]
    assert enumerate_partitions(6)[0].rows == (6,)
    assert enumerate_partitions(6)[-1].rows == (1,) * 6
    assert len(enumerate_partitions(6)) == 11


@pytest.mark.parametrize("n", range(9))
def test_partition_counts_match_oracle(n):
    assert len(enumerate_partitions(n)) == count_partitions(n, n)


def test_enumerate_partitions_reverse_lex():
    for n in range(8):
        rows = [p.rows for p in enumerate_partitions(n)]
        assert rows == sorted(rows, reverse=True)
        assert len(set(rows)) == len(rows)


def test_enumerate_multipartitions_order():
    got = [str(m) for m in enumerate_multipartitions(2, 2)]
    assert got == ["(2)|()", "(1,1)|()", "(1)|(1)", "()|(2)", "()|(1,1)"]
    assert [str(m) for m in enumerate_multipartitions(0, 3)] == ["()|()|()"]


def test_enumerate_multipartitions_counts():
    for n in range(6):
        for r in range(1, 5):
            universe = enumerate_multipartitions(n, r)
            assert len(universe) == count_multipartitions(n, r)
            assert len(set(universe)) == len(universe)


def test_enumeration_contains_minimal_pair(minimal_pair):
    lam, mu, _ = minimal_pair
    universe = enumerate_multipartitions(6, 4)
    assert lam in universe and mu in universe


def test_boxes_examples(worked_mp):
    assert boxes(multipartition(0, 0)) == ()
    assert boxes(multipartition((2, 1))) == (
        Box(0, 0, 0),
        Box(0, 1, 0),
        Box(0, 0, 1),
    )
    assert len(boxes(worked_mp)) == 8


def test_boxes_membership_invariant():
    for n in range(6):
        for r in (1, 2):
            for mp in enumerate_multipartitions(n, r):
                bs = boxes(mp)
                assert len(bs) == n
                assert all(mp.has_box(b) for b in bs)
                assert len(set(bs)) == len(bs)


def test_removable_boxes_examples():
    assert removable_boxes(Partition((3, 3, 1))) == [(2, 1), (0, 2)]
    assert removable_boxes(Partition((1,))) == [(0, 0)]
    assert removable_boxes(Partition(())) == []


def test_removal_yields_smaller_partition():
    for n in range(1, 8):
        for p in enumerate_partitions(n):
            for col, row in p.removable_cells():
                smaller = p.remove_cell(col, row)
                assert smaller.size == n - 1


def test_add_remove_inverse():
    for n in range(7):
        for p in enumerate_partitions(n):
            for col, row in p.addable_cells():
                bigger = p.add_cell(col, row)
                assert bigger.size == n + 1
                assert bigger.remove_cell(col, row) == p


@given(st.data())
def test_remove_then_add_round_trip(data):
    n = data.draw(st.integers(1, 7))
    parts = enumerate_partitions(n)
    p = parts[data.draw(st.integers(0, len(parts) - 1))]
    cells = p.removable_cells()
    col, row = cells[data.draw(st.integers(0, len(cells) - 1))]
    assert p.remove_cell(col, row).add_cell(col, row) == p


def test_multipartition_requires_component():
    with pytest.raises(ValueError):
        Multipartition(())


def test_no_duplicate_multipartitions_small():
    for n in range(5):
        for r in range(1, 5):
            universe = enumerate_multipartitions(n, r)
            for a, b in combinations(range(len(universe)), 2):
                assert universe[a] != universe[b]
