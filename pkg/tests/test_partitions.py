from math import comb

import pytest
from hypothesis import given, strategies as st

from schubgl.partitions import Partition, add_ones, enumerate_box, partitions_of, remove_part


def P(*parts):
    return Partition(parts)


@pytest.mark.parametrize("lam, i, expected", [
    (P(2, 2), 1, P(2)),
    (P(3, 1), 2, P(3)),
    (P(5, 3, 3, 1), 3, P(5, 3, 1)),
    (P(2), 2, P(2)),  # the absent second part is zero
])
def test_remove_part(lam, i, expected):
    assert remove_part(lam, i) == expected


def test_remove_part_rejects_non_positive_index():
    with pytest.raises(ValueError):
        remove_part(P(2, 1), 0)


@pytest.mark.parametrize("lam, j, expected", [
    (P(2, 1), 2, P(3, 2)),
    (P(), 3, P(1, 1, 1)),
    (P(4, 4), 4, P(5, 5, 1, 1)),
])
def test_add_ones(lam, j, expected):
    assert add_ones(lam, j) == expected


def test_add_ones_needs_enough_rows():
    with pytest.raises(ValueError):
        add_ones(P(2, 1, 1), 2)


def test_box_examples():
    assert enumerate_box(2, 2) == [P(), P(1), P(2), P(1, 1), P(2, 1), P(2, 2)]
    assert enumerate_box(0, 5) == [P()]
    assert enumerate_box(2, 2, degree=2) == [P(2), P(1, 1)]


@pytest.mark.parametrize("r", range(5))
@pytest.mark.parametrize("c", range(5))
def test_box_size_is_binomial(r, c):
    box = enumerate_box(r, c)
    assert len(box) == comb(r + c, r) == len(set(box))
    assert all(lam.length() <= r and (not lam or lam[0] <= c) for lam in box)


def test_canonical_form_and_text():
    assert Partition((2, 1, 0, 0)) == P(2, 1)
    assert Partition(()) == Partition((0,))
    assert str(P()) == "0" and str(P(2, 1)) == "(2,1)"
    assert P().to_json() == [] and P(2, 2).to_json() == [2, 2]
    assert Partition.parse("2,2") == P(2, 2)
    assert Partition.parse("0") == P()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


@given(st.lists(st.integers(0, 6), max_size=5))
def test_add_ones_adds_weight(parts):
    lam = Partition(sorted(parts, reverse=True))
    r = max(lam.length(), 1)
    assert add_ones(lam, r).weight() == lam.weight() + r


@given(st.integers(0, 8), st.integers(0, 4))
def test_partitions_of_weight_and_order(d, max_len):
    parts = partitions_of(d, max_len)
    assert all(lam.weight() == d and lam.length() <= max_len for lam in parts)
    assert parts == sorted(parts, reverse=True)
