"""Rat sequence arithmetic: closed form, gaps, splitting, inversions."""

import pytest
from hypothesis import given, strategies as st

from ratlab import sequences as seq

dims = st.integers(min_value=2, max_value=10)
indices = st.integers(min_value=1, max_value=10_000)


def test_first_rat_vectors_d2():
    assert [seq.rat_vector(2, n) for n in range(1, 5)] == [(1, 2), (3, 5), (4, 8), (6, 11)]


def test_first_rat_vectors_d3():
    assert seq.rat_vector(3, 1) == (1, 2, 4)
    assert seq.rat_vector(3, 2) == (3, 6, 11)
    assert seq.rat_vector(3, 3) == (5, 9, 18)


def test_known_d4_vectors():
    assert seq.rat_vector(4, 6) == (11, 21, 42, 83)
    assert seq.rat_vector(4, 9) == (16, 32, 64, 128)


def test_mersenne():
    assert [seq.mersenne(d) for d in (2, 3, 4, 5)] == [3, 7, 15, 31]


@given(dims, indices)
def test_columns_strictly_increasing(d, n):
    assert all(a < b for a, b in zip(seq.rat_vector(d, n), seq.rat_vector(d, n + 1)))


@given(dims, indices, st.integers(min_value=1, max_value=10))
def test_column_period_saltus(d, n, i):
    """Each column repeats with period 2^(d-i) and saltus 2^d - 1."""
    i = min(i, d)
    step = 1 << (d - i)
    assert seq.rat_entry(d, i, n + step) == seq.rat_entry(d, i, n) + seq.mersenne(d)


@given(dims, st.integers(min_value=2, max_value=10_000), st.integers(min_value=1, max_value=10))
def test_gap_closed_form(d, n, j):
    j = min(j, d)
    assert seq.gap(d, j, n) == seq.rat_entry(d, j, n) - seq.rat_entry(d, j, n - 1)


@given(dims, indices)
def test_halving_up_the_vector(d, n):
    """Consecutive coordinates satisfy x_i = ceil(x_{i+1} / 2)."""
    v = seq.rat_vector(d, n)
    for a, b in zip(v, v[1:]):
        assert a == (b + 1) // 2


@pytest.mark.parametrize("d", range(2, 7))
def test_split_small(d):
    report = seq.split_check(d, 2000)
    assert report.covered
    assert report.duplicates == [] and report.missing == []


@given(dims, indices)
def test_rat_index_roundtrip(d, n):
    assert seq.rat_index_of(seq.rat_vector(d, n)) == n


@given(dims, indices)
def test_rat_index_rejects_neighbours(d, n):
    v = seq.rat_vector(d, n)
    bumped = v[:-1] + (v[-1] + 1,)
    assert seq.rat_index_of(bumped) is None


@given(dims, indices)
def test_rightshift_agrees_on_rats(d, n):
    assert seq.rightshift_membership(seq.rat_vector(d, n))


@given(st.lists(st.integers(min_value=0, max_value=500), min_size=2, max_size=8))
def test_rightshift_agrees_off_rats(coords):
    x = tuple(coords)
    assert seq.rightshift_membership(x) == (seq.rat_index_of(x) is not None)


@given(dims, indices)
def test_ratwheel_period(d, n):
    """Rat vectors repeat in the wheel quotient with index period 2^(d-1)."""
    v = seq.rat_vector(d, n)
    w = seq.rat_vector(d, n + (1 << (d - 1)))
    assert seq.rat_wheel_reduce(v) == seq.rat_wheel_reduce(w)


@given(dims, indices)
def test_column_sum_monotone(d, n):
    assert seq.column_sum(d, n) < seq.column_sum(d, n + 1)


@given(dims, indices)
def test_index_bound_tight(d, n):
    last = seq.rat_entry(d, d, n)
    assert seq.rat_index_bound(d, last) == n
    assert seq.rat_index_bound(d, last - 1) == n - 1


def test_check_vector_errors():
    with pytest.raises(ValueError):
        seq.check_vector((1, -2, 3))
    with pytest.raises(ValueError):
        seq.check_vector((1, 2, 3), 4)
    with pytest.raises(ValueError):
        seq.check_vector((5,))
    with pytest.raises(ValueError):
        seq.rat_vector(1, 3)
    with pytest.raises(ValueError):
        seq.rat_vector(3, 0)
