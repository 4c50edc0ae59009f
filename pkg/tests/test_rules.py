"""Legality conditions, P/N status, and winning-move search."""

import pytest
from hypothesis import given, settings, strategies as st

from ratlab import rules
from ratlab.sequences import rat_vector

dims = st.integers(min_value=2, max_value=8)
indices = st.integers(min_value=1, max_value=5000)


def legality(d, s):
    return str(rules.classify_subtraction(d, s).status)


def test_zero_subtraction():
    assert legality(3, (0, 0, 0)) == "ForbiddenZero"


def test_rat_subtractions_are_condition_a():
    assert legality(2, (1, 2)) == "ForbiddenA"
    assert legality(3, (3, 6, 11)) == "ForbiddenA"
    assert legality(4, (11, 21, 42, 83)) == "ForbiddenA"


def test_shortcut_subtractions_are_condition_b():
    # differences of rats: r(2) - r(1)
    assert legality(2, (2, 3)) == "ForbiddenB"
    assert legality(3, (1, 3, 7)) == "ForbiddenB"


def test_everyday_moves_are_allowed():
    assert legality(3, (0, 1, 3)) == "Allowed"
    assert legality(3, (1, 0, 0)) == "Allowed"
    assert legality(2, (1, 1)) == "Allowed"


@given(dims, indices)
def test_rats_forbidden(d, n):
    assert legality(d, rat_vector(d, n)) == "ForbiddenA"


@given(dims, indices, indices)
def test_rat_differences_forbidden(d, a, b):
    """Proper shortcuts r(a) - r(b), a > b, always trip condition b."""
    if a == b:
        a += 1
    a, b = max(a, b), min(a, b)
    s = tuple(p - q for p, q in zip(rat_vector(d, a), rat_vector(d, b)))
    assert legality(d, s) == "ForbiddenB"


@given(dims)
def test_unit_subtractions_allowed(d):
    for i in range(d):
        s = tuple(1 if j == i else 0 for j in range(d))
        assert legality(d, s) == "Allowed"


def test_narrow_variant_diverges():
    """The floor-only reading of condition a misfires both ways."""
    wide = rules.classify_subtraction(3, (3, 6, 11))
    narrow = rules.classify_subtraction(3, (3, 6, 11), narrow_a=True)
    assert str(wide.status) == "ForbiddenA" and narrow.allowed
    wide2 = rules.classify_subtraction(3, (2, 5, 11))
    narrow2 = rules.classify_subtraction(3, (2, 5, 11), narrow_a=True)
    assert wide2.allowed and str(narrow2.status) == "ForbiddenA"


def test_p_positions():
    assert rules.is_p_position((0, 0, 0))
    assert rules.is_p_position((1, 2, 4))
    assert not rules.is_p_position((1, 3, 7))
    assert not rules.is_p_position((2, 2, 2))


def test_winning_move_worked_example_d3():
    found = rules.winning_move((1, 3, 7))
    assert found.target == (1, 2, 4)
    assert found.subtraction == (0, 1, 3)
    assert found.rat_index == 1


def test_winning_move_worked_example_d4():
    found = rules.winning_move((7, 13, 27, 53))
    assert found.target == (5, 10, 19, 38)
    assert found.subtraction == (2, 3, 8, 15)


def test_winning_move_to_zero():
    found = rules.winning_move((0, 0, 1))
    assert found.target == (0, 0, 0)
    assert found.rat_index is None


def test_no_winning_move_from_p():
    assert rules.winning_move((1, 2, 4)) is None
    assert rules.winning_move((0, 0, 0)) is None


@given(dims, st.data())
@settings(max_examples=200)
def test_winning_move_lands_on_p(d, data):
    x = tuple(data.draw(st.integers(min_value=0, max_value=200)) for _ in range(d))
    found = rules.winning_move(x)
    if found is None:
        assert rules.is_p_position(x)
    else:
        assert rules.is_p_position(found.target)
        verdict = rules.is_legal_move(x, found.target)
        assert verdict.allowed


@given(dims, indices, indices)
def test_no_p_to_p(d, a, b):
    """No rat reaches another rat by an allowed subtraction."""
    if a == b:
        return
    a, b = max(a, b), min(a, b)
    verdict = rules.is_legal_move(rat_vector(d, a), rat_vector(d, b))
    assert not verdict.allowed


def test_ternary_recurrence_marks_condition_b():
    assert rules.ternary_recurrence((0, 0)) == (1,)
    for x2 in range(50):
        for x1 in range(x2 + 1):
            word = rules.ternary_recurrence((x1, x2))
            status = legality(2, (x1, x2))
            expected = status == "ForbiddenB" or (x1, x2) == (0, 0)
            assert (word is not None) == expected


def test_negative_subtraction_raises():
    with pytest.raises(rules.NegativeSubtraction):
        rules.is_legal_move((1, 2, 3), (2, 2, 3))


def test_witness_names_columns():
    verdict = rules.classify_subtraction(3, (1, 3, 7))
    assert not verdict.allowed
    assert any("i=2" in w or "i=3" in w or "mod" in w for w in verdict.witness)
