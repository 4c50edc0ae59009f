"""Brute-force ground truth and the claim registry."""

import functools

import numpy as np
import pytest

from ratlab import oracle, rules
from ratlab.sequences import rat_index_bound, rat_vector


def test_enumerate_r_matches_sequence():
    rats = oracle.enumerate_R(3, 60)
    expected = {(0, 0, 0)}
    for n in range(1, rat_index_bound(3, 60) + 1):
        v = rat_vector(3, n)
        if all(c <= 60 for c in v):
            expected.add(v)
    assert rats == expected


def test_shortcut_set_small():
    shortcuts = oracle.shortcut_set(2, 12)
    assert (2, 3) in shortcuts          # r(2) - r(1)
    assert (1, 3) in shortcuts          # r(3) - r(2)
    assert (3, 6) in shortcuts          # r(3) - r(1)
    assert (1, 2) not in shortcuts      # a rat, not a difference
    assert all(any(s) for s in shortcuts)


@pytest.mark.parametrize("d,bound", [(2, 60), (3, 25)])
def test_retrograde_agrees_with_rules(d, bound):
    table = oracle.retrograde_solve(oracle.cube(d, bound))
    for cell in table.p_cells():
        assert rules.is_p_position(cell)
    assert table.status((0,) * d) == "P"


def slow_grundy(d, bound):
    """Reference mex recursion, no arrays, for tiny boxes."""

    @functools.cache
    def value(x):
        seen = set()
        for cell in oracle._box_cells(d, max(x)):
            s = tuple(a - b for a, b in zip(x, cell))
            if any(c < 0 for c in s) or not any(s):
                continue
            if rules.classify_subtraction(d, s).allowed:
                seen.add(value(cell))
        v = 0
        while v in seen:
            v += 1
        return v

    return value


def test_mex_grundy_matches_slow_reference():
    table = oracle.mex_grundy(oracle.cube(2, 12))
    ref = slow_grundy(2, 12)
    for x1 in range(13):
        for x2 in range(13):
            assert table.grundy_at((x1, x2)) == ref((x1, x2))


def test_grundy_zero_exactly_on_p():
    table = oracle.mex_grundy(oracle.cube(3, 12))
    solve = oracle.retrograde_solve(oracle.cube(3, 12))
    assert np.array_equal(table.grundy == 0, ~solve.n_mask)


def test_cell_cap_enforced():
    with pytest.raises(ValueError):
        oracle.retrograde_solve(oracle.cube(4, 200), cap=10_000)


def test_verify_returns_report():
    report = oracle.verify("split", d=3, bound=500)
    assert report["pass"] is True
    assert report["claim"] == "split"
    assert report["counterexamples"] == []
    assert report["runtime_ms"] >= 0


def test_verify_unknown_claim():
    with pytest.raises(ValueError):
        oracle.verify("no-such-claim")


def test_verify_counterexamples_capped():
    report = oracle.verify("printed-rule-a", d=3, bound=60)
    assert report["pass"] is False
    assert 0 < len(report["counterexamples"]) <= 20


def test_expected_failures_documented():
    """The demo claims known to fail stay out of the desk suite."""
    names = {(claim, tuple(sorted(params.items())))
             for claim, params in oracle.DESK_SUITE}
    claims = {c for c, _ in names}
    assert "printed-rule-a" not in claims
    assert "rat-shift-not-shortcut" not in claims
    assert ("grundy-fast", (("bound", 60), ("d", 2))) not in names


def test_verify_all_smoke():
    reports = oracle.verify_all()
    assert all(r["pass"] for r in reports), [r["claim"] for r in reports if not r["pass"]]
