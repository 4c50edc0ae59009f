"""Grundy values and sum-of-games advice.

The claimed closed form for the Grundy value of a position: 0 on the rat
vectors and at the origin, the plain coordinate sum everywhere else.
That would make disjunctive sums with nim heaps (or more boards)
playable without any table: XOR the values and steer one component to
the needed value.

The closed form does not actually survive the mex oracle.  For d = 2 it
overshoots by exactly 3 on the whole line (1, 5+3k), k >= 0: from
(1, 5) the only candidates for value 3 are (1, 2), a zero, and (0, 3),
reachable only by subtracting the rat vector (1, 2), which is forbidden;
the gap then climbs the column in steps of 3.  No deviation is known for
d = 3 in the checked box.  grundy_fast still reports the closed form, as
stated; CHECKED_BOXES and KNOWN_DEVIATIONS record where the oracle
agrees and where it does not.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import rules, sequences
from .sequences import check_vector, column_sum, rat_index_of

# boxes on which the closed form has been compared against the mex recursion
CHECKED_BOXES = {2: (60, 60), 3: (16, 16, 16)}

# cells inside the checked boxes where the comparison fails
KNOWN_DEVIATIONS = {
    2: "the line x = (1, 5+3k): true value x_1 + x_2 - 3",
    3: "none found",
}

# candidate compositions examined before giving up on a target sum
SCAN_CAP = 2_000_000


class UnreachableTarget(ValueError):
    """No legal subtraction reaches the needed Grundy value."""


@dataclass(frozen=True)
class GrundyReport:
    position: tuple[int, ...]
    value: int
    rat_index: int | None
    method: str = "fast-formula"
    checked_box: tuple[int, ...] | None = None


def grundy_fast(x) -> GrundyReport:
    """Closed-form Grundy value of a single board position.

    The value is the formula's, even on the known d=2 deviation line;
    checked_box says how far the formula has been compared against the
    mex oracle (see KNOWN_DEVIATIONS for the outcome).
    """
    x = check_vector(x)
    box = CHECKED_BOXES.get(len(x))
    if not any(x):
        return GrundyReport(x, 0, None, checked_box=box)
    n = rat_index_of(x)
    return GrundyReport(x, 0 if n is not None else sum(x), n, checked_box=box)


def gamma_statistic(d: int, n: int) -> int:
    """Number of rat vectors whose coordinates sum to n (always 0 or 1).

    Column sums are strictly increasing in the index, so a binary search
    settles membership.
    """
    sequences.check_dimension(d)
    if n < column_sum(d, 1):
        return 0
    lo, hi = 1, n
    while lo < hi:
        mid = (lo + hi) // 2
        if column_sum(d, mid) < n:
            lo = mid + 1
        else:
            hi = mid
    return 1 if column_sum(d, lo) == n else 0


@dataclass(frozen=True)
class SumComponent:
    """One component of a disjunctive sum: a nim heap or a board."""

    kind: str  # "nim" or "rat"
    position: tuple[int, ...]

    @classmethod
    def nim(cls, heap: int) -> "SumComponent":
        if not isinstance(heap, int) or heap < 0:
            raise ValueError(f"nim heap must be a nonnegative int, got {heap!r}")
        return cls("nim", (heap,))

    @classmethod
    def rat(cls, x) -> "SumComponent":
        return cls("rat", check_vector(x))

    @property
    def value(self) -> int:
        if self.kind == "nim":
            return self.position[0]
        return grundy_fast(self.position).value


@dataclass(frozen=True)
class AdvisorMove:
    component: int  # index into the component list
    kind: str
    target: tuple[int, ...]
    subtraction: tuple[int, ...]


def _compositions(total: int, limits: tuple[int, ...]):
    """All y with sum(y) == total and 0 <= y_i <= limits[i], ascending lex."""
    if len(limits) == 1:
        if 0 <= total <= limits[0]:
            yield (total,)
        return
    rest = sum(limits[1:])
    for v in range(max(0, total - rest), min(total, limits[0]) + 1):
        for tail in _compositions(total - v, limits[1:]):
            yield (v,) + tail


def _board_move_to(x: tuple[int, ...], needed: int) -> tuple | None:
    """A legal subtraction taking the board from value sum(x) to `needed`.

    Tries single-coordinate reductions left to right, then scans all
    compositions of the target sum in lex order.  The target must sit
    outside the zero-value set so its Grundy value really is `needed`.
    """
    drop = sum(x) - needed
    for j in range(len(x)):
        if x[j] < drop:
            continue
        y = x[:j] + (x[j] - drop,) + x[j + 1 :]
        s = x[:j] + (drop,) + x[j + 1 :]
        if rat_index_of(y) is None and rules.classify_subtraction(len(x), s).allowed:
            return y
    seen = 0
    for y in _compositions(needed, x):
        seen += 1
        if seen > SCAN_CAP:
            raise UnreachableTarget(
                f"no reachable position of value {needed} from {x} "
                f"within {SCAN_CAP} candidates"
            )
        if rat_index_of(y) is not None:
            continue
        s = tuple(a - b for a, b in zip(x, y))
        if rules.classify_subtraction(len(x), s).allowed:
            return y
    raise UnreachableTarget(f"no reachable position of value {needed} from {x}")


def sum_advisor(components: list[SumComponent]) -> AdvisorMove | None:
    """Winning move in a disjunctive sum, or None when none exists.

    Standard Sprague-Grundy play: XOR the component values; if zero the
    position is lost.  Otherwise fix the leftmost component whose value
    can be lowered to its XOR-complement.
    """
    if not components:
        return None
    total = 0
    for c in components:
        total ^= c.value
    if total == 0:
        return None
    for idx, c in enumerate(components):
        g = c.value
        needed = g ^ total
        if needed >= g:
            continue  # some component always has needed < g (top XOR bit)
        if c.kind == "nim":
            heap = c.position[0]
            return AdvisorMove(idx, "nim", (needed,), (heap - needed,))
        if needed == 0:
            found = rules.winning_move(c.position)
            return AdvisorMove(idx, "rat", found.target, found.subtraction)
        y = _board_move_to(c.position, needed)
        s = tuple(a - b for a, b in zip(c.position, y))
        return AdvisorMove(idx, "rat", y, s)
    raise UnreachableTarget("XOR total is nonzero but no component can move to it")
