"""Rat sequences: the standard form, its gaps, splitting, and membership tests.

The d columns r_1..r_d are arithmetic periodic: column j repeats with period
2^(d-j) and saltus 2^d - 1.  Together the columns split the positive integers,
which is what makes the vectors usable as P-positions.
"""

from dataclasses import dataclass, field


def mersenne(d: int) -> int:
    """2^d - 1, the modulus shared by every column of dimension d."""
    check_dimension(d)
    return (1 << d) - 1


def check_dimension(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {d!r}")


def check_vector(x, d: int | None = None) -> tuple[int, ...]:
    """Validate a heap vector: non-negative integer entries, length d."""
    v = tuple(x)
    if d is not None and len(v) != d:
        raise ValueError(f"expected a vector of length {d}, got {len(v)}")
    check_dimension(len(v))
    for e in v:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"heap entries must be non-negative integers, got {e!r}")
    return v


def rat_entry(d: int, i: int, n: int) -> int:
    """r_i(n) = floor((2^d - 1) n / 2^(d-i)) - 2^(i-1) + 1."""
    m = mersenne(d)
    if not 1 <= i <= d:
        raise ValueError(f"column index must be in 1..{d}, got {i}")
    if n < 1:
        raise ValueError(f"row index must be >= 1, got {n}")
    return ((m * n) >> (d - i)) - (1 << (i - 1)) + 1


def rat_vector(d: int, n: int) -> tuple[int, ...]:
    """The n-th rat vector (r_1(n), ..., r_d(n))."""
    return tuple(rat_entry(d, i, n) for i in range(1, d + 1))


def gap(d: int, j: int, n: int) -> int:
    """Backward column difference r_j(n) - r_j(n-1), for n >= 2.

    Closed form: 2^j - 1 when n = 1 (mod 2^(d-j)), else 2^j.  For j = d the
    period is 1, so every gap in the last column is 2^d - 1.
    """
    check_dimension(d)
    if not 1 <= j <= d:
        raise ValueError(f"column index must be in 1..{d}, got {j}")
    if n < 2:
        raise ValueError(f"gaps need n >= 2, got {n}")
    q = 1 << (d - j)
    return (1 << j) - 1 if n % q == 1 % q else (1 << j)


@dataclass(frozen=True)
class SplitReport:
    """Result of checking that the columns split 1..bound."""

    d: int
    bound: int
    covered: bool
    duplicates: list[int] = field(default_factory=list)
    missing: list[int] = field(default_factory=list)

    # report at most this many offending values either way
    LIST_CAP = 100


def split_check(d: int, bound: int) -> SplitReport:
    """Verify every integer in 1..bound is r_j(n) for exactly one (j, n)."""
    check_dimension(d)
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    seen = bytearray(bound + 1)
    duplicates: list[int] = []
    for j in range(1, d + 1):
        n = 1
        while True:
            v = rat_entry(d, j, n)
            if v > bound:
                break
            if seen[v] and len(duplicates) < SplitReport.LIST_CAP:
                duplicates.append(v)
            seen[v] = min(seen[v] + 1, 2)
            n += 1
    missing = [v for v in range(1, bound + 1) if not seen[v]]
    del missing[SplitReport.LIST_CAP :]
    covered = not duplicates and not missing
    return SplitReport(d=d, bound=bound, covered=covered, duplicates=duplicates, missing=missing)


def rat_index_of(x) -> int | None:
    """Invert the standard form: n such that x = r(n), or None.

    The last column has integral slope 2^d - 1, so it pins the only candidate
    index; the remaining columns are then verified exactly.
    """
    v = check_vector(x)
    d = len(v)
    m = mersenne(d)
    num = v[-1] + (1 << (d - 1)) - 1
    if num % m:
        return None
    n = num // m
    if n < 1:
        return None
    return n if rat_vector(d, n) == v else None


def rightshift_membership(x) -> bool:
    """Membership in the rat set via the binary right-shift characterization.

    Checks floor((x_i + 1)/2) = x_{i-1} for every i >= 2, then the congruence
    alpha (2^d - 1) = x_d - 2^(d-1) (mod 2^(d-1)(2^d - 1)), where alpha is the
    binary word of complemented dropped bits, most significant digit from x_2.
    Deliberately does not call rat_index_of.
    """
    v = check_vector(x)
    d = len(v)
    m = mersenne(d)
    alpha = 0
    for i in range(1, d):
        if (v[i] + 1) >> 1 != v[i - 1]:
            return False
        alpha = (alpha << 1) | (v[i] & 1)
    period = (1 << (d - 1)) * m
    return (alpha * m) % period == (v[-1] - (1 << (d - 1))) % period


def rat_wheel_reduce(x, d: int | None = None) -> tuple[int, ...]:
    """Reduce componentwise mod (m, 2m, ..., 2^(d-1) m) with m = 2^d - 1.

    Rat vectors repeat in this quotient with index period 2^(d-1).
    """
    v = check_vector(x, d)
    m = mersenne(len(v))
    return tuple(e % ((1 << j) * m) for j, e in enumerate(v))


def column_sum(d: int, n: int) -> int:
    """Coordinate sum of the n-th rat vector; strictly increasing in n."""
    return sum(rat_vector(d, n))


def rat_index_bound(d: int, last_coord: int) -> int:
    """Largest n with r_d(n) <= last_coord (0 when none)."""
    return (last_coord + (1 << (d - 1)) - 1) // mersenne(d)
