"""Difference fractals of the shortcut matrix and related conjecture data.

Decoding each shortcut row's ternary word as a base-3 integer and walking
the rows in reverse order yields a sequence whose consecutive differences
form Cantor-like patterns.  This module computes those difference
profiles, the conjectured sigma vectors for the last matrix column, the
tau description of the distinct difference values, and scatter documents
for eyeballing the patterns.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from math import comb
from pathlib import Path

from .matrices import build_shortcut_matrix, row_word
from .sequences import check_dimension, mersenne

SIGMA_MAX = 16
PROFILE_MAX = 12


def sigma(d: int) -> tuple[int, ...]:
    """Conjectured multiplicity vector for the last shortcut-matrix column.

    Built by the doubling recursion: the first entry grows by one, old
    entries interleave with sums of adjacent pairs.
    """
    check_dimension(d)
    if d > SIGMA_MAX:
        raise ValueError(f"sigma is defined here for d <= {SIGMA_MAX}, got {d}")
    row = (2,)
    for _ in range(d - 2):
        new = [row[0] + 1]
        for j in range(1, len(row) + 1):
            new.append(row[j - 1])
            if j < len(row):
                new.append(row[j - 1] + row[j])
        row = tuple(new)
    return row


def sigma_oracle(d: int) -> tuple[int, ...]:
    """Count shortcut rows whose last-column offset is k*(2^d - 1), k = 1.."""
    check_dimension(d)
    if d > PROFILE_MAX:
        raise ValueError(f"sigma_oracle enumerates rows only up to d = {PROFILE_MAX}")
    m = mersenne(d)
    counts = Counter(row.offsets[-1] for row in build_shortcut_matrix(d).rows)
    return tuple(counts[k * m] for k in range(1, (1 << (d - 2)) + 1))


def sigma_report(d: int) -> dict:
    conjectured, counted = sigma(d), sigma_oracle(d)
    return {
        "d": d,
        "sigma": list(conjectured),
        "oracle": list(counted),
        "match": conjectured == counted,
    }


def word_value(word: tuple[int, ...]) -> int:
    """Base-3 value of a ternary word, first digit most significant."""
    v = 0
    for w in word:
        v = 3 * v + w
    return v


@dataclass(frozen=True)
class DiffProfile:
    d: int
    diffs: tuple[int, ...]  # one full period, wraparound difference last
    distinct: tuple[int, ...]
    counts: tuple[int, ...]

    @property
    def multiplicities(self) -> dict[int, int]:
        return dict(zip(self.distinct, self.counts))

    @property
    def lo(self) -> int:
        return self.distinct[0]

    @property
    def hi(self) -> int:
        return self.distinct[-1]


def _word_values(d: int, reverse_lex: bool) -> list[int]:
    rows = list(build_shortcut_matrix(d).rows)
    if reverse_lex:
        rows.sort(key=lambda row: row.offsets)
    # last row first; the all-exact first row then lands at the end of the
    # period, right before wraparound
    return [word_value(row_word(row)) for row in reversed(rows)]


def _cache_file(d: int, reverse_lex: bool) -> Path | None:
    root = os.environ.get("RATLAB_CACHE_DIR")
    if not root:
        return None
    tag = "revlex" if reverse_lex else "std"
    return Path(root) / f"diffs_d{d}_{tag}.json"


def diff_profile(d: int, reverse_lex: bool = False) -> DiffProfile:
    """Consecutive differences of the decoded word sequence, cyclically.

    reverse_lex re-sorts the rows by plain left-to-right lexicographic
    offsets (the alternative ordering of the matrix); profiles for it are
    emitted for manual comparison only, nothing downstream depends on it.
    """
    check_dimension(d)
    if d > PROFILE_MAX:
        raise ValueError(f"profiles enumerate rows only up to d = {PROFILE_MAX}")
    cache = _cache_file(d, reverse_lex)
    diffs: tuple[int, ...] | None = None
    if cache is not None and cache.exists():
        diffs = tuple(json.loads(cache.read_text()))
    if diffs is None:
        vals = _word_values(d, reverse_lex)
        diffs = tuple(
            vals[(k + 1) % len(vals)] - vals[k] for k in range(len(vals))
        )
        if cache is not None:
            cache.parent.mkdir(parents=True, exist_ok=True)
            cache.write_text(json.dumps(list(diffs)))
    tally = Counter(diffs)
    distinct = tuple(sorted(tally))
    return DiffProfile(d, diffs, distinct, tuple(tally[v] for v in distinct))


def xi(d: int) -> int:
    """Number of distinct difference values at level d."""
    check_dimension(d)
    return 2 + comb(d - 1, 2)


@dataclass(frozen=True)
class Extremes:
    d: int
    lo: int
    hi: int
    hi_closed_form: bool  # False below d=4, where only the profile answers


def extremes(d: int) -> Extremes:
    """Smallest and largest difference value; max has a closed form for d >= 4."""
    check_dimension(d)
    lo = -2 * 3 ** (d - 2)
    if d >= 4:
        return Extremes(d, lo, 2 * 3 ** (d - 2) + 3 ** (d - 4), True)
    return Extremes(d, lo, diff_profile(d).hi, False)


def baseline_gaps(d: int) -> list[int]:
    """Gaps between occurrences of the baseline value within one period.

    Linear, no wraparound: the printed gap lists count only in-period
    distances.
    """
    profile = diff_profile(d)
    base = -2 * 3 ** (d - 2)
    hits = [k for k, v in enumerate(profile.diffs[:-1]) if v == base]
    return [b - a for a, b in zip(hits, hits[1:])]


@dataclass(frozen=True)
class TauReport:
    d: int
    values: tuple[int, ...]
    markers: dict[int, str]
    missing: tuple[int, ...]  # generated but absent from the profile
    extra: tuple[int, ...]  # in the profile but not generated

    @property
    def matches(self) -> bool:
        return not self.missing and not self.extra

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "values": list(self.values),
            "markers": {str(v): tag for v, tag in sorted(self.markers.items())},
            "missing": list(self.missing),
            "extra": list(self.extra),
            "matches": self.matches,
        }


def tau_values(d: int) -> tuple[dict[int, str], tuple[int, ...]]:
    """Generate the tau description of the distinct difference set.

    Fixed prefix: the baseline, the powers of three up to 3^(d-3), the
    half-period star value, and star+6.  After that, families: family i
    starts at the previous start plus 3^(i+1) and contains start-1+3^j
    for j = 0..i.  The last family lands on 2*3^(d-2)+3^j, the top run.
    """
    if not 4 <= d <= PROFILE_MAX:
        raise ValueError(f"tau description applies for 4 <= d <= {PROFILE_MAX}")
    star = (3 ** (d - 1) - 1) // 2
    markers = {-2 * 3 ** (d - 2): "baseline", star: "star", star + 6: "family-start"}
    if d >= 6:
        markers[3 ** (d - 4)] = "pb"
        markers[3 ** (d - 3)] = "pt"
    values = {-2 * 3 ** (d - 2), star, star + 6}
    values.update(3 ** (i - 1) for i in range(1, d - 1))
    start = star + 6
    for i in range(1, d - 3):
        start += 3 ** (i + 1)
        markers.setdefault(start, "family-start")
        values.update(start - 1 + 3 ** j for j in range(i + 1))
    return markers, tuple(sorted(values))


def tau_check(d: int) -> TauReport:
    """Compare the generated tau values with the actual profile; advisory."""
    markers, values = tau_values(d)
    actual = set(diff_profile(d).distinct)
    generated = set(values)
    return TauReport(
        d,
        values,
        markers,
        tuple(sorted(generated - actual)),
        tuple(sorted(actual - generated)),
    )


def emit_scatter(d: int, format: str = "csv") -> str:
    """One period of differences as a plottable document."""
    profile = diff_profile(d)
    if format == "csv":
        return "".join(f"{k},{v}\n" for k, v in enumerate(profile.diffs))
    if format != "svg":
        raise ValueError(f"unsupported scatter format {format!r}")
    n = len(profile.diffs)
    lo, hi = profile.lo, profile.hi
    width, height, pad = 840, 420, 20
    span_x = max(1, n - 1)
    span_y = max(1, hi - lo)
    points = "".join(
        '<circle cx="{:.2f}" cy="{:.2f}" r="1.5"/>'.format(
            pad + k * (width - 2 * pad) / span_x,
            height - pad - (v - lo) * (height - 2 * pad) / span_y,
        )
        for k, v in enumerate(profile.diffs)
    )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">'
        f'<rect width="{width}" height="{height}" fill="white"/>'
        f'<g fill="black">{points}</g></svg>'
    )
