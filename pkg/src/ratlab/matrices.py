"""Finite matrix forms: the binary rat-matrix R_d, the ternary shortcut
matrix F_d, the halving trees behind it, and the printed difference matrices.

Both matrices store one affine row per line: column j holds
2^(j-1) (2^d - 1) n + offset.  R_d has 2^(d-1) rows driven by binary words,
F_d has 3^(d-1) rows driven by ternary words.
"""

import json
from dataclasses import dataclass

from .sequences import check_dimension, mersenne

ROW_CAP = 3**13  # refuse to build shortcut matrices bigger than this


class InvalidRow(ValueError):
    """Raised when offsets do not satisfy the halving recurrence."""


def column_slopes(d: int) -> tuple[int, ...]:
    m = mersenne(d)
    return tuple(m << j for j in range(d))


@dataclass(frozen=True)
class AffineRow:
    slopes: tuple[int, ...]
    offsets: tuple[int, ...]

    def at(self, t: int) -> tuple[int, ...]:
        return tuple(s * t + o for s, o in zip(self.slopes, self.offsets))

    def cells(self) -> tuple[str, ...]:
        """Printable cells like '7n+3' ('7n' when the offset is zero)."""
        return tuple(f"{s}n+{o}" if o else f"{s}n" for s, o in zip(self.slopes, self.offsets))


def _rows_csv(rows) -> str:
    return "\n".join(",".join(r.cells()) for r in rows) + "\n"


def _rows_json(d, rows) -> str:
    doc = {
        "d": d,
        "slopes": list(column_slopes(d)),
        "rows": [list(r.offsets) for r in rows],
    }
    return json.dumps(doc, indent=1) + "\n"


@dataclass(frozen=True)
class RatMatrix:
    d: int
    rows: tuple[AffineRow, ...]
    binary_words: tuple[str, ...]  # b_i = i in d-1 binary digits

    def to_csv(self) -> str:
        return _rows_csv(self.rows)

    def to_json(self) -> str:
        return _rows_json(self.d, self.rows)


@dataclass(frozen=True)
class ShortcutMatrix:
    d: int
    rows: tuple[AffineRow, ...]
    words: tuple[tuple[int, ...], ...]

    def to_csv(self) -> str:
        return _rows_csv(self.rows)

    def to_json(self) -> str:
        return _rows_json(self.d, self.rows)


def build_rat_matrix(d: int) -> RatMatrix:
    """R_d: row i starts at (2^d - 1) n + 2i + 1 and doubles left to right,
    subtracting the binary digits of i from the most significant end."""
    check_dimension(d)
    slopes = column_slopes(d)
    rows = []
    words = []
    for i in range(1 << (d - 1)):
        bits = format(i, f"0{d - 1}b")
        offs = [2 * i + 1]
        for j in range(2, d + 1):
            offs.append(2 * offs[-1] - int(bits[j - 2]))
        rows.append(AffineRow(slopes, tuple(offs)))
        words.append(bits)
    return RatMatrix(d=d, rows=tuple(rows), binary_words=tuple(words))


def matrix_rat_vector(matrix: RatMatrix, n: int) -> tuple[int, ...]:
    """r(n) read off the matrix: row (n-1) mod 2^(d-1) at t = (n-1) div 2^(d-1)."""
    if n < 1:
        raise ValueError(f"row index must be >= 1, got {n}")
    half = 1 << (matrix.d - 1)
    return matrix.rows[(n - 1) % half].at((n - 1) // half)


@dataclass(frozen=True)
class TreeNode:
    level: int  # column index j, counted down to 1 at the leaves
    value: int
    children: tuple["TreeNode", ...]


@dataclass(frozen=True)
class ShortcutTree:
    d: int
    root: TreeNode

    def paths(self) -> list[tuple[int, ...]]:
        """Leaf-to-root value tuples; each is one shortcut row, unreduced."""

        def walk(node: TreeNode) -> list[tuple[int, ...]]:
            if not node.children:
                return [(node.value,)]
            return [p + (node.value,) for c in node.children for p in walk(c)]

        return walk(self.root)


def shortcut_tree(d: int, i: int) -> ShortcutTree:
    """Halving tree rooted at (d, i(2^d - 1)): even values halve exactly,
    odd values branch to both roundings."""
    check_dimension(d)
    if not 1 <= i <= 1 << (d - 1):
        raise ValueError(f"root index must be in 1..{1 << (d - 1)}, got {i}")

    def grow(level: int, value: int) -> TreeNode:
        if level == 1:
            return TreeNode(level, value, ())
        if value % 2 == 0:
            kids = (grow(level - 1, value // 2),)
        else:
            kids = (grow(level - 1, (value - 1) // 2), grow(level - 1, (value + 1) // 2))
        return TreeNode(level, value, kids)

    return ShortcutTree(d=d, root=grow(d, i * mersenne(d)))


def build_shortcut_matrix(d: int) -> ShortcutMatrix:
    """F_d: all 3^(d-1) per-period shortcut rows, sorted in increasing
    right-to-left lexicographic order (last column most significant)."""
    check_dimension(d)
    if 3 ** (d - 1) > ROW_CAP:
        raise ValueError(f"shortcut matrix for d={d} exceeds the {ROW_CAP}-row cap")
    slopes = column_slopes(d)
    offsets = []
    for i in range(1, (1 << (d - 1)) + 1):
        for path in shortcut_tree(d, i).paths():
            offsets.append(tuple(v % s for v, s in zip(path, slopes)))
    offsets.sort(key=lambda offs: offs[::-1])
    if len(set(offsets)) != 3 ** (d - 1):
        raise AssertionError(f"expected 3^{d - 1} distinct rows, got {len(set(offsets))}")
    rows = tuple(AffineRow(slopes, offs) for offs in offsets)
    return ShortcutMatrix(d=d, rows=rows, words=tuple(row_word(r) for r in rows))


def row_word(row: AffineRow) -> tuple[int, ...]:
    """Ternary word of a row: digit 2 f_{i-1} - f_i + 1 per column pair."""
    offs = row.offsets
    word = []
    for i in range(1, len(offs)):
        w = 2 * offs[i - 1] - offs[i] + 1
        if w not in (0, 1, 2):
            raise InvalidRow(f"offsets {offs} break the halving recurrence at column {i + 1}")
        word.append(w)
    return tuple(word)


def word_row(d: int, word) -> AffineRow:
    """The unique shortcut row with the given ternary word.

    Writing f_i = 2 f_{i-1} + 1 - w_i, the first offset must satisfy
    2^(d-1) f_1 = -c (mod 2^d - 1) with c the accumulated word part; since
    2^d = 1 (mod 2^d - 1), the inverse of 2^(d-1) is just 2.
    """
    w = tuple(word)
    if len(w) != d - 1 or any(t not in (0, 1, 2) for t in w):
        raise InvalidRow(f"need {d - 1} digits over {{0,1,2}}, got {w!r}")
    m = mersenne(d)
    c = sum((1 << (d - i)) * (1 - w[i - 2]) for i in range(2, d + 1))
    f1 = (-c * 2) % m
    offs = [f1]
    for t in w:
        offs.append(2 * offs[-1] + 1 - t)
    slopes = column_slopes(d)
    if any(not 0 <= o < s for o, s in zip(offs, slopes)):
        raise InvalidRow(f"word {w} yields out-of-period offsets {offs}")
    return AffineRow(slopes, tuple(offs))


def difference_matrix(d: int) -> list[tuple[int, ...]]:
    """Ternary words of F_d read from the last row down to row 2.

    Row 1 (the all-zero offsets, word all-1) is omitted, matching the
    printed matrices for d = 3 and d = 4.
    """
    matrix = build_shortcut_matrix(d)
    return [row_word(r) for r in matrix.rows[:0:-1]]


def difference_matrix_csv(d: int) -> str:
    return "\n".join(",".join(map(str, w)) for w in difference_matrix(d)) + "\n"
