"""Move legality, P-position tests, and winning-move search.

A subtraction s is forbidden exactly when it is a rat vector (condition a),
or zero or a proper shortcut (condition b).  Both conditions are O(d)
arithmetic checks on s alone, no table lookups.
"""

from dataclasses import dataclass
from enum import Enum

from .sequences import check_vector, mersenne, rat_index_bound, rat_index_of, rat_vector


class Legality(Enum):
    ALLOWED = "Allowed"
    FORBIDDEN_A = "ForbiddenA"
    FORBIDDEN_B = "ForbiddenB"
    FORBIDDEN_ZERO = "ForbiddenZero"

    def __str__(self) -> str:
        return self.value


class NegativeSubtraction(ValueError):
    """Raised when a requested move would drive some heap below zero."""


@dataclass(frozen=True)
class MoveVerdict:
    status: Legality
    # one note per checked sub-condition; for forbidden verdicts it covers the
    # modular test plus every column i in 2..d
    witness: tuple[str, ...] = ()

    @property
    def allowed(self) -> bool:
        return self.status is Legality.ALLOWED

    def __str__(self) -> str:
        return self.status.value


@dataclass(frozen=True)
class MoveSearchResult:
    target: tuple[int, ...]
    subtraction: tuple[int, ...]
    rat_index: int | None  # None when the target is 0


def classify_subtraction(d: int, s, *, narrow_a: bool = False) -> MoveVerdict:
    """Decide whether subtracting s is allowed in dimension d.

    Condition a (rat vector): s_d = 2^(d-1) (mod 2^d - 1) and
    s_{i-1} = ceil(s_i / 2) for all i in 2..d.
    Condition b (zero or proper shortcut): s_d = 0 (mod 2^d - 1) and
    s_{i-1} in {floor(s_i / 2), ceil(s_i / 2)} for all i in 2..d.

    narrow_a=True swaps condition a's ceilings for floors
    (s_{i-1} = floor(s_i / 2)); that variant misses rat vectors with odd
    later coordinates, e.g. (3, 6, 11), and is kept only so the defect can
    be demonstrated.  See README on the rule-a correction.
    """
    v = check_vector(s, d)
    m = mersenne(d)
    if not any(v):
        return MoveVerdict(Legality.FORBIDDEN_ZERO, ("subtraction is the zero vector",))
    if v[-1] % m == 1 << (d - 1):
        notes = [f"s_{d} = {v[-1]} = 2^{d - 1} (mod 2^{d}-1)"]
        for i in range(1, d):
            want = v[i] // 2 if narrow_a else (v[i] + 1) // 2
            if v[i - 1] != want:
                break
            notes.append(f"s_{i} = {v[i - 1]} halves s_{i + 1} = {v[i]}")
        else:
            return MoveVerdict(Legality.FORBIDDEN_A, tuple(notes))
    if v[-1] % m == 0:
        notes = [f"s_{d} = {v[-1]} = 0 (mod 2^{d}-1)"]
        for i in range(1, d):
            if v[i - 1] not in (v[i] // 2, (v[i] + 1) // 2):
                break
            notes.append(f"s_{i} = {v[i - 1]} rounds s_{i + 1}/2 = {v[i]}/2")
        else:
            return MoveVerdict(Legality.FORBIDDEN_B, tuple(notes))
    return MoveVerdict(Legality.ALLOWED)


def ternary_recurrence(x) -> tuple[int, ...] | None:
    """The ternary word of x, or None when x has no such recurrence.

    Present exactly when x_d = 0 (mod 2^d - 1) and every x_{i-1} is
    floor(x_i / 2) or ceil(x_i / 2).  Digit w_i = 2 x_{i-1} - x_i + 1 is in
    {0, 1, 2}, with 1 marking an exact halving.  Nonzero vectors with a word
    are precisely the proper shortcuts; 0 carries the all-exact word.
    """
    v = check_vector(x)
    d = len(v)
    if v[-1] % mersenne(d):
        return None
    word = []
    for i in range(1, d):
        w = 2 * v[i - 1] - v[i] + 1
        if w not in (0, 1, 2):
            return None
        word.append(w)
    return tuple(word)


def is_legal_move(x, y) -> MoveVerdict:
    """Verdict for moving from x to y, i.e. for the subtraction x - y."""
    vx = check_vector(x)
    vy = check_vector(y, len(vx))
    s = tuple(a - b for a, b in zip(vx, vy))
    if any(e < 0 for e in s):
        raise NegativeSubtraction(f"target {vy} exceeds position {vx}")
    return classify_subtraction(len(vx), s)


def is_p_position(x) -> bool:
    """True for 0 and for every rat vector; all other positions are N."""
    v = check_vector(x)
    return not any(v) or rat_index_of(v) is not None


def winning_move(x) -> MoveSearchResult | None:
    """A move from x to a P-position, or None when x is itself P.

    Targets are tried in the order r(1), r(2), ... then 0, and the first
    target whose subtraction is allowed is returned.  Rat targets come before
    0 so the search reproduces the natural play line even from positions
    whose full stack happens to be an allowed subtraction.
    """
    v = check_vector(x)
    if is_p_position(v):
        return None
    d = len(v)
    for n in range(1, rat_index_bound(d, v[-1]) + 1):
        r = rat_vector(d, n)
        if all(a <= b for a, b in zip(r, v)):
            s = tuple(b - a for a, b in zip(r, v))
            if classify_subtraction(d, s).allowed:
                return MoveSearchResult(target=r, subtraction=s, rat_index=n)
    if classify_subtraction(d, v).allowed:
        return MoveSearchResult(target=(0,) * d, subtraction=v, rat_index=None)
    # Unreachable if the candidate set really is the P-set: every N-position
    # has a move to R or to 0.  Surface loudly rather than misreport P.
    raise RuntimeError(f"no winning move found from N-position {v}")


def has_any_move(x) -> bool:
    """False only at 0: a single-token subtraction is never a rat vector or
    shortcut, so any non-empty heap admits it."""
    return any(check_vector(x))
