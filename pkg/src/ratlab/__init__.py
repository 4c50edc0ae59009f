"""Exact engine for d-heap rat games.

Generates the rat P-position sequences, decides move legality by the
succinct forbidden-subtraction rules, finds winning moves, computes
Grundy values and disjunctive-sum advice, reconstructs the binary and
ternary matrix forms, and cross-checks everything against brute-force
oracles at desk scale.
"""

from .fractal import (
    DiffProfile,
    Extremes,
    TauReport,
    baseline_gaps,
    diff_profile,
    emit_scatter,
    extremes,
    sigma,
    sigma_oracle,
    tau_check,
    xi,
)
from .grundy import (
    AdvisorMove,
    GrundyReport,
    SumComponent,
    UnreachableTarget,
    gamma_statistic,
    grundy_fast,
    sum_advisor,
)
from .matrices import (
    AffineRow,
    RatMatrix,
    ShortcutMatrix,
    build_rat_matrix,
    build_shortcut_matrix,
    difference_matrix,
    matrix_rat_vector,
    shortcut_tree,
)
from .oracle import (
    Box,
    SolveTable,
    cube,
    enumerate_R,
    mex_grundy,
    retrograde_solve,
    shortcut_set,
    verify,
    verify_all,
)
from .rules import (
    Legality,
    MoveSearchResult,
    MoveVerdict,
    NegativeSubtraction,
    classify_subtraction,
    has_any_move,
    is_legal_move,
    is_p_position,
    ternary_recurrence,
    winning_move,
)
from .sequences import (
    SplitReport,
    gap,
    mersenne,
    rat_entry,
    rat_index_of,
    rat_vector,
    rat_wheel_reduce,
    rightshift_membership,
    split_check,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
