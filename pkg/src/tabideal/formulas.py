"""Depth and regularity of tableau ideals by combinatorial formulas.

The quotient by a tableau ideal lives in the polynomial ring with one variable
per row and one per column of the tableau.  Its depth and regularity satisfy a
deletion recursion driven by any minimal box (gamma, delta):

* depth  = min over deleting row gamma or column delta of
  (depth of the residual) + (lines of the opposite type that became empty),
* reg    = (minimum weight - 1) + max over the two deletions of the residual
  regularity; a single box of weight w has regularity 2w - 1.

Unrolling the recursion over every choice of minimal box and mark yields the
admissible-collection extremes: depth is the minimum of the freed-variable
statistic and regularity the maximum of the weight statistic over all
collections.  Both formulations are implemented here; the homological oracle
in :mod:`tabideal.betti` is the independent ground truth the test suite
checks them against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import EmptyTableauError
from .tableau import (
    AdmissibleCollection,
    MarkedBox,
    Tableau,
    delete_column,
    delete_row,
    enumerate_admissible_collections,
    is_staircase,
    is_weakly_increasing,
    minimal_boxes,
    validate_partition,
)


class Method(enum.Enum):
    """Which computation path produced an invariant report."""

    RECURSION = "recursion"
    COLLECTIONS = "collections"
    ORACLE = "oracle"
    DEGREE_COMPLEX_SEARCH = "degree-complex"
    ASSOCIATED_RADICAL_SEARCH = "associated-radical"


@dataclass(frozen=True)
class InvariantReport:
    """Depth and regularity together with witnesses achieving them."""

    depth: int
    regularity: int
    omega: int
    method: Method
    depth_witness: AdmissibleCollection | None = None
    reg_witness: AdmissibleCollection | None = None

    def __post_init__(self) -> None:
        if self.depth_witness is not None and self.depth_witness.depth_statistic != self.depth:
            raise ValueError("depth witness does not achieve the reported depth")
        if self.reg_witness is not None and self.reg_witness.reg_statistic != self.regularity:
            raise ValueError("regularity witness does not achieve the reported regularity")


@dataclass(frozen=True)
class FerrersInvariants:
    """Closed-form invariants of the weight-one (Ferrers) ideal of a partition."""

    height: int
    projective_dimension: int
    depth: int
    regularity: int
    dimension: int
    is_cohen_macaulay: bool


class RowVariableEffect(enum.Enum):
    """Change in Ferrers depth after adding one row variable to the ideal."""

    DROPS_BY_ONE = "drops-by-one"
    UNCHANGED = "unchanged"
    UNCHANGED_OR_HIGHER = "unchanged-or-higher"


@lru_cache(maxsize=None)
def _depth(rows: tuple[tuple[int, ...], ...]) -> int:
    if not rows:
        return 0
    t = Tableau(rows)
    i, j = minimal_boxes(t)[0]
    by_row, freed_cols = delete_row(t, i)
    by_col, freed_rows = delete_column(t, j)
    return min(_depth(by_row.rows) + freed_cols, _depth(by_col.rows) + freed_rows)


@lru_cache(maxsize=None)
def _regularity(rows: tuple[tuple[int, ...], ...]) -> int:
    if not rows:
        return 0
    if len(rows) == 1 and len(rows[0]) == 1:
        return 2 * rows[0][0] - 1
    t = Tableau(rows)
    low = t.min_weight
    i, j = minimal_boxes(t)[0]
    by_row, _ = delete_row(t, i)
    by_col, _ = delete_column(t, j)
    return low - 1 + max(_regularity(by_row.rows), _regularity(by_col.rows))


def depth(t: Tableau) -> int:
    """Depth of the quotient by the tableau ideal of ``t``.

    Taken in the polynomial ring whose variables are exactly the rows and
    columns of ``t``; the empty tableau gives 0 (the quotient is the field).
    """
    return _depth(t.rows)


def regularity(t: Tableau) -> int:
    """Castelnuovo-Mumford regularity of the quotient by the tableau ideal."""
    return _regularity(t.rows)


def _replay(t: Tableau, *, maximize_reg: bool) -> AdmissibleCollection:
    """Rebuild a witness collection by replaying the memoized recursion.

    Always takes the lexicographically first minimal box; on ties between the
    two marks the row branch wins, so replays are deterministic.
    """
    steps: list[MarkedBox] = []
    freed: list[int] = []
    weights: list[int] = []
    res = t
    while not res.is_empty:
        i, j = minimal_boxes(res)[0]
        by_row, freed_cols = delete_row(res, i)
        by_col, freed_rows = delete_column(res, j)
        if maximize_reg:
            take_row = _regularity(by_row.rows) >= _regularity(by_col.rows)
        else:
            take_row = (_depth(by_row.rows) + freed_cols) <= (_depth(by_col.rows) + freed_rows)
        mark = "r" if take_row else "c"
        steps.append(MarkedBox(res.row_labels[i - 1], res.col_labels[j - 1], mark))
        weights.append(res.weight(i, j))
        freed.append(freed_cols if take_row else freed_rows)
        res = by_row if take_row else by_col
    return AdmissibleCollection(tuple(steps), tuple(freed), tuple(weights))


def recursion_report(t: Tableau) -> InvariantReport:
    """Run both recursions on ``t`` and attach replayed witnesses."""
    if t.is_empty:
        raise EmptyTableauError("empty tableau has no invariant report")
    return InvariantReport(
        depth=depth(t),
        regularity=regularity(t),
        omega=t.min_weight,
        method=Method.RECURSION,
        depth_witness=_replay(t, maximize_reg=False),
        reg_witness=_replay(t, maximize_reg=True),
    )


def extremes_via_collections(
    t: Tableau, max_collections: int | None = None
) -> InvariantReport:
    """Exhaust all admissible collections and report min-depth / max-reg.

    The reported witnesses are the first collections attaining the extremes in
    the deterministic enumeration order.
    """
    if t.is_empty:
        raise EmptyTableauError("empty tableau has no admissible collections")
    best_d: AdmissibleCollection | None = None
    best_r: AdmissibleCollection | None = None
    for coll in enumerate_admissible_collections(t, max_collections):
        if best_d is None or coll.depth_statistic < best_d.depth_statistic:
            best_d = coll
        if best_r is None or coll.reg_statistic > best_r.reg_statistic:
            best_r = coll
    assert best_d is not None and best_r is not None
    return InvariantReport(
        depth=best_d.depth_statistic,
        regularity=best_r.reg_statistic,
        omega=t.min_weight,
        method=Method.COLLECTIONS,
        depth_witness=best_d,
        reg_witness=best_r,
    )


def ferrers_invariants(parts: Sequence[int]) -> FerrersInvariants:
    """Invariants of the weight-one ideal of a partition, in closed form.

    height = min(min_j(parts[j] + j), n) and pd = max_j(parts[j] + j) with j
    counted from 0; depth follows by Auslander-Buchsbaum in n + m variables,
    regularity is always 1, and the quotient is Cohen-Macaulay exactly for
    staircase partitions.
    """
    parts = validate_partition(parts)
    if not parts:
        raise EmptyTableauError("empty partition has no Ferrers invariants")
    n = len(parts)
    m = parts[0]
    diag = [p + i for i, p in enumerate(parts)]  # parts[j] + j - 1, 1-based
    height = min(min(diag), n)
    pd = max(diag)
    return FerrersInvariants(
        height=height,
        projective_dimension=pd,
        depth=n + m - pd,
        regularity=1,
        dimension=n + m - height,
        is_cohen_macaulay=is_staircase(parts),
    )


def is_cohen_macaulay(t: Tableau) -> bool:
    """True iff the shape is a staircase and the filling weakly increases."""
    if t.is_empty:
        raise EmptyTableauError("empty tableau")
    return is_staircase(t.shape) and is_weakly_increasing(t)


def reg_single_row(weights: Sequence[int]) -> int:
    """One-row closed form: sum of (w - 1) over the row plus the row maximum."""
    ws = [int(w) for w in weights]
    if not ws or any(w < 1 for w in ws):
        raise ValueError("need a nonempty sequence of positive weights")
    return sum(w - 1 for w in ws) + max(ws)


def pivot_row(parts: Sequence[int]) -> int:
    """Smallest 1-based index attaining max(parts[i] + i)."""
    parts = validate_partition(parts)
    if not parts:
        raise EmptyTableauError("empty partition")
    best = max(p + i for i, p in enumerate(parts, start=1))
    return next(i for i, p in enumerate(parts, start=1) if p + i == best)


def classify_add_row_variable(parts: Sequence[int], a: int) -> RowVariableEffect:
    """Effect on Ferrers depth of adding the a-th row variable to the ideal.

    Rows past the pivot index drop the depth by one, rows before it leave the
    depth unchanged, and the pivot row itself can only keep it or raise it
    (the exact increment is not determined here).
    """
    parts = validate_partition(parts)
    if not 1 <= a <= len(parts):
        raise IndexError(f"row index {a} out of range 1..{len(parts)}")
    alpha = pivot_row(parts)
    if a >= alpha + 1:
        return RowVariableEffect.DROPS_BY_ONE
    if a <= alpha - 1:
        return RowVariableEffect.UNCHANGED
    return RowVariableEffect.UNCHANGED_OR_HIGHER


def clear_caches() -> None:
    """Drop the memo tables of both recursions (mainly for tests)."""
    _depth.cache_clear()
    _regularity.cache_clear()
