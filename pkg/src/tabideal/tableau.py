"""Partitions, weighted fillings of Young diagrams, and marked-box collections.

A partition is a plain tuple of weakly decreasing positive row lengths.  A
:class:`Tableau` assigns a positive integer weight to every box of a partition
shape and carries the original row/column labels through deletions, so that
witnesses can always be reported in the coordinates of the tableau the user
supplied.

Everything here is an immutable value: deletions return new tableaux, and the
collection enumerator is a pure generator, so values can be shared freely
between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Literal, Sequence

from .errors import EmptyTableauError, GuardExceededError, TableauParseError

Partition = tuple[int, ...]
Mark = Literal["r", "c"]

#: Weights above this bound are rejected at construction time so that products
#: of generator exponents stay comfortably inside 64-bit arithmetic.
MAX_WEIGHT = 10**6


def validate_partition(parts: Sequence[int]) -> Partition:
    """Return ``parts`` as a tuple, or raise if it is not a partition."""
    out = tuple(int(p) for p in parts)
    for p in out:
        if p < 1:
            raise TableauParseError("partition parts must be positive")
    for a, b in zip(out, out[1:]):
        if b > a:
            raise TableauParseError("row lengths must be weakly decreasing")
    return out


def conjugate(parts: Sequence[int]) -> Partition:
    """Conjugate partition: entry j counts the rows of length at least j."""
    parts = tuple(parts)
    if not parts:
        return ()
    return tuple(
        sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1)
    )


def is_staircase(parts: Sequence[int]) -> bool:
    """True iff the partition is (n, n-1, ..., 2, 1); the empty one counts."""
    parts = tuple(parts)
    return parts == tuple(range(len(parts), 0, -1))


@dataclass(frozen=True)
class Tableau:
    """A weighted filling of a Young diagram.

    ``rows[i-1][j-1]`` is the weight of box ``(i, j)`` in current (residual)
    coordinates.  ``row_labels`` / ``col_labels`` remember which original rows
    and columns survive; a freshly built tableau is labelled 1..n and 1..m.
    """

    rows: tuple[tuple[int, ...], ...]
    row_labels: tuple[int, ...] = ()
    col_labels: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        lengths = tuple(len(r) for r in self.rows)
        if lengths:
            validate_partition(lengths)
        for r in self.rows:
            for w in r:
                if not isinstance(w, int) or w < 1:
                    raise TableauParseError("box weights must be positive integers")
                if w > MAX_WEIGHT:
                    raise TableauParseError(f"box weight {w} exceeds bound {MAX_WEIGHT}")
        if not self.row_labels:
            object.__setattr__(self, "row_labels", tuple(range(1, len(self.rows) + 1)))
        if not self.col_labels:
            object.__setattr__(self, "col_labels", tuple(range(1, self.n_cols + 1)))
        if len(self.row_labels) != len(self.rows):
            raise ValueError("row label count does not match row count")
        if len(self.col_labels) != self.n_cols:
            raise ValueError("column label count does not match column count")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "Tableau":
        return cls(tuple(tuple(int(w) for w in r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def box_count(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def is_empty(self) -> bool:
        return not self.rows

    @property
    def min_weight(self) -> int:
        """The minimum weight over all boxes (defined for nonempty tableaux)."""
        if self.is_empty:
            raise EmptyTableauError("empty tableau has no minimum weight")
        return min(w for r in self.rows for w in r)

    def weight(self, i: int, j: int) -> int:
        """Weight of box (i, j), 1-based residual coordinates."""
        return self.rows[i - 1][j - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        """All boxes (i, j) in row-major order, 1-based."""
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, len(r) + 1):
                yield i, j


EMPTY = Tableau(())


def minimal_boxes(t: Tableau) -> tuple[tuple[int, int], ...]:
    """Boxes of minimum weight with no other minimum-weight box weakly
    north-west of them.

    Returns 1-based residual coordinates, sorted by (row, col).  The result is
    a nonempty antichain: any two returned boxes compare strictly opposite in
    the two coordinates.
    """
    if t.is_empty:
        raise EmptyTableauError("empty tableau has no minimal box")
    low = t.min_weight
    hits = [(i, j) for i, j in t.boxes() if t.weight(i, j) == low]
    return tuple(
        (i, j)
        for i, j in hits
        if not any((a, b) != (i, j) and a <= i and b <= j for a, b in hits)
    )


def delete_row(t: Tableau, row: int) -> tuple[Tableau, int]:
    """Remove row ``row`` (1-based residual index).

    Returns the residual tableau and the number of columns that became empty,
    which is the count of freed column variables: the top row is the only one
    that can strand columns, freeing ``shape[0] - shape[1]`` of them.
    """
    if not 1 <= row <= t.n_rows:
        raise IndexError(f"row index {row} out of range 1..{t.n_rows}")
    rows = t.rows[:row - 1] + t.rows[row:]
    row_labels = t.row_labels[:row - 1] + t.row_labels[row:]
    if row == 1:
        second = len(t.rows[1]) if t.n_rows > 1 else 0
        freed = len(t.rows[0]) - second
        col_labels = t.col_labels[:second]
    else:
        freed = 0
        col_labels = t.col_labels
    return Tableau(rows, row_labels, col_labels), freed


def delete_column(t: Tableau, col: int) -> tuple[Tableau, int]:
    """Remove column ``col`` (1-based residual index).

    Rows shorter than ``col`` are untouched; rows that lose their only box
    disappear.  The freed count is the number of rows that became empty, i.e.
    the freed row variables; only the first column can strand rows.
    """
    if not 1 <= col <= t.n_cols:
        raise IndexError(f"column index {col} out of range 1..{t.n_cols}")
    rows = []
    row_labels = []
    freed = 0
    for r, lab in zip(t.rows, t.row_labels):
        if len(r) >= col:
            r = r[:col - 1] + r[col:]
        if r:
            rows.append(r)
            row_labels.append(lab)
        else:
            freed += 1
    col_labels = t.col_labels[:col - 1] + t.col_labels[col:]
    if not rows:
        col_labels = ()
    return Tableau(tuple(rows), tuple(row_labels), col_labels), freed


def is_weakly_increasing(t: Tableau) -> bool:
    """True iff weights weakly increase along every row and down every column."""
    for i, r in enumerate(t.rows):
        for j in range(len(r)):
            if j + 1 < len(r) and r[j] > r[j + 1]:
                return False
            if i + 1 < len(t.rows) and j < len(t.rows[i + 1]) and r[j] > t.rows[i + 1][j]:
                return False
    return True


@dataclass(frozen=True)
class MarkedBox:
    """A box in original coordinates together with a row or column mark."""

    row: int
    col: int
    mark: Mark

    def __post_init__(self) -> None:
        if self.mark not in ("r", "c"):
            raise ValueError(f"mark must be 'r' or 'c', got {self.mark!r}")


@dataclass(frozen=True)
class AdmissibleCollection:
    """An ordered line cover of a tableau by marked boxes.

    Step t picks a minimal box of the residual tableau left by the previous
    steps and deletes its row or column according to the mark.  ``freed[t]``
    records how many opposite-type lines became empty at that step and
    ``weights[t]`` the weight of the chosen box.
    """

    steps: tuple[MarkedBox, ...]
    freed: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (len(self.steps) == len(self.freed) == len(self.weights)):
            raise ValueError("steps, freed and weights must have equal length")
        if not self.steps:
            raise ValueError("a collection has at least one step")

    @property
    def depth_statistic(self) -> int:
        """Total number of freed variables over all steps."""
        return sum(self.freed)

    @property
    def reg_statistic(self) -> int:
        """Sum of (weight - 1) over all steps plus the final step's weight."""
        return sum(w - 1 for w in self.weights) + self.weights[-1]

    def boxes(self) -> tuple[tuple[int, int], ...]:
        return tuple((s.row, s.col) for s in self.steps)


def enumerate_admissible_collections(
    t: Tableau, max_collections: int | None = None
) -> Iterator[AdmissibleCollection]:
    """Depth-first stream of every admissible collection of ``t``.

    Branches at each residual over its minimal boxes in (row, col) order, mark
    'r' before 'c', so the stream order is deterministic.  Raises
    GuardExceededError before producing collection ``max_collections + 1``.
    """
    if t.is_empty:
        raise EmptyTableauError("empty tableau has no admissible collections")
    produced = 0

    def walk(res, steps, freed, weights):
        nonlocal produced
        if res.is_empty:
            if max_collections is not None and produced >= max_collections:
                raise GuardExceededError(
                    "admissible collections", max_collections, produced + 1
                )
            produced += 1
            yield AdmissibleCollection(steps, freed, weights)
            return
        for i, j in minimal_boxes(res):
            box_w = res.weight(i, j)
            marked_r = MarkedBox(res.row_labels[i - 1], res.col_labels[j - 1], "r")
            for mark in ("r", "c"):
                if mark == "r":
                    nxt, d = delete_row(res, i)
                    step = marked_r
                else:
                    nxt, d = delete_column(res, j)
                    step = MarkedBox(marked_r.row, marked_r.col, "c")
                yield from walk(
                    nxt, steps + (step,), freed + (d,), weights + (box_w,)
                )

    yield from walk(t, (), (), ())


# ---------------------------------------------------------------------------
# Text format shared by all CLI commands: one row per line, space-separated
# positive integers, '#' starts a comment, row lengths weakly decreasing.

def parse_tableau(text: str) -> Tableau:
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        weights = []
        for tok in line.split():
            try:
                w = int(tok)
            except ValueError:
                raise TableauParseError(f"expected a positive integer, got {tok!r}", lineno)
            if w < 1:
                raise TableauParseError(f"box weights must be positive, got {w}", lineno)
            if w > MAX_WEIGHT:
                raise TableauParseError(f"box weight {w} exceeds bound {MAX_WEIGHT}", lineno)
            weights.append(w)
        if rows and len(weights) > len(rows[-1]):
            raise TableauParseError("row lengths must be weakly decreasing", lineno)
        rows.append(tuple(weights))
    return Tableau(tuple(rows))


def format_tableau(t: Tableau) -> str:
    return "\n".join(" ".join(str(w) for w in r) for r in t.rows) + ("\n" if t.rows else "")


def parse_partition(text: str) -> Partition:
    """Parse a partition literal such as "4,4,3,2,1"."""
    toks = [tok.strip() for tok in text.split(",") if tok.strip()]
    if not toks:
        raise TableauParseError("empty partition literal")
    try:
        parts = tuple(int(tok) for tok in toks)
    except ValueError:
        raise TableauParseError(f"invalid partition literal {text!r}")
    return validate_partition(parts)
