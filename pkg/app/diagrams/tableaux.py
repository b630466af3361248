"""Young shapes, standard tableaux, RSK row insertion and vacillating tableaux.

Rows are numbered from 1.  Standard tableaux use the increasing convention:
entries strictly increase along rows and down columns.
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple

from ..errors import (
    DuplicateEntryError,
    InconsistentTableauError,
    NotACornerError,
    TableauError,
)

Cell = Tuple[int, int]


@dataclass(frozen=True)
class Shape:
    """Weakly decreasing row lengths with trailing zeros trimmed."""

    rows: Tuple[int, ...] = ()

    def __post_init__(self):
        rows = tuple(self.rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        if any(r < 0 for r in rows):
            raise TableauError(f"Negative row length in {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise TableauError(f"Row lengths {rows} are not weakly decreasing")
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def row_length(self, row: int) -> int:
        return self.rows[row - 1] if 1 <= row <= len(self.rows) else 0

    def addable_rows(self, max_rows: Optional[int] = None) -> Tuple[int, ...]:
        """Rows (1-based) where a cell can be appended, optionally capped."""
        limit = len(self.rows) + 1
        if max_rows is not None:
            limit = min(limit, max_rows)
        return tuple(
            h for h in range(1, limit + 1)
            if h == 1 or self.row_length(h - 1) > self.row_length(h)
        )

    def removable_rows(self) -> Tuple[int, ...]:
        return tuple(
            h for h in range(1, len(self.rows) + 1)
            if self.row_length(h) > self.row_length(h + 1)
        )

    def add(self, row: int) -> "Shape":
        if row not in self.addable_rows():
            raise InconsistentTableauError(f"Cannot add a cell to row {row} of {self}")
        rows = list(self.rows) + [0]
        rows[row - 1] += 1
        return Shape(tuple(rows))

    def remove(self, row: int) -> "Shape":
        if row not in self.removable_rows():
            raise InconsistentTableauError(
                f"Cannot remove a cell from row {row} of {self}"
            )
        rows = list(self.rows)
        rows[row - 1] -= 1
        return Shape(tuple(rows))

    def step_to(self, other: "Shape") -> "HalfStep":
        """The half-step leading from this shape to ``other``."""
        if other == self:
            return NOTHING
        for row in self.addable_rows():
            if self.add(row) == other:
                return HalfStep(1, row)
        for row in self.removable_rows():
            if self.remove(row) == other:
                return HalfStep(-1, row)
        raise InconsistentTableauError(f"Shapes {self} and {other} differ by more than one cell")

    def __str__(self) -> str:
        return "[" + ",".join(str(r) for r in self.rows) + "]"


EMPTY = Shape()


class HalfStep(NamedTuple):
    """``delta`` is +1, -1 or 0; ``row`` is the touched row (0 when nothing)."""

    delta: int
    row: int

    def __str__(self) -> str:
        if self.delta == 0:
            return "0"
        return f"{'+' if self.delta > 0 else '-'}{self.row}"


NOTHING = HalfStep(0, 0)


@dataclass(frozen=True)
class StandardTableau:
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if any(not r for r in rows):
            raise TableauError("Tableau rows must be nonempty")
        Shape(tuple(len(r) for r in rows))
        entries = [x for r in rows for x in r]
        if len(entries) != len(set(entries)):
            raise DuplicateEntryError(f"Repeated entries in {rows}")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise TableauError(f"Row {r} is not strictly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise TableauError(f"Columns of {rows} are not strictly increasing")
        object.__setattr__(self, "rows", rows)

    @cached_property
    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows))

    @cached_property
    def entries(self) -> frozenset:
        return frozenset(x for r in self.rows for x in r)

    def __contains__(self, x: int) -> bool:
        return x in self.entries

    def position(self, x: int) -> Cell:
        for i, row in enumerate(self.rows, start=1):
            if x in row:
                return i, row.index(x) + 1
        raise KeyError(x)

    def add_cell(self, row: int, x: int) -> "StandardTableau":
        """Append ``x`` at the end of ``row``; ``x`` must exceed every entry."""
        if self.entries and x <= max(self.entries):
            raise TableauError(f"{x} is not larger than every entry of {self.rows}")
        self.shape.add(row)
        rows = [list(r) for r in self.rows] + [[]]
        rows[row - 1].append(x)
        return StandardTableau(tuple(tuple(r) for r in rows if r))

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in r) for r in self.rows) or "()"


def rsk_insert(t: StandardTableau, x: int) -> StandardTableau:
    """
    Row-insert ``x``: it replaces the leftmost entry greater than itself,
    which is bumped into the next row, or is appended at the row's end.

    Raises:
        DuplicateEntryError: If ``x`` is already in ``t``.
    """
    if x in t:
        raise DuplicateEntryError(f"{x} already in tableau {t}")
    rows = [list(r) for r in t.rows]
    for row in rows:
        pos = bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            break
        row[pos], x = x, row[pos]
    else:
        rows.append([x])
    return StandardTableau(tuple(tuple(r) for r in rows))


def reverse_bump(t: StandardTableau, corner: Cell) -> Tuple[StandardTableau, int]:
    """
    Undo one :func:`rsk_insert` starting at a removable corner.

    The corner entry moves up; in every row above it replaces the rightmost
    entry smaller than itself.  The value pushed out of row 1 is returned.

    Args:
        t: Tableau to shrink.
        corner: ``(row, column)``, 1-based.

    Returns:
        The reduced tableau and the exit value.

    Raises:
        NotACornerError: If ``corner`` is not a removable corner of ``t``.
    """
    row, col = corner
    if row not in t.shape.removable_rows() or t.shape.row_length(row) != col:
        raise NotACornerError(f"{corner} is not a removable corner of {t.shape}")
    rows = [list(r) for r in t.rows]
    x = rows[row - 1].pop()
    if not rows[row - 1]:
        rows.pop()
    for i in range(row - 2, -1, -1):
        pos = bisect_left(rows[i], x) - 1
        rows[i][pos], x = x, rows[i][pos]
    return StandardTableau(tuple(tuple(r) for r in rows)), x


def remove_entry(t: StandardTableau, x: int) -> StandardTableau:
    """Delete the cell holding ``x``, which must be a removable corner."""
    if x not in t:
        raise TableauError(f"{x} not in tableau {t}")
    row, col = t.position(x)
    if row not in t.shape.removable_rows() or t.shape.row_length(row) != col:
        raise NotACornerError(f"{x} does not sit at a removable corner of {t}")
    rows = [list(r) for r in t.rows]
    rows[row - 1].pop()
    return StandardTableau(tuple(tuple(r) for r in rows if r))


# (delta of the odd half-step, delta of the even half-step)
FORBIDDEN_PAIRS = frozenset({(1, 0), (0, -1)})


@dataclass(frozen=True)
class VacillatingTableau:
    """
    Sequence of ``2n + 1`` shapes from the empty shape back to it.

    Consecutive shapes differ by at most one cell, and each pair of
    half-steps ``(2i - 1, 2i)`` avoids the patterns add-then-nothing and
    nothing-then-remove.
    """

    shapes: Tuple[Shape, ...]

    def __post_init__(self):
        shapes = tuple(self.shapes)
        object.__setattr__(self, "shapes", shapes)
        if len(shapes) % 2 == 0:
            raise InconsistentTableauError(
                f"A vacillating tableau has an odd number of shapes, got {len(shapes)}"
            )
        if shapes[0] != EMPTY or shapes[-1] != EMPTY:
            raise InconsistentTableauError("Shape sequence must start and end empty")
        steps = self.half_steps
        for i in range(0, len(steps), 2):
            pair = (steps[i].delta, steps[i + 1].delta)
            if pair in FORBIDDEN_PAIRS:
                raise InconsistentTableauError(
                    f"Step pair {i // 2 + 1} ({steps[i]},{steps[i + 1]}) is not admitted"
                )

    @classmethod
    def from_half_steps(cls, steps: Iterable[HalfStep]) -> "VacillatingTableau":
        shapes = [EMPTY]
        for step in steps:
            delta, row = step
            current = shapes[-1]
            if delta > 0:
                shapes.append(current.add(row))
            elif delta < 0:
                shapes.append(current.remove(row))
            else:
                shapes.append(current)
        return cls(tuple(shapes))

    @property
    def n(self) -> int:
        return (len(self.shapes) - 1) // 2

    @cached_property
    def half_steps(self) -> Tuple[HalfStep, ...]:
        return tuple(a.step_to(b) for a, b in zip(self.shapes, self.shapes[1:]))

    def step_pairs(self) -> Tuple[Tuple[HalfStep, HalfStep], ...]:
        steps = self.half_steps
        return tuple((steps[i], steps[i + 1]) for i in range(0, len(steps), 2))

    @property
    def max_rows(self) -> int:
        return max(s.num_rows for s in self.shapes)

    def __str__(self) -> str:
        return " ".join(f"({a},{b})" for a, b in self.step_pairs())


def step_kinds(pairs: Sequence[Tuple[HalfStep, HalfStep]]) -> Tuple[Tuple[int, int], ...]:
    """Drop row indices, keeping only the deltas of each pair."""
    return tuple((a.delta, b.delta) for a, b in pairs)
