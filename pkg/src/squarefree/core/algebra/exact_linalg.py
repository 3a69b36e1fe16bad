# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

"""Exact rational linear algebra.

Everything here works over ``fractions.Fraction``; there is no floating
point anywhere in the package. Matrices are dense lists of rows: the
degreewise blocks this package eliminates hold at most s * 2^n columns.
Columns and rows are 0-indexed.
"""

from __future__ import annotations

from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from squarefree.core.exceptions import PreconditionError

Rational = Fraction


def to_rational(value: int | str | Fraction) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass
class RationalMatrix:
    """A dense matrix of Fractions with optional row and column labels."""

    rows: int
    cols: int
    entries: list[list[Fraction]]
    row_labels: list[Hashable] | None = None
    col_labels: list[Hashable] | None = None

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(
            len(row) != self.cols for row in self.entries
        ):
            raise PreconditionError(
                f"Entries do not match the declared {self.rows}x{self.cols} shape"
            )
        for labels, size, kind in (
            (self.row_labels, self.rows, "row"),
            (self.col_labels, self.cols, "column"),
        ):
            if labels is None:
                continue
            if len(labels) != size or len(set(labels)) != size:
                raise PreconditionError(f"{kind} labels must be distinct, one per {kind}")

    @classmethod
    def zeros(cls, rows: int, cols: int, **labels) -> RationalMatrix:
        return cls(rows, cols, [[Fraction(0)] * cols for _ in range(rows)], **labels)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | str | Fraction]]) -> RationalMatrix:
        entries = [[to_rational(v) for v in row] for row in rows]
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        m = cls.zeros(size, size)
        for k in range(size):
            m.entries[k][k] = Fraction(1)
        return m

    def copy(self) -> RationalMatrix:
        return RationalMatrix(
            self.rows,
            self.cols,
            [list(row) for row in self.entries],
            None if self.row_labels is None else list(self.row_labels),
            None if self.col_labels is None else list(self.col_labels),
        )

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(
            self.cols,
            self.rows,
            [[self.entries[r][c] for r in range(self.rows)] for c in range(self.cols)],
            self.col_labels,
            self.row_labels,
        )

    def column(self, c: int) -> list[Fraction]:
        return [row[c] for row in self.entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> RationalMatrix:
        return RationalMatrix(
            len(rows), len(cols), [[self.entries[r][c] for c in cols] for r in rows]
        )

    def is_zero(self) -> bool:
        return all(v == 0 for row in self.entries for v in row)

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise PreconditionError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = RationalMatrix.zeros(self.rows, other.cols)
        for r, row in enumerate(self.entries):
            target = out.entries[r]
            for k, v in enumerate(row):
                if v == 0:
                    continue
                for c, w in enumerate(other.entries[k]):
                    if w != 0:
                        target[c] += v * w
        return out


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row echelon form relative to a column order.

    ``pivots[k]`` is the pivot column of row ``k`` of ``matrix``, in order
    of selection; rows ``rank..`` of ``matrix`` are zero.
    """

    matrix: RationalMatrix
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def echelonize_ordered(
    m: RationalMatrix, column_order: Sequence[int] | None = None
) -> EchelonForm:
    """Gauss-Jordan elimination choosing pivots by scanning ``column_order``.

    Pivot entries are scaled to 1 and cleared in every other row, so the
    result is the unique reduced echelon form for the given order.
    """
    order = list(range(m.cols)) if column_order is None else list(column_order)
    if sorted(order) != list(range(m.cols)):
        raise PreconditionError("column_order must be a permutation of the columns")

    work = [list(row) for row in m.entries]
    pivots: list[int] = []
    next_row = 0
    for c in order:
        if next_row == len(work):
            break
        found = next((r for r in range(next_row, len(work)) if work[r][c] != 0), None)
        if found is None:
            continue
        work[next_row], work[found] = work[found], work[next_row]
        pivot_row = work[next_row]
        inv = 1 / pivot_row[c]
        if inv != 1:
            pivot_row[:] = [v * inv for v in pivot_row]
        for r, row in enumerate(work):
            if r == next_row or row[c] == 0:
                continue
            factor = row[c]
            row[:] = [v - factor * p for v, p in zip(row, pivot_row)]
        pivots.append(c)
        next_row += 1

    reduced = RationalMatrix(m.rows, m.cols, work, None, m.col_labels)
    return EchelonForm(reduced, tuple(pivots))


def rank(m: RationalMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return echelonize_ordered(m).rank


def solve_consistent(
    m: RationalMatrix, rhs: Sequence[int | Fraction]
) -> list[Fraction] | None:
    """Some solution of ``m x = rhs`` (free variables set to 0), or None."""
    if len(rhs) != m.rows:
        raise PreconditionError(f"Right-hand side has {len(rhs)} entries, expected {m.rows}")
    augmented = RationalMatrix(
        m.rows,
        m.cols + 1,
        [list(row) + [to_rational(b)] for row, b in zip(m.entries, rhs)],
    )
    echelon = echelonize_ordered(augmented)
    if m.cols in echelon.pivots:
        return None
    solution = [Fraction(0)] * m.cols
    for k, c in enumerate(echelon.pivots):
        solution[c] = echelon.matrix.entries[k][m.cols]
    return solution


def determinant(
    m: RationalMatrix,
    rows: Sequence[int] | None = None,
    cols: Sequence[int] | None = None,
) -> Fraction:
    """Exact determinant of the selected square submatrix (whole matrix by default)."""
    rows = list(range(m.rows)) if rows is None else list(rows)
    cols = list(range(m.cols)) if cols is None else list(cols)
    if len(rows) != len(cols):
        raise PreconditionError(
            f"Determinant needs a square selection, got {len(rows)}x{len(cols)}"
        )
    work = [[m.entries[r][c] for c in cols] for r in rows]
    size = len(work)
    det = Fraction(1)
    for c in range(size):
        found = next((r for r in range(c, size) if work[r][c] != 0), None)
        if found is None:
            return Fraction(0)
        if found != c:
            work[c], work[found] = work[found], work[c]
            det = -det
        pivot = work[c][c]
        det *= pivot
        for r in range(c + 1, size):
            if work[r][c] == 0:
                continue
            factor = work[r][c] / pivot
            work[r] = [v - factor * p for v, p in zip(work[r], work[c])]
    return det


def square_selections(rows: int, cols: int, size: int):
    """All (row subset, column subset) pairs of the given size."""
    for row_sel in combinations(range(rows), size):
        for col_sel in combinations(range(cols), size):
            yield row_sel, col_sel


@dataclass
class QuotientSpace:
    """The quotient of k^ambient by the span of ``spanning`` vectors.

    The span is put in reduced echelon form relative to ``column_order``;
    its pivot columns are the leading positions and the remaining columns
    index a basis of the quotient. ``coordinates`` reduces any ambient
    vector to that basis (the normal form).
    """

    ambient: int
    spanning: list[list[Fraction]]
    column_order: Sequence[int] | None = None
    echelon: EchelonForm = field(init=False)
    basis_columns: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        m = RationalMatrix(len(self.spanning), self.ambient, [list(v) for v in self.spanning])
        self.echelon = echelonize_ordered(m, self.column_order)
        pivots = set(self.echelon.pivots)
        self.basis_columns = tuple(c for c in range(self.ambient) if c not in pivots)
        self._position = {c: k for k, c in enumerate(self.basis_columns)}
        self._pivot_rows = {c: k for k, c in enumerate(self.echelon.pivots)}

    @property
    def dim(self) -> int:
        return len(self.basis_columns)

    @property
    def leading_columns(self) -> tuple[int, ...]:
        return self.echelon.pivots

    def normal_form(self, vector: Sequence[Fraction]) -> list[Fraction]:
        """Reduce ``vector`` so it vanishes on every leading column."""
        out = list(vector)
        for c, k in self._pivot_rows.items():
            factor = out[c]
            if factor == 0:
                continue
            pivot_row = self.echelon.matrix.entries[k]
            out = [v - factor * p for v, p in zip(out, pivot_row)]
        return out

    def coordinates(self, vector: Sequence[Fraction]) -> list[Fraction]:
        reduced = self.normal_form(vector)
        return [reduced[c] for c in self.basis_columns]

    def unit_coordinates(self, column: int) -> list[Fraction]:
        """Coordinates of the ambient basis vector at ``column``."""
        if column in self._position:
            out = [Fraction(0)] * self.dim
            out[self._position[column]] = Fraction(1)
            return out
        unit = [Fraction(0)] * self.ambient
        unit[column] = Fraction(1)
        return self.coordinates(unit)
