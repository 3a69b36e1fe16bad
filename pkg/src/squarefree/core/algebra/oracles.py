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

"""Independent strands of M ⊗ K• and of the Čech complex K(x^∞, M).

Nothing here uses initial ideals or reduction coefficients: each graded
piece of M (or of a localization M_F) is built straight from the
presentation as a quotient of labeled rows by the images of the
generators, and the maps between pieces are label inclusions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from squarefree.core.algebra.exact_linalg import QuotientSpace, RationalMatrix
from squarefree.core.algebra.exponents import ExponentVector, IndexSet, sgn_single
from squarefree.core.algebra.grading import GradingSolution, MultigradedMatrix
from squarefree.core.algebra.simplicial import CochainBuilder, CochainComplex
from squarefree.core.exceptions import InternalConsistencyError


@dataclass(frozen=True)
class LocalizedPiece:
    """The degree ``degree`` piece of M localized at the variables in ``inverted``.

    ``rows`` are the rows i whose basis monomial x^(degree - beta_i) only
    has negative exponents on inverted variables; ``generators`` likewise
    for the columns.
    """

    degree: ExponentVector
    inverted: IndexSet
    rows: tuple[int, ...]
    generators: tuple[int, ...]
    space: QuotientSpace = field(compare=False)

    @property
    def dim(self) -> int:
        return self.space.dim

    def basis_rows(self) -> tuple[int, ...]:
        return tuple(self.rows[c] for c in self.space.basis_columns)

    def coordinates_of_row(self, i: int) -> list[Fraction]:
        if i not in self.rows:
            raise InternalConsistencyError(
                f"Row {i} has no basis monomial in degree {self.degree} "
                f"localized at {self.inverted}"
            )
        return self.space.unit_coordinates(self.rows.index(i))


def localized_piece(
    matrix: MultigradedMatrix,
    solution: GradingSolution,
    degree: ExponentVector,
    inverted: IndexSet = IndexSet(),
) -> LocalizedPiece:
    rows = tuple(
        i
        for i in range(1, matrix.s + 1)
        if (degree - solution.beta(i)).negative_support().issubset(inverted)
    )
    generators = tuple(
        j
        for j in range(1, matrix.l + 1)
        if (degree - solution.gamma(j)).negative_support().issubset(inverted)
    )
    position = {i: k for k, i in enumerate(rows)}
    spanning = []
    for j in generators:
        vector = [Fraction(0)] * len(rows)
        for i, entry in matrix.column(j).items():
            vector[position[i]] = entry.coefficient
        spanning.append(vector)
    return LocalizedPiece(degree, inverted, rows, generators, QuotientSpace(len(rows), spanning))


def induced_map(source: LocalizedPiece, target: LocalizedPiece) -> RationalMatrix:
    """Matrix of the map sending each row label of ``source`` to the same label of ``target``.

    This is multiplication by x^(target.degree - source.degree) when the
    degrees differ and the localization map when the inverted sets differ.
    """
    m = RationalMatrix.zeros(target.dim, source.dim)
    for k, i in enumerate(source.basis_rows()):
        for r, value in enumerate(target.coordinates_of_row(i)):
            m.entries[r][k] = value
    return m


def _subsets_of_size(n: int, size: int) -> list[IndexSet]:
    return [IndexSet.of(c) for c in combinations(range(1, n + 1), size)]


def koszul_complex(
    matrix: MultigradedMatrix, solution: GradingSolution, alpha: ExponentVector
) -> CochainComplex:
    """The degree ``alpha`` strand of M ⊗ K•, with K_k placed in cohomological degree -k.

    Basis labels are (L, i): the wedge e_L times the class of the row-i
    basis monomial of M_(alpha - L).
    """
    n = matrix.n
    builder = CochainBuilder()
    pieces: dict[IndexSet, LocalizedPiece] = {}
    for k in range(n + 1):
        for wedge in _subsets_of_size(n, k):
            piece = localized_piece(matrix, solution, alpha - wedge.indicator(n))
            pieces[wedge] = piece
            for i in piece.basis_rows():
                builder.add_basis(-k, (wedge, i))

    for wedge, piece in pieces.items():
        for t in wedge:
            smaller = wedge.remove(t)
            image = induced_map(piece, pieces[smaller])
            target_rows = pieces[smaller].basis_rows()
            sign = sgn_single(t, wedge)
            for c, i in enumerate(piece.basis_rows()):
                for r, value in enumerate(image.column(c)):
                    if value != 0:
                        builder.add((wedge, i), (smaller, target_rows[r]), sign * value)

    complex_ = builder.build()
    complex_.check_square_zero(f"Koszul strand at {alpha}")
    return complex_


def koszul_oracle(
    matrix: MultigradedMatrix, solution: GradingSolution, alpha: ExponentVector
) -> list[int]:
    """Betti numbers b_0..b_n at ``alpha`` as dim H_k(M ⊗ K•)_alpha."""
    cohomology = koszul_complex(matrix, solution, alpha).cohomology_dims()
    return [cohomology.get(-k, 0) for k in range(matrix.n + 1)]


def cech_complex(
    matrix: MultigradedMatrix, solution: GradingSolution, alpha: ExponentVector
) -> CochainComplex:
    """The degree ``alpha`` strand of K(x^∞, M); the summand M_F sits in degree |F|."""
    n = matrix.n
    builder = CochainBuilder()
    pieces: dict[IndexSet, LocalizedPiece] = {}
    for r in range(n + 1):
        for inverted in _subsets_of_size(n, r):
            piece = localized_piece(matrix, solution, alpha, inverted)
            pieces[inverted] = piece
            for i in piece.basis_rows():
                builder.add_basis(r, (inverted, i))

    for inverted, piece in pieces.items():
        if not piece.dim:
            continue
        for h in IndexSet.full(n) - inverted:
            larger = inverted.add(h)
            image = induced_map(piece, pieces[larger])
            target_rows = pieces[larger].basis_rows()
            sign = sgn_single(h, larger)
            for c, i in enumerate(piece.basis_rows()):
                for r, value in enumerate(image.column(c)):
                    if value != 0:
                        builder.add((inverted, i), (larger, target_rows[r]), sign * value)

    complex_ = builder.build()
    complex_.check_square_zero(f"Čech strand at {alpha}")
    return complex_


def cech_oracle(
    matrix: MultigradedMatrix, solution: GradingSolution, alpha: ExponentVector
) -> list[int]:
    """dim H^i_m(M)_alpha for i = 0..n."""
    cohomology = cech_complex(matrix, solution, alpha).cohomology_dims()
    return [cohomology.get(i, 0) for i in range(matrix.n + 1)]
