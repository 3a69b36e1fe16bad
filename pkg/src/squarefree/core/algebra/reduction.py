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

"""Degreewise initial module of im(phi) and the reduction coefficients.

The free module F_0 has basis v_1..v_s with deg v_i = beta_i, compared by
position over term with v_s > ... > v_1. In a single multidegree delta the
piece (F_0)_delta holds at most one monomial per row, so eliminating the
spanning images of the generators in descending row order yields the
leading terms in degree delta directly. Squarefreeness bounds every sweep
to the 2^n degrees in {0,1}^n.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Literal

from squarefree.core.algebra.exact_linalg import QuotientSpace, RationalMatrix, rank
from squarefree.core.algebra.exponents import ExponentVector, IndexSet, join
from squarefree.core.algebra.grading import (
    GradingSolution,
    MultigradedMatrix,
    is_uniform_rank,
)
from squarefree.core.algebra.ideals import (
    SquarefreeMonomialIdeal,
    intersect_all,
    minimalize,
)
from squarefree.core.algebra.oracles import induced_map, localized_piece
from squarefree.core.algebra.simplicial import SimplicialComplex, stanley_reisner
from squarefree.core.exceptions import (
    InternalConsistencyError,
    PreconditionError,
    negative_exponent,
)

MonomialOrder = Literal["grlex", "lex"]

_INNER_KEYS: dict[str, Callable[[ExponentVector], tuple]] = {
    "grlex": lambda a: (a.total_degree(), a.coords),
    "lex": lambda a: a.coords,
}


@dataclass(frozen=True)
class PresentationTerm:
    row: int
    coefficient: Fraction
    exponent: ExponentVector


@dataclass(frozen=True)
class BasisElement:
    """The standard element x^exponent v_row."""

    row: int
    exponent: ExponentVector

    def render(self, names: Sequence[str]) -> str:
        monomial = self.exponent.monomial(names)
        return f"v{self.row}" if monomial == "1" else f"{monomial}*v{self.row}"


@dataclass(frozen=True)
class DegreeSlice:
    """(F_0)_delta, the spanning images of im(phi)_delta, and their echelon form.

    ``columns[k]`` is the row whose monomial x^(delta - beta_i) is ambient
    coordinate k; ``generators`` lists the columns j with gamma_j <= delta.
    """

    degree: ExponentVector
    columns: tuple[int, ...]
    generators: tuple[int, ...]
    space: QuotientSpace = field(compare=False)

    def column_of(self, i: int) -> int | None:
        return self.columns.index(i) if i in self.columns else None

    def leading_rows(self) -> frozenset[int]:
        return frozenset(self.columns[c] for c in self.space.leading_columns)

    def spanning_matrix(self) -> RationalMatrix:
        return RationalMatrix(
            len(self.space.spanning),
            len(self.columns),
            [list(v) for v in self.space.spanning],
        )


@dataclass(frozen=True)
class Reduction:
    """Normal form of x^alpha v_row.

    ``standard`` means the element is itself a basis element; otherwise
    ``coefficients`` maps j < row to r_{row,j,alpha}, zeros omitted, and
    the element is congruent to sum_j r_j x^(alpha + beta_row - beta_j) v_j.
    """

    row: int
    alpha: ExponentVector
    standard: bool
    coefficients: dict[int, Fraction]

    def is_zero(self) -> bool:
        return not self.standard and not self.coefficients


@dataclass(frozen=True)
class InitialDecomposition:
    """ini(im phi) = I_1 v_1 ⊕ ... ⊕ I_s v_s with the Stanley-Reisner complexes of the I_i."""

    ideals: tuple[SquarefreeMonomialIdeal, ...]
    complexes: tuple[SimplicialComplex, ...]

    @classmethod
    def from_ideals(
        cls, n: int, ideals: tuple[SquarefreeMonomialIdeal, ...]
    ) -> InitialDecomposition:
        return cls(ideals, tuple(stanley_reisner(ideal, n) for ideal in ideals))

    def ideal(self, i: int) -> SquarefreeMonomialIdeal:
        return self.ideals[i - 1]

    def complex(self, i: int) -> SimplicialComplex:
        return self.complexes[i - 1]

    def members(self, i: int) -> frozenset[IndexSet]:
        return self.ideal(i).members()


class SquarefreeModuleData:
    """M = coker(phi) for a multigraded matrix with a squarefree solution.

    Degree slices and reductions are memoized per exact degree; the
    initial decomposition is built once on first use.
    """

    def __init__(
        self,
        matrix: MultigradedMatrix,
        solution: GradingSolution,
        monomial_order: MonomialOrder = "grlex",
    ) -> None:
        if not solution.squarefree or not all(
            v.is_squarefree() for v in (*solution.gammas, *solution.betas)
        ):
            raise PreconditionError("SquarefreeModuleData needs a squarefree solution")
        if not solution.satisfies(matrix):
            raise PreconditionError("The solution does not satisfy gamma_j - beta_i = a_ij")
        if monomial_order not in _INNER_KEYS:
            raise PreconditionError(f"Unknown monomial order {monomial_order!r}")
        self.matrix = matrix
        self.solution = solution
        self.monomial_order = monomial_order
        self._slices: dict[ExponentVector, DegreeSlice] = {}
        self._reductions: dict[tuple[int, ExponentVector], Reduction] = {}
        self._decomposition: InitialDecomposition | None = None

    @property
    def n(self) -> int:
        return self.matrix.n

    @property
    def s(self) -> int:
        return self.matrix.s

    @property
    def l(self) -> int:
        return self.matrix.l

    def beta(self, i: int) -> ExponentVector:
        return self.solution.beta(i)

    def gamma(self, j: int) -> ExponentVector:
        return self.solution.gamma(j)

    def term_key(self, row: int, exponent: ExponentVector) -> tuple:
        """Position over term: the row first, then the inner monomial order."""
        return (row, _INNER_KEYS[self.monomial_order](exponent))

    @property
    def decomposition(self) -> InitialDecomposition:
        if self._decomposition is None:
            self._decomposition = initial_decomposition(self)
        return self._decomposition

    def complex(self, i: int) -> SimplicialComplex:
        return self.decomposition.complex(i)


def apply_presentation(data: SquarefreeModuleData, j: int) -> list[PresentationTerm]:
    """phi(w_j) = sum_i c_ij x^a_ij v_i, one term per stored entry of column j."""
    if not 1 <= j <= data.l:
        raise PreconditionError(f"Column {j} is outside 1..{data.l}")
    return [
        PresentationTerm(i, entry.coefficient, entry.exponent)
        for i, entry in data.matrix.column(j).items()
    ]


def degree_slice(data: SquarefreeModuleData, delta: ExponentVector) -> DegreeSlice:
    from loguru import logger

    if not delta.is_nonnegative():
        raise negative_exponent("degree_slice", delta)
    cached = data._slices.get(delta)
    if cached is not None:
        return cached

    columns = tuple(i for i in range(1, data.s + 1) if (delta - data.beta(i)).is_nonnegative())
    generators = tuple(
        j for j in range(1, data.l + 1) if (delta - data.gamma(j)).is_nonnegative()
    )
    position = {i: k for k, i in enumerate(columns)}
    spanning = []
    for j in generators:
        vector = [Fraction(0)] * len(columns)
        for term in apply_presentation(data, j):
            vector[position[term.row]] = term.coefficient
        spanning.append(vector)

    order = sorted(
        range(len(columns)),
        key=lambda k: data.term_key(columns[k], delta - data.beta(columns[k])),
        reverse=True,
    )
    result = DegreeSlice(
        delta, columns, generators, QuotientSpace(len(columns), spanning, order)
    )
    logger.debug(
        "slice degree={degree} rows={rows} generators={gens} rank={rank}",
        degree=delta,
        rows=len(columns),
        gens=len(generators),
        rank=result.space.echelon.rank,
    )
    data._slices[delta] = result
    return result


def initial_decomposition(data: SquarefreeModuleData) -> InitialDecomposition:
    """I_i from the leading rows of the slices at u + beta_i for every u in {0,1}^n."""
    ideals = []
    for i in range(1, data.s + 1):
        members = [
            u
            for u in IndexSet.all_subsets(data.n)
            if i in degree_slice(data, u.indicator(data.n) + data.beta(i)).leading_rows()
        ]
        ideals.append(SquarefreeMonomialIdeal.from_supports(data.n, members))
    return InitialDecomposition.from_ideals(data.n, tuple(ideals))


def uniform_rank_ideals(data: SquarefreeModuleData) -> InitialDecomposition:
    """I_i generated by the joins of every (s - i + 1)-subset of row i.

    Internal row i is ranked i-th from the bottom of the v-order, so a
    permuted order is already reflected in the row positions.
    """
    if data.l < data.s:
        raise PreconditionError(
            f"uniform_rank_ideals needs l >= s, got l={data.l} and s={data.s}"
        )
    if not is_uniform_rank(data.matrix):
        raise PreconditionError("uniform_rank_ideals needs a matrix of uniform rank")
    ideals = []
    for i in range(1, data.s + 1):
        row = [entry.exponent for entry in data.matrix.row(i).values()]
        joins = (join(list(picked)) for picked in combinations(row, data.s - i + 1))
        ideals.append(SquarefreeMonomialIdeal.from_exponents(data.n, joins))
    return InitialDecomposition.from_ideals(data.n, tuple(ideals))


def reduce(data: SquarefreeModuleData, i: int, alpha: ExponentVector) -> Reduction:
    """The coefficients r_{i,j,alpha} read off the slice at alpha + beta_i."""
    if not 1 <= i <= data.s:
        raise PreconditionError(f"Row {i} is outside 1..{data.s}")
    if alpha.n != data.n:
        raise PreconditionError(f"Degree {alpha} does not have {data.n} coordinates")
    if not alpha.is_nonnegative():
        raise negative_exponent("reduce", alpha)
    key = (i, alpha)
    cached = data._reductions.get(key)
    if cached is not None:
        return cached

    delta = alpha + data.beta(i)
    piece = degree_slice(data, delta)
    column = piece.column_of(i)
    standard = alpha.support() in data.complex(i)
    is_leading = column in piece.space.leading_columns
    if standard == is_leading:
        raise InternalConsistencyError(
            f"x^{alpha} v_{i}: the initial ideal says standard={standard} "
            f"but the slice at {delta} says leading={is_leading}"
        )

    coefficients: dict[int, Fraction] = {}
    if not standard:
        coordinates = piece.space.unit_coordinates(column)
        for basis_column, value in zip(piece.space.basis_columns, coordinates):
            if value == 0:
                continue
            j = piece.columns[basis_column]
            target = delta - data.beta(j)
            if j >= i or target.support() not in data.complex(j):
                raise InternalConsistencyError(
                    f"Reduction of x^{alpha} v_{i} cites x^{target} v_{j}, "
                    "which is not a lower standard element"
                )
            coefficients[j] = value

    result = Reduction(i, alpha, standard, coefficients)
    data._reductions[key] = result
    return result


def k_basis(data: SquarefreeModuleData, delta: ExponentVector) -> list[BasisElement]:
    """Standard elements x^(delta - beta_i) v_i of degree delta."""
    if not delta.is_nonnegative():
        return []
    basis = []
    for i in range(1, data.s + 1):
        exponent = delta - data.beta(i)
        if exponent.is_nonnegative() and exponent.support() in data.complex(i):
            basis.append(BasisElement(i, exponent))
    return basis


def dim_at(data: SquarefreeModuleData, delta: ExponentVector) -> int:
    return len(k_basis(data, delta))


def k_basis_table(data: SquarefreeModuleData) -> dict[IndexSet, list[BasisElement]]:
    """The basis in every squarefree degree, keyed by the degree's support."""
    return {u: k_basis(data, u.indicator(data.n)) for u in IndexSet.all_subsets(data.n)}


def leading_rows_expected(data: SquarefreeModuleData, delta: ExponentVector) -> frozenset[int]:
    """Rows whose monomial in degree delta lies in I_i."""
    return frozenset(
        i
        for i in range(1, data.s + 1)
        if (delta - data.beta(i)).is_nonnegative()
        and data.decomposition.ideal(i).contains(delta - data.beta(i))
    )


def direct_sum_violations(data: SquarefreeModuleData, bound: int = 2) -> list[ExponentVector]:
    """Degrees in {0..bound}^n whose leading rows differ from the squarefree sweep."""
    violations = []
    for delta in _box(data.n, bound):
        if degree_slice(data, delta).leading_rows() != leading_rows_expected(data, delta):
            violations.append(delta)
    return violations


def annihilator_membership(data: SquarefreeModuleData, alpha: ExponentVector) -> bool:
    """x^alpha kills M iff x^alpha v_i reduces to zero for every i."""
    if not alpha.is_nonnegative():
        raise negative_exponent("annihilator_membership", alpha)
    return all(reduce(data, i, alpha).is_zero() for i in range(1, data.s + 1))


def annihilator_by_sweep(data: SquarefreeModuleData) -> SquarefreeMonomialIdeal:
    return SquarefreeMonomialIdeal.from_supports(
        data.n,
        (
            u
            for u in IndexSet.all_subsets(data.n)
            if annihilator_membership(data, u.indicator(data.n))
        ),
    )


def annihilator_by_intersection(data: SquarefreeModuleData) -> SquarefreeMonomialIdeal:
    return intersect_all(data.decomposition.ideals)


def fitting_radical(data: SquarefreeModuleData) -> SquarefreeMonomialIdeal:
    """Radical of the ideal of s x s minors of a uniform-rank matrix.

    The minor on columns K is a nonzero multiple of x^(sum_K gamma_k - sum_i beta_i).
    """
    if not is_uniform_rank(data.matrix):
        raise PreconditionError("fitting_radical needs a matrix of uniform rank")
    if data.l < data.s:
        return SquarefreeMonomialIdeal.zero(data.n)
    beta_total = ExponentVector.zero(data.n)
    for i in range(1, data.s + 1):
        beta_total = beta_total + data.beta(i)
    supports = []
    for columns in combinations(range(1, data.l + 1), data.s):
        degree = -beta_total
        for k in columns:
            degree = degree + data.gamma(k)
        supports.append(degree.support())
    return SquarefreeMonomialIdeal(data.n, minimalize(supports))


def annihilator(data: SquarefreeModuleData) -> SquarefreeMonomialIdeal:
    from loguru import logger

    if is_uniform_rank(data.matrix):
        if data.l < data.s:
            logger.debug("Uniform rank with l < s: the annihilator is zero")
            return SquarefreeMonomialIdeal.zero(data.n)
        fitting = fitting_radical(data)
        intersection = annihilator_by_intersection(data)
        if fitting != intersection:
            raise InternalConsistencyError(
                f"Radical of the Fitting ideal {fitting} differs from I_1 ∩ ... ∩ I_s "
                f"= {intersection}"
            )
        return fitting
    return annihilator_by_sweep(data)


def krull_dimension(data: SquarefreeModuleData) -> int:
    """Largest face size over the non-void Delta_j; -1 for the zero module."""
    return max(
        (c.max_face_size() for c in data.decomposition.complexes if not c.is_void),
        default=-1,
    )


def _box(n: int, bound: int) -> Iterator[ExponentVector]:
    return (ExponentVector(coords) for coords in product(range(bound + 1), repeat=n))


def verify_squarefree_module(data: SquarefreeModuleData, bound: int = 2) -> list[str]:
    """Check x_k: M_delta -> M_(delta + e_k) is bijective for every k in supp(delta).

    Runs over delta in {0..bound}^n on pieces built from the presentation
    alone; returns a description of every failure.
    """
    failures = []
    pieces = {}

    def piece(degree: ExponentVector):
        if degree not in pieces:
            pieces[degree] = localized_piece(data.matrix, data.solution, degree)
        return pieces[degree]

    for delta in _box(data.n, bound):
        source = piece(delta)
        for k in delta.support():
            target = piece(delta + IndexSet.of([k]).indicator(data.n))
            if source.dim != target.dim:
                failures.append(
                    f"dim M_{delta} = {source.dim} but dim M_{target.degree} = {target.dim}"
                )
                continue
            if source.dim and rank(induced_map(source, target)) != source.dim:
                failures.append(f"x{k}: M_{delta} -> M_{target.degree} is not injective")
    return failures
