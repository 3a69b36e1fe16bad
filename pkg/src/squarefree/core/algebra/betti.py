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

"""Multigraded Betti numbers from a block-triangular cochain complex.

In degree alpha every row j contributes the augmented cochain complex of
Delta_{j,alpha} = restrict_to_degree(Delta_j, alpha - beta_j), shifted by
l_j = |supp(alpha_j)| - |supp(alpha_1)|. The differential is the simplicial
one inside each summand plus correction terms chi_j that land in summands
i < j and carry the reduction coefficients of row j.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction

from squarefree.core.algebra.exponents import (
    ExponentVector,
    IndexSet,
    sgn_set,
    sgn_single,
    squarefree_part,
)
from squarefree.core.algebra.ideals import SquarefreeMonomialIdeal
from squarefree.core.algebra.reduction import SquarefreeModuleData, reduce
from squarefree.core.algebra.simplicial import (
    CochainBuilder,
    CochainComplex,
    SimplicialComplex,
    partition_vertices,
    reduced_cohomology_dims,
    restrict_to_degree,
    stanley_reisner,
)
from squarefree.core.exceptions import InternalConsistencyError, PreconditionError

Label = tuple[int, IndexSet]


@dataclass(frozen=True)
class BettiComplex:
    """C•(A, alpha): summand j sits with shift ``shifts[j]``; basis labels are (j, face)."""

    alpha: ExponentVector
    shifts: dict[int, int]
    summands: dict[int, SimplicialComplex]
    complex: CochainComplex
    base_support: int

    def cohomological_degree(self, i: int) -> int:
        """The cohomological degree whose cohomology is b_i."""
        return self.base_support - i - 1

    def summand_dims(self, j: int) -> dict[int, int]:
        dims: dict[int, int] = {}
        for face in self.summands[j].faces:
            t = len(face) - 1 - self.shifts[j]
            dims[t] = dims.get(t, 0) + 1
        return dict(sorted(dims.items()))


@dataclass(frozen=True)
class BettiEntry:
    i: int
    degree: ExponentVector
    value: int


def summand(data: SquarefreeModuleData, alpha: ExponentVector, j: int) -> SimplicialComplex:
    return restrict_to_degree(data.complex(j), alpha - data.beta(j))


def target_face(
    data: SquarefreeModuleData, alpha: ExponentVector, i: int, j: int, face: IndexSet
) -> IndexSet:
    """The face of Delta_{i,alpha} that a chi term from (j, face) lands on.

    It is supp(alpha_i) minus the part of supp(alpha_j) not covered by ``face``.
    """
    return (alpha - data.beta(i)).support() - ((alpha - data.beta(j)).support() - face)


def shifted_face(data: SquarefreeModuleData, i: int, j: int, face: IndexSet) -> IndexSet:
    """(supp(beta_j) ∪ face) minus supp(beta_i), the squarefree form of ``target_face``."""
    return (data.beta(j).support() | face) - data.beta(i).support()


def chi_map(
    data: SquarefreeModuleData,
    alpha: ExponentVector,
    j: int,
    tau: IndexSet,
    w: int,
) -> dict[Label, Fraction]:
    """The chi_j(tau*, w) term: one entry per lower summand with a nonzero coefficient.

    Each entry is the reduction coefficient r_i times
    sgn(w, tau+w) * sgn(tau+w, supp alpha_j) * sgn(target, supp alpha_i).
    For the 2 x 2 example at alpha = (1,0,1,1), j = 2, tau = {3}, w = 4
    this gives +1/2 on {1,3}*, not -1/2. The differential squares to zero
    and its cohomology matches the Koszul strand only with that sign.
    """
    alpha_j = alpha - data.beta(j)
    delta_j = summand(data, alpha, j)
    if tau not in delta_j:
        raise PreconditionError(f"{tau} is not a face of Delta_{j},{alpha}")
    tau_w = tau.add(w)
    if w in tau or w not in delta_j.vertex_set or tau_w in delta_j:
        raise PreconditionError(f"{w} does not lie in V_2 of {tau} in Delta_{j},{alpha}")

    rho = tau_w.indicator(data.n) + alpha_j - squarefree_part(alpha_j)
    reduction = reduce(data, j, rho)
    if reduction.standard:
        raise InternalConsistencyError(
            f"x^{rho} v_{j} is standard although {tau_w} is not a face of Delta_{j},{alpha}"
        )

    support_j = alpha_j.support()
    terms: dict[Label, Fraction] = {}
    for i, r in sorted(reduction.coefficients.items()):
        target = target_face(data, alpha, i, j, tau_w)
        delta_i = summand(data, alpha, i)
        context = f"chi_{j}({tau}*, {w}) at alpha={alpha} into summand {i}"
        if target not in delta_i:
            raise InternalConsistencyError(f"{context}: {target} is not a face of Delta_{i},alpha")
        if alpha.is_squarefree():
            if not data.beta(i).support().issubset(tau_w | data.beta(j).support()):
                raise InternalConsistencyError(
                    f"{context}: supp(beta_{i}) is not inside {tau_w} ∪ supp(beta_{j})"
                )
            if shifted_face(data, i, j, tau_w) != target:
                raise InternalConsistencyError(
                    f"{context}: shifted face {shifted_face(data, i, j, tau_w)} != {target}"
                )
        sign = (
            sgn_single(w, tau_w)
            * sgn_set(tau_w, support_j)
            * sgn_set(target, (alpha - data.beta(i)).support())
        )
        terms[(i, target)] = sign * r
    return terms


def build_betti_complex(data: SquarefreeModuleData, alpha: ExponentVector) -> BettiComplex:
    from loguru import logger

    if alpha.n != data.n:
        raise PreconditionError(f"Degree {alpha} does not have {data.n} coordinates")
    base_support = len((alpha - data.beta(1)).support())
    shifts = {
        j: len((alpha - data.beta(j)).support()) - base_support for j in range(1, data.s + 1)
    }
    summands = {j: summand(data, alpha, j) for j in range(1, data.s + 1)}

    builder = CochainBuilder()
    for j, delta_j in summands.items():
        for face in sorted(delta_j.faces, key=IndexSet.sort_key):
            builder.add_basis(len(face) - 1 - shifts[j], (j, face))

    for j, delta_j in summands.items():
        for tau in delta_j.faces:
            link, missing = partition_vertices(delta_j, tau)
            for t in link:
                larger = tau.add(t)
                builder.add((j, tau), (j, larger), sgn_single(t, larger))
            for w in missing:
                for target, value in chi_map(data, alpha, j, tau, w).items():
                    builder.add((j, tau), target, value)

    complex_ = builder.build()
    complex_.check_square_zero(f"Betti complex at alpha={alpha}")
    logger.debug("Betti complex alpha={alpha} dims={dims}", alpha=alpha, dims=complex_.dims())
    return BettiComplex(alpha, shifts, summands, complex_, base_support)


def betti_numbers(data: SquarefreeModuleData, alpha: ExponentVector) -> list[int]:
    """b_0..b_n at alpha."""
    built = build_betti_complex(data, alpha)
    cohomology = built.complex.cohomology_dims()
    return [cohomology.get(built.cohomological_degree(i), 0) for i in range(data.n + 1)]


def betti_number(data: SquarefreeModuleData, i: int, alpha: ExponentVector) -> int:
    if i < 0:
        raise PreconditionError(f"Homological degree must be nonnegative, got {i}")
    if i > data.n:
        return 0
    return betti_numbers(data, alpha)[i]


def betti_table(
    data: SquarefreeModuleData,
    progress: Callable[[ExponentVector], None] | None = None,
) -> list[BettiEntry]:
    """Every nonzero b_{i,alpha} over alpha in {0,1}^n, sorted by i then degree."""
    entries = []
    for u in IndexSet.all_subsets(data.n):
        alpha = u.indicator(data.n)
        if progress is not None:
            progress(alpha)
        for i, value in enumerate(betti_numbers(data, alpha)):
            if value:
                entries.append(BettiEntry(i, alpha, value))
    return sorted(entries, key=lambda e: (e.i, e.degree.total_degree(), e.degree.coords))


def projective_dimension(table: list[BettiEntry]) -> int:
    """Largest i with a nonzero Betti number; -1 for the zero module."""
    return max((entry.i for entry in table), default=-1)


def hochster_betti(
    ideal: SquarefreeMonomialIdeal, n: int, i: int, alpha: ExponentVector
) -> int:
    """b_{i,alpha}(R/I) = dim H̃^(|supp alpha| - i - 1) of (Delta_I)_alpha."""
    restricted = restrict_to_degree(stanley_reisner(ideal, n), alpha)
    return reduced_cohomology_dims(restricted).get(len(alpha.support()) - i - 1, 0)
