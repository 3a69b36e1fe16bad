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

"""Graded local cohomology H^i_m(M)_alpha from the complex L^alpha.

Row i contributes the augmented cochain complex of
Delta_i^alpha = link_type_complex(Delta_i, alpha - beta_i) on the vertex set
[n] minus supp((alpha - beta_i)^-), shifted so that a face tau sits in
degree |tau| + |neg_i| - 1 - |neg_1|. Vertices that extend tau inside the
complex give the simplicial differential; the others rewrite through the
reduction coefficients of x^((alpha_i)^+) x^F v_i with F = tau h ∪ neg_i.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from squarefree.core.algebra.betti import BettiEntry, betti_table, projective_dimension
from squarefree.core.algebra.exponents import (
    ExponentVector,
    IndexSet,
    sgn_single,
    transposition_sign,
)
from squarefree.core.algebra.ideals import SquarefreeMonomialIdeal
from squarefree.core.algebra.reduction import (
    Reduction,
    SquarefreeModuleData,
    krull_dimension,
    reduce,
)
from squarefree.core.algebra.simplicial import (
    CochainBuilder,
    CochainComplex,
    SimplicialComplex,
    link_type_complex,
    partition_vertices,
    reduced_cohomology_dims,
    stanley_reisner,
)
from squarefree.core.exceptions import InternalConsistencyError, PreconditionError


@dataclass(frozen=True)
class SubscriptDisagreement:
    """A V_2 term where x^((alpha_i)^-) x^(tau h) v_i reduces differently from the rule used."""

    row: int
    face: IndexSet
    vertex: int
    used_degree: ExponentVector
    displayed_degree: ExponentVector
    used: dict[int, Fraction]
    displayed: dict[int, Fraction] | None

    def describe(self) -> str:
        displayed = "standard" if self.displayed is None else _render(self.displayed)
        return (
            f"row {self.row}, face {self.face}, vertex {self.vertex}: "
            f"r at {self.used_degree} = {_render(self.used)}, "
            f"r at {self.displayed_degree} = {displayed}"
        )


def _render(coefficients: dict[int, Fraction]) -> str:
    if not coefficients:
        return "0"
    return ", ".join(f"v{j}: {value}" for j, value in sorted(coefficients.items()))


@dataclass(frozen=True)
class LocalCohomologyComplex:
    alpha: ExponentVector
    negatives: dict[int, IndexSet]
    summands: dict[int, SimplicialComplex]
    complex: CochainComplex
    subscript_disagreements: list[SubscriptDisagreement] = field(default_factory=list)

    @property
    def base_negative(self) -> int:
        return len(self.negatives[1])

    def cohomological_degree(self, i: int) -> int:
        """The degree of L^alpha whose cohomology is H^i_m(M)_alpha."""
        return i - self.base_negative - 1


@dataclass(frozen=True)
class PatternResult:
    """Local cohomology at the representative of a sign pattern (plus, minus)."""

    plus: IndexSet
    minus: IndexSet
    dims: list[int]
    stable: bool = True

    @property
    def representative(self) -> ExponentVector:
        n = len(self.dims) - 1
        return self.plus.indicator(n) - self.minus.indicator(n)


@dataclass(frozen=True)
class DepthDimReport:
    """Smallest and largest i with some H^i_m(M) nonzero, next to dim M and n - pd M."""

    depth: int | None
    top: int | None
    krull_dimension: int
    n_minus_pd: int | None

    @property
    def consistent(self) -> bool:
        if self.depth is None:
            return self.krull_dimension == -1 and self.n_minus_pd is None
        return self.top == self.krull_dimension and self.depth == self.n_minus_pd


def _coefficients_of(reduction: Reduction) -> dict[int, Fraction] | None:
    return None if reduction.standard else reduction.coefficients


def build_L_complex(data: SquarefreeModuleData, alpha: ExponentVector) -> LocalCohomologyComplex:
    from loguru import logger

    if alpha.n != data.n:
        raise PreconditionError(f"Degree {alpha} does not have {data.n} coordinates")
    n = data.n
    shifted = {i: alpha - data.beta(i) for i in range(1, data.s + 1)}
    negatives = {i: a.negative_support() for i, a in shifted.items()}
    summands = {i: link_type_complex(data.complex(i), a) for i, a in shifted.items()}
    base = len(negatives[1])

    builder = CochainBuilder()
    for i, complex_i in summands.items():
        for tau in sorted(complex_i.faces, key=IndexSet.sort_key):
            builder.add_basis(len(tau) + len(negatives[i]) - 1 - base, (i, tau))

    disagreements = []
    for i, complex_i in summands.items():
        positive = shifted[i].positive_part()
        negative = shifted[i].negative_part()
        for tau in complex_i.faces:
            link, missing = partition_vertices(complex_i, tau)
            for h in link:
                larger = tau.add(h)
                builder.add((i, tau), (i, larger), sgn_single(h, larger))
            for h in missing:
                tau_h = tau.add(h)
                face = tau_h | negatives[i]
                degree = positive + face.indicator(n)
                reduction = reduce(data, i, degree)
                context = f"L complex at alpha={alpha}, row {i}, face {tau}, vertex {h}"
                if reduction.standard:
                    raise InternalConsistencyError(f"{context}: x^{degree} v_{i} is standard")

                displayed_degree = negative + tau_h.indicator(n)
                displayed = _coefficients_of(reduce(data, i, displayed_degree))
                if displayed != reduction.coefficients:
                    disagreements.append(
                        SubscriptDisagreement(
                            i, tau, h, degree, displayed_degree, reduction.coefficients, displayed
                        )
                    )

                for j, r in sorted(reduction.coefficients.items()):
                    if not negatives[j].issubset(face):
                        raise InternalConsistencyError(
                            f"{context}: supp of the negative part of alpha_{j} is not in {face}"
                        )
                    target = face - negatives[j]
                    if target not in summands[j]:
                        raise InternalConsistencyError(
                            f"{context}: {target} is not a face of Delta_{j}^alpha"
                        )
                    sign = (
                        sgn_single(h, tau_h)
                        * transposition_sign(negatives[i], face)
                        * transposition_sign(negatives[j], face)
                    )
                    builder.add((i, tau), (j, target), sign * r)

    complex_ = builder.build()
    complex_.check_square_zero(f"L complex at alpha={alpha}")
    logger.debug(
        "L complex alpha={alpha} dims={dims} disagreements={count}",
        alpha=alpha,
        dims=complex_.dims(),
        count=len(disagreements),
    )
    return LocalCohomologyComplex(alpha, negatives, summands, complex_, disagreements)


def _reindex(cohomology: dict[int, int], offset: int, n: int, what: str) -> list[int]:
    dims = [cohomology.get(i - offset, 0) for i in range(n + 1)]
    outside = {t + offset: d for t, d in cohomology.items() if d and not 0 <= t + offset <= n}
    if outside:
        raise InternalConsistencyError(f"{what} has cohomology outside 0..{n}: {outside}")
    return dims


def local_cohomology_dims(data: SquarefreeModuleData, alpha: ExponentVector) -> list[int]:
    """dim H^i_m(M)_alpha for i = 0..n."""
    built = build_L_complex(data, alpha)
    return _reindex(
        built.complex.cohomology_dims(), built.base_negative + 1, data.n, f"L^{alpha}"
    )


def sign_patterns(n: int) -> list[tuple[IndexSet, IndexSet]]:
    """All 3^n disjoint pairs (plus, minus) of subsets of [n]."""
    patterns = []
    for signs in product((0, 1, -1), repeat=n):
        plus = IndexSet.of(k for k, sign in enumerate(signs, start=1) if sign == 1)
        minus = IndexSet.of(k for k, sign in enumerate(signs, start=1) if sign == -1)
        patterns.append((plus, minus))
    return sorted(patterns, key=lambda p: (p[0].sort_key(), p[1].sort_key()))


def pattern_sweep(
    data: SquarefreeModuleData,
    scale: int = 2,
    progress: Callable[[ExponentVector], None] | None = None,
) -> list[PatternResult]:
    """Local cohomology at every pattern representative, rechecked at ``scale`` times it."""
    results = []
    for plus, minus in sign_patterns(data.n):
        alpha = plus.indicator(data.n) - minus.indicator(data.n)
        if progress is not None:
            progress(alpha)
        dims = local_cohomology_dims(data, alpha)
        stable = local_cohomology_dims(data, alpha.scaled(scale)) == dims
        results.append(PatternResult(plus, minus, dims, stable))
    return results


def depth_and_dim_report(
    data: SquarefreeModuleData,
    patterns: list[PatternResult] | None = None,
    table: list[BettiEntry] | None = None,
) -> DepthDimReport:
    patterns = pattern_sweep(data) if patterns is None else patterns
    table = betti_table(data) if table is None else table
    nonzero = sorted({i for result in patterns for i, d in enumerate(result.dims) if d})
    pd = projective_dimension(table)
    return DepthDimReport(
        depth=nonzero[0] if nonzero else None,
        top=nonzero[-1] if nonzero else None,
        krull_dimension=krull_dimension(data),
        n_minus_pd=None if pd < 0 else data.n - pd,
    )


def hochster_local_cohomology(
    ideal: SquarefreeMonomialIdeal, n: int, alpha: ExponentVector
) -> list[int]:
    """dim H^i_m(R/I)_alpha = dim H̃^(i - |supp alpha^-| - 1) of (Delta_I)^alpha."""
    complex_ = link_type_complex(stanley_reisner(ideal, n), alpha)
    offset = len(alpha.negative_support()) + 1
    return _reindex(reduced_cohomology_dims(complex_), offset, n, f"(Delta_I)^{alpha}")
