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

"""Simplicial complexes, their degree-selected subcomplexes and cochain complexes.

The void complex (no faces at all) and the irrelevant complex {∅} are
different objects: the first has zero cochains, the second has a single
cochain in degree -1.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Hashable, Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from squarefree.core.algebra.exact_linalg import RationalMatrix, rank
from squarefree.core.algebra.exponents import ExponentVector, IndexSet, sgn_single
from squarefree.core.algebra.ideals import SquarefreeMonomialIdeal
from squarefree.core.exceptions import InternalConsistencyError, PreconditionError


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward closed family of faces on an explicit vertex set."""

    vertex_set: IndexSet
    faces: frozenset[IndexSet]

    def __post_init__(self) -> None:
        for face in self.faces:
            if not face.issubset(self.vertex_set):
                raise PreconditionError(f"Face {face} is not on the vertex set {self.vertex_set}")
            for v in face:
                if face.remove(v) not in self.faces:
                    raise PreconditionError(f"Faces are not closed under subsets at {face}")

    @classmethod
    def void(cls, vertex_set: IndexSet = IndexSet()) -> SimplicialComplex:
        return cls(vertex_set, frozenset())

    @classmethod
    def irrelevant(cls, vertex_set: IndexSet = IndexSet()) -> SimplicialComplex:
        return cls(vertex_set, frozenset({IndexSet()}))

    @classmethod
    def simplex(cls, vertex_set: IndexSet) -> SimplicialComplex:
        return cls(vertex_set, frozenset(vertex_set.subsets()))

    @classmethod
    def from_facets(cls, vertex_set: IndexSet, facets: Iterable[IndexSet]) -> SimplicialComplex:
        faces: set[IndexSet] = set()
        for facet in facets:
            faces.update(facet.subsets())
        return cls(vertex_set, frozenset(faces))

    @property
    def is_void(self) -> bool:
        return not self.faces

    def __contains__(self, face: object) -> bool:
        return face in self.faces

    def faces_of_size(self, size: int) -> list[IndexSet]:
        return sorted((f for f in self.faces if len(f) == size), key=IndexSet.sort_key)

    def facets(self) -> list[IndexSet]:
        return sorted(
            (
                f
                for f in self.faces
                if not any(f.add(v) in self.faces for v in self.vertex_set - f)
            ),
            key=IndexSet.sort_key,
        )

    def max_face_size(self) -> int:
        """Largest face cardinality; -1 for the void complex."""
        return max((len(f) for f in self.faces), default=-1)

    def is_cone_over(self, vertex: int) -> bool:
        return all(face.add(vertex) in self.faces for face in self.faces)


def stanley_reisner(ideal: SquarefreeMonomialIdeal, n: int | None = None) -> SimplicialComplex:
    """Faces are the supports of squarefree monomials outside the ideal."""
    n = ideal.n if n is None else n
    return SimplicialComplex(
        IndexSet.full(n),
        frozenset(u for u in IndexSet.all_subsets(n) if not ideal.contains(u)),
    )


def restrict_to_degree(complex_: SimplicialComplex, a: ExponentVector) -> SimplicialComplex:
    """Faces sigma inside supp(a) with sigma ∪ supp(a - q_a) in the complex.

    Void whenever ``a`` has a negative coordinate.
    """
    if not a.is_nonnegative():
        return SimplicialComplex.void()
    support = a.support()
    excess = IndexSet.of(k for k in support if a[k] >= 2)
    return SimplicialComplex(
        support,
        frozenset(s for s in support.subsets() if (s | excess) in complex_.faces),
    )


def link_type_complex(complex_: SimplicialComplex, a: ExponentVector) -> SimplicialComplex:
    """Faces tau avoiding the negative support of ``a`` with tau ∪ supp(a) in the complex.

    The vertex set is [n] minus the negative support.
    """
    negative = a.negative_support()
    support = a.support()
    vertices = IndexSet.full(a.n) - negative
    return SimplicialComplex(
        vertices,
        frozenset(t for t in vertices.subsets() if (t | support) in complex_.faces),
    )


def partition_vertices(
    complex_: SimplicialComplex, face: IndexSet
) -> tuple[IndexSet, IndexSet]:
    """Split the vertices off ``face`` into (extends to a face, does not)."""
    if face not in complex_.faces:
        raise PreconditionError(f"{face} is not a face")
    inside = IndexSet()
    outside = IndexSet()
    for t in complex_.vertex_set - face:
        if face.add(t) in complex_.faces:
            inside = inside.add(t)
        else:
            outside = outside.add(t)
    return inside, outside


@dataclass
class CochainComplex:
    """Labeled bases per cohomological degree plus the differentials between them.

    ``differentials[t]`` is the matrix of d^t: C^t -> C^{t+1}; column k is
    the image of ``bases[t][k]``. Missing degrees are zero spaces.
    """

    bases: dict[int, list[Hashable]]
    differentials: dict[int, RationalMatrix]

    def degrees(self) -> list[int]:
        return sorted(t for t, basis in self.bases.items() if basis)

    def dim(self, t: int) -> int:
        return len(self.bases.get(t, []))

    def dims(self) -> dict[int, int]:
        return {t: self.dim(t) for t in self.degrees()}

    def differential(self, t: int) -> RationalMatrix:
        if t in self.differentials:
            return self.differentials[t]
        return RationalMatrix.zeros(self.dim(t + 1), self.dim(t))

    def check_square_zero(self, context: str = "") -> None:
        for t in self.degrees():
            if self.dim(t + 2) == 0 or self.dim(t + 1) == 0:
                continue
            product = self.differential(t + 1) @ self.differential(t)
            if not product.is_zero():
                raise InternalConsistencyError(
                    f"d^{t + 1} ∘ d^{t} is not zero{': ' + context if context else ''}"
                )

    def cohomology_dims(self) -> dict[int, int]:
        """dim H^t for every degree carrying cochains."""
        ranks = {t: rank(self.differential(t)) for t in self.degrees()}
        return {
            t: self.dim(t) - ranks.get(t, 0) - ranks.get(t - 1, 0) for t in self.degrees()
        }

    def euler_characteristic(self) -> int:
        return sum((-1) ** (t % 2) * d for t, d in self.dims().items())


@dataclass
class CochainBuilder:
    """Accumulates signed entries between labeled basis elements."""

    bases: dict[int, list[Hashable]] = field(default_factory=dict)
    _index: dict[Hashable, tuple[int, int]] = field(default_factory=dict, init=False, repr=False)
    _entries: dict[int, dict[tuple[int, int], Fraction]] = field(
        default_factory=lambda: defaultdict(dict), init=False, repr=False
    )

    def add_basis(self, degree: int, label: Hashable) -> None:
        basis = self.bases.setdefault(degree, [])
        self._index[label] = (degree, len(basis))
        basis.append(label)

    def degree_of(self, label: Hashable) -> int:
        return self._index[label][0]

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def add(self, source: Hashable, target: Hashable, coefficient: Fraction | int) -> None:
        t, col = self._index[source]
        t_target, row = self._index[target]
        if t_target != t + 1:
            raise InternalConsistencyError(
                f"Differential from {source} (degree {t}) lands in degree {t_target}"
            )
        cell = self._entries[t]
        cell[(row, col)] = cell.get((row, col), Fraction(0)) + coefficient

    def build(self) -> CochainComplex:
        differentials = {}
        for t, basis in self.bases.items():
            target = self.bases.get(t + 1, [])
            if not basis or not target:
                continue
            m = RationalMatrix.zeros(len(target), len(basis))
            for (row, col), value in self._entries.get(t, {}).items():
                m.entries[row][col] = value
            differentials[t] = m
        return CochainComplex(dict(self.bases), differentials)


def cochain_complex(complex_: SimplicialComplex) -> CochainComplex:
    """Augmented cochain complex: faces of size j+1 span C^j, ∅ spans C^{-1}."""
    builder = CochainBuilder()
    for face in sorted(complex_.faces, key=IndexSet.sort_key):
        builder.add_basis(len(face) - 1, face)
    for face in complex_.faces:
        extend, _ = partition_vertices(complex_, face)
        for t in extend:
            larger = face.add(t)
            builder.add(face, larger, sgn_single(t, larger))
    return builder.build()


def reduced_cohomology_dims(complex_: SimplicialComplex) -> dict[int, int]:
    """dim H̃^i for every degree with cochains; empty for the void complex."""
    return cochain_complex(complex_).cohomology_dims()
