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

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from squarefree.core.algebra.exponents import ExponentVector, IndexSet
from squarefree.core.algebra.simplicial import (
    CochainBuilder,
    SimplicialComplex,
    cochain_complex,
    link_type_complex,
    partition_vertices,
    reduced_cohomology_dims,
    restrict_to_degree,
    stanley_reisner,
)
from squarefree.core.exceptions import InternalConsistencyError, PreconditionError
from tests.matrices import ideal_of

FULL4 = IndexSet.full(4)


def facets(*sets):
    return [IndexSet.of(s) for s in sets]


def square():
    return SimplicialComplex.from_facets(FULL4, facets({1, 2}, {2, 3}, {3, 4}, {1, 4}))


# -----------------------------------------------------------------------------
# SimplicialComplex
# -----------------------------------------------------------------------------


def test_void_and_irrelevant_differ():
    void = SimplicialComplex.void()
    irrelevant = SimplicialComplex.irrelevant()

    assert void.is_void
    assert not irrelevant.is_void
    assert void.max_face_size() == -1
    assert irrelevant.max_face_size() == 0


def test_faces_must_be_closed_under_subsets():
    with pytest.raises(PreconditionError, match="closed"):
        SimplicialComplex(FULL4, frozenset({IndexSet(), IndexSet.of([1, 2])}))


def test_faces_must_lie_on_the_vertex_set():
    with pytest.raises(PreconditionError, match="vertex set"):
        SimplicialComplex(IndexSet.of([1]), frozenset({IndexSet(), IndexSet.of([2])}))


def test_facets_of_square():
    assert square().facets() == facets({1, 2}, {1, 4}, {2, 3}, {3, 4})
    assert len(square().faces_of_size(1)) == 4


def test_cone():
    cone = SimplicialComplex.from_facets(IndexSet.of([1, 2, 3]), facets({1, 3}, {2, 3}))

    assert cone.is_cone_over(3)
    assert not cone.is_cone_over(1)


def test_partition_vertices():
    link, missing = partition_vertices(square(), IndexSet.of([1]))

    assert link == IndexSet.of([2, 4])
    assert missing == IndexSet.of([3])


def test_partition_vertices_needs_a_face():
    with pytest.raises(PreconditionError):
        partition_vertices(square(), IndexSet.of([1, 3]))


# -----------------------------------------------------------------------------
# Degree selection
# -----------------------------------------------------------------------------


def test_stanley_reisner_complex():
    complex_ = stanley_reisner(ideal_of(3, [{1, 2}]))

    assert complex_.facets() == facets({1, 3}, {2, 3})


def test_restrict_to_degree_uses_excess_support():
    complex_ = stanley_reisner(ideal_of(3, [{1, 2}]))
    restricted = restrict_to_degree(complex_, ExponentVector((2, 1, 0)))

    assert restricted.vertex_set == IndexSet.of([1, 2])
    assert restricted.faces == frozenset({IndexSet(), IndexSet.of([1])})


def test_restrict_to_negative_degree_is_void():
    restricted = restrict_to_degree(square(), ExponentVector((1, -1, 0, 0)))

    assert restricted.is_void


def test_link_type_complex():
    complex_ = SimplicialComplex.from_facets(IndexSet.full(3), facets({1, 2}, {2, 3}))
    linked = link_type_complex(complex_, ExponentVector((0, -1, 0)))

    assert linked.vertex_set == IndexSet.of([1, 3])
    assert linked.faces == frozenset({IndexSet(), IndexSet.of([1]), IndexSet.of([3])})


# -----------------------------------------------------------------------------
# Cochain complexes
# -----------------------------------------------------------------------------


@pytest.mark.parametrize(
    "complex_,expected",
    [
        (square(), {-1: 0, 0: 0, 1: 1}),
        (SimplicialComplex.from_facets(FULL4, facets({1}, {2})), {-1: 0, 0: 1}),
        (SimplicialComplex.irrelevant(FULL4), {-1: 1}),
        (SimplicialComplex.simplex(IndexSet.of([1, 2, 3])), {-1: 0, 0: 0, 1: 0, 2: 0}),
        (SimplicialComplex.void(FULL4), {}),
    ],
)
def test_reduced_cohomology(complex_, expected):
    assert reduced_cohomology_dims(complex_) == expected


@given(st.lists(st.integers(min_value=1, max_value=(1 << 5) - 1), max_size=5))
def test_random_complexes_satisfy_euler(masks):
    complex_ = SimplicialComplex.from_facets(IndexSet.full(5), [IndexSet(m) for m in masks])
    cochains = cochain_complex(complex_)
    cochains.check_square_zero()

    alternating = sum((-1) ** (t % 2) * d for t, d in cochains.cohomology_dims().items())
    assert alternating == cochains.euler_characteristic()


def test_builder_rejects_degree_jumps():
    builder = CochainBuilder()
    builder.add_basis(0, "a")
    builder.add_basis(2, "b")

    with pytest.raises(InternalConsistencyError, match="lands in degree"):
        builder.add("a", "b", 1)


def test_builder_accumulates_entries():
    builder = CochainBuilder()
    builder.add_basis(0, "a")
    builder.add_basis(1, "b")
    builder.add("a", "b", 1)
    builder.add("a", "b", Fraction(1, 2))

    assert builder.build().differential(0).entries == [[Fraction(3, 2)]]
    assert "a" in builder
