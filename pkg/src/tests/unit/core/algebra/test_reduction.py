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
from itertools import product

import pytest

from squarefree.core.algebra.exponents import ExponentVector, IndexSet, squarefree_part
from squarefree.core.algebra.grading import (
    GradingSolution,
    canonical_uniform_solution,
    find_squarefree_solution,
    permute_rows,
    transpose,
)
from squarefree.core.algebra.reduction import (
    BasisElement,
    SquarefreeModuleData,
    annihilator,
    annihilator_by_intersection,
    annihilator_by_sweep,
    annihilator_membership,
    apply_presentation,
    degree_slice,
    dim_at,
    direct_sum_violations,
    fitting_radical,
    initial_decomposition,
    k_basis,
    k_basis_table,
    krull_dimension,
    leading_rows_expected,
    reduce,
    uniform_rank_ideals,
    verify_squarefree_module,
)
from squarefree.core.exceptions import PreconditionError
from squarefree.core.io.matrix_file import parse_text, to_matrix
from tests.matrices import (
    GENERATED_SEEDS,
    example_data,
    example_matrix,
    generated_data,
    ideal_data,
    ideal_of,
)

# [[x, y], [0, z]]: squarefree but not of uniform rank
PARTIAL_MAT = """\
n 3
vars x y z
size 2 2
entry 1 1 1  1 0 0
entry 1 2 1  0 1 0
entry 2 2 1  0 0 1
"""

# (x, y) as a single column: a module of rank one
COLUMN_MAT = """\
n 2
size 2 1
entry 1 1 1  1 0
entry 2 1 1  0 1
"""


# shapes with s < l, transposed into modules with more rows than columns
WIDE_SEEDS = [(n, s, l, seed) for n, s, l, seed in GENERATED_SEEDS if s < l]
MULTI_ROW_SEEDS = [(n, s, l, seed) for n, s, l, seed in GENERATED_SEEDS[::4] if s > 1]


def V(*coords):
    return ExponentVector(coords)


def partial_data() -> SquarefreeModuleData:
    matrix = to_matrix(parse_text(PARTIAL_MAT))
    return SquarefreeModuleData(matrix, find_squarefree_solution(matrix))


# -----------------------------------------------------------------------------
# SquarefreeModuleData
# -----------------------------------------------------------------------------


def test_module_data_rejects_non_squarefree_solution():
    matrix = example_matrix()
    solution = canonical_uniform_solution(matrix)
    shifted = GradingSolution(
        tuple(g + V(1, 0, 0, 0) for g in solution.gammas),
        tuple(b + V(1, 0, 0, 0) for b in solution.betas),
        squarefree=True,
    )

    with pytest.raises(PreconditionError, match="squarefree"):
        SquarefreeModuleData(matrix, shifted)


def test_module_data_rejects_unknown_order():
    matrix = example_matrix()

    with pytest.raises(PreconditionError, match="monomial order"):
        SquarefreeModuleData(matrix, canonical_uniform_solution(matrix), "revlex")


def test_apply_presentation():
    terms = apply_presentation(example_data(), 2)

    assert [(t.row, t.coefficient, t.exponent) for t in terms] == [
        (1, Fraction(1), V(1, 0, 1, 0)),
        (2, Fraction(2), V(0, 0, 1, 1)),
    ]


# -----------------------------------------------------------------------------
# Degree slices and the initial decomposition
# -----------------------------------------------------------------------------


def test_degree_slice_at_a_generator_degree():
    piece = degree_slice(example_data(), V(1, 1, 0, 1))

    assert piece.columns == (1, 2)
    assert piece.generators == (1,)
    assert piece.leading_rows() == frozenset({2})
    assert piece.space.dim == 1


def test_degree_slice_is_memoized():
    data = example_data()

    assert degree_slice(data, V(1, 1, 1, 1)) is degree_slice(data, V(1, 1, 1, 1))


def test_degree_slice_rejects_negative_degree():
    with pytest.raises(PreconditionError):
        degree_slice(example_data(), V(0, -1, 0, 0))


def test_initial_ideals_of_example():
    decomposition = initial_decomposition(example_data())

    assert decomposition.ideal(1) == ideal_of(4, [{1, 2, 3}])
    assert decomposition.ideal(2) == ideal_of(4, [{2, 4}, {3, 4}])


@pytest.mark.parametrize("order", ["grlex", "lex"])
def test_uniform_rank_ideals_match_the_sweep(order):
    data = example_data(order)

    assert uniform_rank_ideals(data).ideals == initial_decomposition(data).ideals


def test_row_order_changes_the_initial_ideals():
    matrix = permute_rows(example_matrix(), [1, 2])
    data = SquarefreeModuleData(matrix, canonical_uniform_solution(matrix))

    assert initial_decomposition(data).ideals == (
        ideal_of(4, [{2, 3, 4}]),
        ideal_of(4, [{1, 2}, {1, 3}]),
    )
    assert uniform_rank_ideals(data).ideals == initial_decomposition(data).ideals


@pytest.mark.parametrize("n,s,l,seed", [(3, 2, 2, 0), (4, 2, 3, 1), (4, 3, 3, 2), (5, 2, 4, 3)])
def test_uniform_rank_ideals_on_generated_matrices(n, s, l, seed):
    data = generated_data(n, s, l, seed)

    assert uniform_rank_ideals(data).ideals == initial_decomposition(data).ideals


def test_uniform_rank_ideals_require_uniform_rank():
    with pytest.raises(PreconditionError, match="uniform rank"):
        uniform_rank_ideals(partial_data())


def test_direct_sum_holds_beyond_squarefree_degrees():
    assert direct_sum_violations(example_data()) == []


def test_leading_rows_expected():
    assert leading_rows_expected(example_data(), V(1, 1, 1, 1)) == frozenset({1, 2})


# -----------------------------------------------------------------------------
# Reduction
# -----------------------------------------------------------------------------


@pytest.mark.parametrize(
    "row,alpha,expected",
    [
        (2, (0, 1, 0, 1), {1: Fraction(-1)}),
        (2, (0, 0, 1, 1), {1: Fraction(-1, 2)}),
        (1, (1, 1, 1, 0), {}),
    ],
)
def test_reduction_coefficients(row, alpha, expected):
    reduction = reduce(example_data(), row, V(*alpha))

    assert not reduction.standard
    assert reduction.coefficients == expected


def test_standard_elements_reduce_to_themselves():
    reduction = reduce(example_data(), 1, V(1, 0, 1, 0))

    assert reduction.standard
    assert reduction.coefficients == {}
    assert not reduction.is_zero()


def test_reduce_of_non_squarefree_degree():
    reduction = reduce(example_data(), 2, V(1, 1, 0, 2))

    assert not reduction.standard
    assert reduction.coefficients == {1: Fraction(-1)}


def test_reduce_against_the_squarefree_part():
    from loguru import logger

    data = example_data()
    assert reduce(data, 2, V(1, 1, 0, 2)).coefficients == reduce(data, 2, V(1, 1, 0, 1)).coefficients

    # every degree is reduced on its own; disagreements are only observed
    for coords in product(range(3), repeat=4):
        alpha = V(*coords)
        for i in (1, 2):
            ours = reduce(data, i, alpha).coefficients
            squarefree = reduce(data, i, squarefree_part(alpha)).coefficients
            if ours != squarefree:
                logger.info(
                    "r at {alpha} differs from r at its squarefree part for v{i}",
                    alpha=alpha,
                    i=i,
                )


def test_reduce_checks_its_arguments():
    data = example_data()

    with pytest.raises(PreconditionError, match="Row 3"):
        reduce(data, 3, V(0, 0, 0, 0))
    with pytest.raises(PreconditionError, match="coordinates"):
        reduce(data, 1, V(0, 0))
    with pytest.raises(PreconditionError):
        reduce(data, 1, V(0, 0, -1, 0))


# -----------------------------------------------------------------------------
# k-basis
# -----------------------------------------------------------------------------


def test_k_basis_in_a_generator_degree():
    basis = k_basis(example_data(), V(1, 0, 1, 1))

    assert basis == [BasisElement(1, V(1, 0, 1, 0))]
    assert basis[0].render(("x", "y", "z", "w")) == "xz*v1"


def test_k_basis_in_the_top_degree_is_empty():
    assert k_basis(example_data(), V(1, 1, 1, 1)) == []


def test_k_basis_counts():
    data = example_data()

    assert dim_at(data, V(1, 0, 0, 1)) == 2
    assert dim_at(data, V(0, 0, 0, 0)) == 0
    assert dim_at(data, V(0, 0, 0, 1)) == 1
    assert k_basis(data, V(-1, 0, 0, 1)) == []


def test_k_basis_table_covers_every_squarefree_degree():
    table = k_basis_table(example_data())

    assert len(table) == 16
    assert table[IndexSet.of([4])] == [BasisElement(1, V(0, 0, 0, 0))]


def test_example_dimensions_do_not_depend_on_the_monomial_order():
    grlex, lex = example_data("grlex"), example_data("lex")

    for coords in product(range(3), repeat=4):
        delta = ExponentVector(coords)
        assert dim_at(grlex, delta) == dim_at(lex, delta), str(delta)
        assert len(k_basis(grlex, delta)) == len(k_basis(lex, delta)), str(delta)


@pytest.mark.parametrize("n,s,l,seed", GENERATED_SEEDS[::4])
def test_generated_dimensions_do_not_depend_on_the_monomial_order(n, s, l, seed):
    grlex = generated_data(n, s, l, seed)
    lex = SquarefreeModuleData(grlex.matrix, grlex.solution, "lex")

    for u in IndexSet.all_subsets(n):
        delta = u.indicator(n)
        assert dim_at(grlex, delta) == dim_at(lex, delta), str(delta)


@pytest.mark.parametrize("n,s,l,seed", MULTI_ROW_SEEDS)
def test_dimensions_do_not_depend_on_the_row_order(n, s, l, seed):
    data = generated_data(n, s, l, seed)
    reversed_matrix = permute_rows(data.matrix, list(range(1, s + 1)))
    reordered = SquarefreeModuleData(
        reversed_matrix, canonical_uniform_solution(reversed_matrix)
    )

    for u in IndexSet.all_subsets(n):
        delta = u.indicator(n)
        assert dim_at(data, delta) == dim_at(reordered, delta), str(delta)


# -----------------------------------------------------------------------------
# Annihilator and dimension
# -----------------------------------------------------------------------------


def test_annihilator_of_example():
    data = example_data()
    expected = ideal_of(4, [{1, 2, 3, 4}])

    assert fitting_radical(data) == expected
    assert annihilator_by_intersection(data) == expected
    assert annihilator_by_sweep(data) == expected
    assert annihilator(data) == expected
    assert annihilator_membership(data, V(1, 1, 1, 1))
    assert not annihilator_membership(data, V(1, 1, 1, 0))


def test_annihilator_of_a_non_uniform_matrix():
    data = partial_data()

    assert annihilator(data) == ideal_of(3, [{1, 3}])
    assert annihilator_by_intersection(data) == ideal_of(3, [{1, 3}])
    assert krull_dimension(data) == 2


def test_annihilator_is_zero_with_fewer_columns_than_rows():
    matrix = to_matrix(parse_text(COLUMN_MAT))
    data = SquarefreeModuleData(matrix, canonical_uniform_solution(matrix))

    assert annihilator(data).is_zero()
    assert krull_dimension(data) == 2


def test_dimension_of_example():
    assert krull_dimension(example_data()) == 3


def test_quotient_by_an_ideal():
    data = ideal_data(3, [{1, 2}])

    assert annihilator(data) == ideal_of(3, [{1, 2}])
    assert krull_dimension(data) == 2


@pytest.mark.parametrize("n,s,l,seed", GENERATED_SEEDS)
def test_generated_annihilators_agree(n, s, l, seed):
    data = generated_data(n, s, l, seed)
    swept = annihilator_by_sweep(data)

    assert swept == annihilator_by_intersection(data)
    assert swept == fitting_radical(data)
    assert swept == annihilator(data)


@pytest.mark.parametrize("n,s,l,seed", WIDE_SEEDS)
def test_more_rows_than_columns_have_zero_annihilator(n, s, l, seed):
    matrix = transpose(generated_data(n, s, l, seed).matrix)
    data = SquarefreeModuleData(matrix, find_squarefree_solution(matrix))

    assert data.l < data.s
    assert annihilator(data).is_zero()
    assert annihilator_by_sweep(data).is_zero()
    assert annihilator_by_intersection(data).is_zero()
    assert krull_dimension(data) == n


def test_example_is_a_squarefree_module():
    assert verify_squarefree_module(example_data()) == []
