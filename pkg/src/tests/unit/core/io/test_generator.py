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

import pytest

from squarefree.core.algebra.grading import (
    canonical_uniform_solution,
    find_squarefree_solution,
    is_uniform_rank,
    validate_multigraded,
)
from squarefree.core.exceptions import ValidationError
from squarefree.core.io.generator import generate_test_matrix
from squarefree.core.io.matrix_file import serialize, to_matrix

SHAPES = [(1, 1, 1), (3, 2, 2), (4, 2, 3), (5, 3, 4), (6, 1, 3)]


@pytest.mark.parametrize("n,s,l", SHAPES)
def test_same_seed_gives_same_file(n, s, l):
    assert serialize(generate_test_matrix(n, s, l, 7)) == serialize(
        generate_test_matrix(n, s, l, 7)
    )


@pytest.mark.parametrize("n,s,l", SHAPES)
@pytest.mark.parametrize("seed", [0, 1, 2])
def test_generated_matrix_is_uniform_rank_and_squarefree(n, s, l, seed):
    matrix_file = generate_test_matrix(n, s, l, seed)
    matrix = to_matrix(matrix_file)

    assert len(matrix_file.entries) == s * l
    assert validate_multigraded(matrix).ok
    assert is_uniform_rank(matrix)
    assert all(e.exponent.is_squarefree() for e in matrix.entries.values())
    assert canonical_uniform_solution(matrix) == find_squarefree_solution(matrix)


def test_coefficients_are_positive_unit_fractions():
    matrix_file = generate_test_matrix(4, 3, 4, 3)
    coefficients = [e.coefficient for e in matrix_file.entries.values()]

    assert all(c.numerator == 1 and c > 0 for c in coefficients)


def test_generated_file_carries_no_override():
    assert not generate_test_matrix(3, 2, 2, 0).has_solution_override


@pytest.mark.parametrize(
    "n,s,l,message",
    [
        (0, 1, 1, "--n must be between"),
        (65, 1, 1, "--n must be between"),
        (3, 0, 1, "--s must be at least 1"),
        (3, 3, 2, "--l must be at least --s"),
    ],
)
def test_generator_parameters_are_validated(n, s, l, message):
    with pytest.raises(ValidationError, match=message):
        generate_test_matrix(n, s, l, 0)
