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
from itertools import combinations, product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from squarefree.context import GlobalConfig, GlobalContext
from squarefree.core.algebra.exponents import ExponentVector
from squarefree.core.algebra.grading import (
    MatrixEntry,
    MultigradedMatrix,
    apply_solution_override,
    canonical_uniform_solution,
    col_node,
    entry_graph,
    find_squarefree_solution,
    is_minimal_presentation,
    is_uniform_rank,
    lcm_shift_violations,
    permute_rows,
    require_squarefree_solution,
    row_node,
    solve_E_A,
    transpose,
    validate_multigraded,
)
from squarefree.core.exceptions import (
    InconsistentMatrixError,
    NoSquarefreeSolutionError,
    PreconditionError,
    ValidationError,
)
from squarefree.core.io.generator import generate_test_matrix
from squarefree.core.io.matrix_file import from_matrix, parse_text, serialize, to_matrix
from squarefree.pipelines.invariant_pipeline import InvariantPipeline
from tests.matrices import (
    INCONSISTENT_MAT,
    NO_SQUAREFREE_MAT,
    example_matrix,
    ideal_matrix,
)


def V(*coords):
    return ExponentVector(coords)


# -----------------------------------------------------------------------------
# MultigradedMatrix
# -----------------------------------------------------------------------------


def test_matrix_rejects_zero_coefficient():
    with pytest.raises(PreconditionError, match="zero coefficient"):
        MultigradedMatrix(1, 1, 1, {(1, 1): MatrixEntry(Fraction(0), V(1))})


def test_matrix_rejects_entry_outside_shape():
    with pytest.raises(PreconditionError, match="outside"):
        MultigradedMatrix(1, 1, 1, {(2, 1): MatrixEntry(Fraction(1), V(1))})


def test_matrix_rows_and_columns():
    m = example_matrix()

    assert list(m.row(2)) == [1, 2]
    assert m.column(2)[2].coefficient == 2
    assert m.names() == ("x", "y", "z", "w")
    assert m.label(1) == 1


def test_entry_graph_is_bipartite_with_one_edge_per_entry():
    graph = entry_graph(example_matrix())

    assert graph.number_of_nodes() == 4
    assert graph.number_of_edges() == 4
    assert graph.edges[row_node(2), col_node(2)]["exponent"] == V(0, 0, 1, 1)


# -----------------------------------------------------------------------------
# Degree system
# -----------------------------------------------------------------------------


def test_example_is_multigraded_with_canonical_solution():
    m = example_matrix()
    solution = find_squarefree_solution(m)

    assert validate_multigraded(m).ok
    assert solution.gammas == (V(1, 1, 0, 1), V(1, 0, 1, 1))
    assert solution.betas == (V(0, 0, 0, 1), V(1, 0, 0, 0))
    assert solution.satisfies(m)


def test_inconsistent_matrix_gives_a_cycle_witness():
    check = validate_multigraded(to_matrix(parse_text(INCONSISTENT_MAT)))

    assert not check.ok
    assert check.witness.edges == ((2, 2), (1, 2), (1, 1), (2, 1))
    assert check.witness.cycle_sum == V(1, -1)
    assert "alternating exponent sum (1,-1)" in str(check.witness)


def test_solve_on_inconsistent_matrix_raises():
    with pytest.raises(InconsistentMatrixError) as exc_info:
        solve_E_A(to_matrix(parse_text(INCONSISTENT_MAT)))

    assert exc_info.value.witness is not None


def test_no_squarefree_solution_reports_general_solution():
    m = to_matrix(parse_text(NO_SQUAREFREE_MAT))
    general = solve_E_A(m)

    assert find_squarefree_solution(m) is None
    assert len(general.components) == 1
    component = general.components[0]
    assert component.betas == {1: V(1, 0), 2: V(0, 1)}
    assert component.gammas == {1: V(2, 0), 2: V(1, 1)}
    assert component.widths() == (2, 1)
    assert general.describe() == [
        "beta_1 = (1,0) + t1",
        "beta_2 = (0,1) + t1",
        "gamma_1 = (2,0) + t1",
        "gamma_2 = (1,1) + t1",
    ]


def test_require_squarefree_solution_raises_with_family():
    m = to_matrix(parse_text(NO_SQUAREFREE_MAT))

    with pytest.raises(NoSquarefreeSolutionError, match="t1") as exc_info:
        require_squarefree_solution(m)

    assert exc_info.value.general_solution == solve_E_A(m)


def test_disconnected_entries_form_separate_components():
    m = MultigradedMatrix(
        2,
        2,
        2,
        {
            (1, 1): MatrixEntry(Fraction(1), V(1, 0)),
            (2, 2): MatrixEntry(Fraction(1), V(0, 1)),
        },
    )
    general = solve_E_A(m)
    solution = find_squarefree_solution(m)

    assert len(general.components) == 2
    assert [line for line in general.describe() if "t2" in line] == [
        "beta_2 = (0,0) + t2",
        "gamma_2 = (0,1) + t2",
    ]
    assert solution.satisfies(m)



def brute_force_squarefree(matrix):
    """Whether any 0/1 assignment of every beta_i and gamma_j satisfies the system."""
    n, s = matrix.n, matrix.s
    entries = [(i, j, entry.exponent.coords) for (i, j), entry in matrix.entries.items()]
    for bits in product((0, 1), repeat=n * (matrix.s + matrix.l)):
        if all(
            bits[(s + j - 1) * n + k] - bits[(i - 1) * n + k] == exponent[k]
            for i, j, exponent in entries
            for k in range(n)
        ):
            return True
    return False


def has_squarefree_solution(matrix):
    try:
        return find_squarefree_solution(matrix) is not None
    except InconsistentMatrixError:
        return False


# [[x, -], [1, x]]: gamma_2 - beta_1 is forced to 2x
STAIRCASE = MultigradedMatrix(
    1,
    2,
    2,
    {
        (1, 1): MatrixEntry(Fraction(1), V(1)),
        (2, 1): MatrixEntry(Fraction(1), V(0)),
        (2, 2): MatrixEntry(Fraction(1), V(1)),
    },
)

SEARCH_CASES = {
    "example": example_matrix(),
    "no-squarefree": to_matrix(parse_text(NO_SQUAREFREE_MAT)),
    "inconsistent": to_matrix(parse_text(INCONSISTENT_MAT)),
    "staircase": STAIRCASE,
    "ideal": ideal_matrix(3, [{1, 2}, {2, 3}]),
    "generated-1x2": to_matrix(generate_test_matrix(3, 1, 2, 0)),
    "generated-2x2": to_matrix(generate_test_matrix(3, 2, 2, 1)),
}


@pytest.mark.parametrize("name", sorted(SEARCH_CASES))
def test_squarefree_search_is_complete(name):
    matrix = SEARCH_CASES[name]

    assert has_squarefree_solution(matrix) == brute_force_squarefree(matrix)


@pytest.mark.parametrize("name", sorted(SEARCH_CASES))
def test_pipeline_refuses_exactly_the_unsolvable_matrices(name, tmp_path):
    matrix = SEARCH_CASES[name]
    path = tmp_path / f"{name}.mat"
    path.write_text(serialize(from_matrix(matrix)))
    pipeline = InvariantPipeline(GlobalContext(GlobalConfig()), str(path), "check")

    if brute_force_squarefree(matrix):
        assert pipeline.solution().satisfies(pipeline.matrix)
    elif validate_multigraded(matrix).ok:
        with pytest.raises(NoSquarefreeSolutionError):
            pipeline.solution()
    else:
        with pytest.raises(InconsistentMatrixError):
            pipeline.solution()


# -----------------------------------------------------------------------------
# Uniform rank
# -----------------------------------------------------------------------------


def test_example_is_uniform_rank_and_minimal():
    m = example_matrix()

    assert is_uniform_rank(m)
    assert is_minimal_presentation(m)


def test_missing_entry_is_not_uniform_rank():
    assert not is_uniform_rank(to_matrix(parse_text(NO_SQUAREFREE_MAT)))


def test_unit_entry_is_not_minimal():
    m = MultigradedMatrix(1, 1, 1, {(1, 1): MatrixEntry(Fraction(3), V(0))})

    assert not is_minimal_presentation(m)


@settings(max_examples=50, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(min_value=1, max_value=3), min_size=3, max_size=3),
        min_size=2,
        max_size=2,
    ),
    st.lists(st.booleans(), min_size=6, max_size=6),
)
def test_uniform_rank_matches_sympy_minors(magnitudes, negate):
    rows = [
        [-m if negate[3 * r + c] else m for c, m in enumerate(row)]
        for r, row in enumerate(magnitudes)
    ]
    entries = {
        (r + 1, c + 1): MatrixEntry(Fraction(v), V(1))
        for r, row in enumerate(rows)
        for c, v in enumerate(row)
    }
    m = MultigradedMatrix(1, 2, 3, entries)
    coefficients = sympy.Matrix(rows)
    expected = all(
        coefficients.extract(list(r), list(c)).det() != 0
        for r in combinations(range(2), 2)
        for c in combinations(range(3), 2)
    )

    assert is_uniform_rank(m) == expected


def test_canonical_uniform_solution_matches_search():
    for seed in range(5):
        m = to_matrix(generate_test_matrix(4, 2, 3, seed))

        assert canonical_uniform_solution(m) == find_squarefree_solution(m)


def test_canonical_uniform_solution_requires_uniform_rank():
    with pytest.raises(PreconditionError, match="uniform rank"):
        canonical_uniform_solution(to_matrix(parse_text(NO_SQUAREFREE_MAT)))


def test_lcm_shifts_are_row_independent():
    assert lcm_shift_violations(example_matrix()) == []
    for seed in range(3):
        assert lcm_shift_violations(to_matrix(generate_test_matrix(4, 3, 3, seed))) == []


def test_transpose_swaps_shape():
    t = transpose(example_matrix())

    assert (t.s, t.l) == (2, 2)
    assert t.entry(1, 2).exponent == V(0, 1, 0, 1)


# -----------------------------------------------------------------------------
# Row order and overrides
# -----------------------------------------------------------------------------


def test_permute_rows_reverses_the_order():
    permuted = permute_rows(example_matrix(), [1, 2])

    assert permuted.row_labels == (2, 1)
    assert permuted.label(1) == 2
    assert permuted.entry(1, 1).exponent == V(0, 1, 0, 1)
    assert permuted.entry(2, 2).exponent == V(1, 0, 1, 0)


def test_permute_rows_identity_order():
    m = example_matrix()
    permuted = permute_rows(m, [2, 1])

    assert permuted == m
    assert permuted.row_labels == (1, 2)


def test_permute_rows_rejects_non_permutation():
    with pytest.raises(ValidationError, match="permutation"):
        permute_rows(example_matrix(), [1, 1])


def test_override_is_keyed_by_input_rows():
    permuted = permute_rows(example_matrix(), [1, 2])
    solution = apply_solution_override(
        permuted,
        {1: V(0, 0, 0, 1), 2: V(1, 0, 0, 0)},
        {1: V(1, 1, 0, 1), 2: V(1, 0, 1, 1)},
    )

    assert solution.betas == (V(1, 0, 0, 0), V(0, 0, 0, 1))
    assert solution.satisfies(permuted)


def test_override_must_satisfy_the_system():
    with pytest.raises(ValidationError, match="does not satisfy"):
        apply_solution_override(
            example_matrix(),
            {1: V(0, 0, 0, 0), 2: V(1, 0, 0, 0)},
            {1: V(1, 1, 0, 1), 2: V(1, 0, 1, 1)},
        )


def test_override_must_be_complete():
    with pytest.raises(ValidationError, match="every beta_i"):
        apply_solution_override(example_matrix(), {1: V(0, 0, 0, 1)}, {})
