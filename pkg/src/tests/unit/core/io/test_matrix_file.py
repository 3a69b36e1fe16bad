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

import re
from fractions import Fraction

import pytest

from squarefree.core.algebra.exponents import ExponentVector
from squarefree.core.algebra.grading import canonical_uniform_solution
from squarefree.core.exceptions import MatrixFormatError, ValidationError
from squarefree.core.io.matrix_file import (
    from_matrix,
    parse,
    parse_text,
    serialize,
    to_matrix,
)
from tests.matrices import EXAMPLE_MAT, example_matrix

HEADER = "n 2\nsize 1 1\n"

# -----------------------------------------------------------------------------
# Parsing
# -----------------------------------------------------------------------------


def test_parse_example():
    matrix_file = parse_text(EXAMPLE_MAT)

    assert (matrix_file.n, matrix_file.s, matrix_file.l) == (4, 2, 2)
    assert matrix_file.var_names == ("x", "y", "z", "w")
    assert matrix_file.entries[(2, 2)].coefficient == 2
    assert matrix_file.entries[(2, 2)].exponent == ExponentVector((0, 0, 1, 1))
    assert not matrix_file.has_solution_override


def test_comments_blank_lines_and_case():
    text = "# header\n\nN 2   # two variables\nSIZE 1 1\n  entry 1 1 -3/4 1 0\n"
    matrix_file = parse_text(text)

    assert matrix_file.entries[(1, 1)].coefficient == Fraction(-3, 4)
    assert matrix_file.var_names is None


def test_missing_entries_are_zero():
    matrix_file = parse_text(HEADER)

    assert matrix_file.entries == {}


def test_solution_override_lines():
    text = HEADER + "entry 1 1 1 1 0\nbeta 1 0 0\ngamma 1 1 0\n"
    matrix_file = parse_text(text)

    assert matrix_file.has_solution_override
    assert matrix_file.betas == {1: ExponentVector((0, 0))}
    assert matrix_file.gammas == {1: ExponentVector((1, 0))}


@pytest.mark.parametrize(
    "text,message,line",
    [
        (HEADER + "entry 1 1 0 1 0\n", "must be nonzero", 3),
        (HEADER + "entry 1 1 1/0 1 0\n", "zero denominator", 3),
        (HEADER + "entry 1 1 x 1 0\n", "integer or p/q", 3),
        (HEADER + "entry 1 1 1 -1 0\n", "at least 0", 3),
        (HEADER + "entry 1 1 1 1\n", "Expected 2 exponents", 3),
        (HEADER + "entry 2 1 1 1 0\n", "Row 2 is outside 1..1", 3),
        (HEADER + "entry 1 1 1 1 0\nentry 1 1 2 0 1\n", "Duplicate entry (1,1)", 4),
        (HEADER + "beta 1 0 0\nbeta 1 0 0\n", "Duplicate beta 1", 4),
        ("n 65\n", "at most 64", 1),
        ("n 2\nn 2\n", "declared twice", 2),
        ("size 1 1\nentry 1 1 1 1\n", "'n' must be declared", 2),
        ("n 2\nentry 1 1 1 1 0\n", "'size' must be declared", 2),
        ("n 2\nvars x x\n", "distinct names", 2),
        ("n 1\nvars 1x\n", "Invalid variable name", 2),
        (HEADER + "matrix\n", "Unknown directive", 3),
    ],
)
def test_parse_errors_carry_the_line(text, message, line):
    with pytest.raises(MatrixFormatError, match=re.escape(message)) as exc_info:
        parse_text(text, source="bad.mat")

    assert exc_info.value.line == line
    assert str(exc_info.value).startswith(f"bad.mat:{line}: ")


def test_missing_header_is_reported_without_a_line():
    with pytest.raises(MatrixFormatError, match="'size' must be declared") as exc_info:
        parse_text("n 3\n")

    assert exc_info.value.line is None


def test_format_errors_are_validation_errors():
    assert issubclass(MatrixFormatError, ValidationError)
    assert MatrixFormatError("bad").exit_code == 1


def test_parse_reads_a_file(tmp_path):
    path = tmp_path / "example.mat"
    path.write_text(EXAMPLE_MAT, encoding="utf-8")

    assert parse(path) == parse_text(EXAMPLE_MAT, source=str(path))


def test_parse_unreadable_file(tmp_path):
    with pytest.raises(MatrixFormatError, match="Cannot read file"):
        parse(tmp_path / "missing.mat")


# -----------------------------------------------------------------------------
# Serialization
# -----------------------------------------------------------------------------


def test_serialize_is_sorted_and_stable():
    shuffled = "\n".join(reversed(EXAMPLE_MAT.strip().splitlines()[3:]))
    text = "n 4\nvars x y z w\nsize 2 2\n" + shuffled + "\n"

    assert serialize(parse_text(text)) == serialize(parse_text(EXAMPLE_MAT))
    assert serialize(parse_text(EXAMPLE_MAT)).splitlines()[3] == "entry 1 1 1  1 1 0 0"


def test_serialize_then_parse_preserves_the_file():
    matrix = example_matrix()
    matrix_file = from_matrix(matrix, canonical_uniform_solution(matrix))

    assert parse_text(serialize(matrix_file)) == matrix_file


def test_from_matrix_pins_the_solution():
    matrix = example_matrix()
    matrix_file = from_matrix(matrix, canonical_uniform_solution(matrix))

    assert matrix_file.betas[2] == ExponentVector((1, 0, 0, 0))
    assert matrix_file.gammas[1] == ExponentVector((1, 1, 0, 1))
    assert to_matrix(matrix_file) == matrix
