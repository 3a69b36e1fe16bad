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

"""Input validation for the squarefree CLI.

Each validator takes the raw option value and either returns it parsed
or raises ValidationError with a message meant for the user.
"""

import re
from pathlib import Path

from squarefree.core.algebra.exponents import MAX_VARIABLES, ExponentVector
from squarefree.core.exceptions import (
    ValidationError,
    degree_length_mismatch,
    path_not_found,
    sweep_too_large,
)

_INTEGER = re.compile(r"^[+-]?\d+$")


def validate_degree_string(text: str, n: int) -> ExponentVector:
    """Parse a comma-separated degree such as ``1,0,-1,2``.

    Args:
        text: The degree as typed on the command line
        n: Number of variables of the matrix

    Returns:
        The degree as an ExponentVector (negative coordinates allowed)

    Raises:
        ValidationError: If a coordinate is not an integer or the length is wrong
    """
    if text is None or not text.strip():
        raise ValidationError("Degree cannot be empty")

    parts = [part.strip() for part in text.split(",")]
    for part in parts:
        if not _INTEGER.match(part):
            raise ValidationError(f"Invalid degree coordinate {part!r} in {text!r}")

    if len(parts) != n:
        raise degree_length_mismatch(n, len(parts))

    return ExponentVector.of(int(part) for part in parts)


def validate_nonnegative_degree(degree: ExponentVector) -> ExponentVector:
    if not degree.is_nonnegative():
        raise ValidationError(f"Degree {degree} must have nonnegative coordinates here")
    return degree


def validate_row_index(i: int, s: int) -> int:
    if not 1 <= i <= s:
        raise ValidationError(f"Row {i} is out of range; the matrix has rows 1..{s}")
    return i


def validate_order(text: str | None, s: int) -> list[int] | None:
    """Parse ``--order i1,i2,...``: a permutation of 1..s listed highest first."""
    if text is None:
        return None

    parts = [part.strip() for part in text.split(",") if part.strip()]
    if not all(part.isdigit() for part in parts):
        raise ValidationError(f"Invalid row order {text!r}: expected comma-separated row numbers")

    order = [int(part) for part in parts]
    if sorted(order) != list(range(1, s + 1)):
        raise ValidationError(
            f"Row order {text!r} must list every row 1..{s} exactly once (highest first)"
        )
    return order


def validate_sweep_size(n: int, limit: int | None) -> None:
    """The 2^n and 3^n sweeps refuse n above ``limit``; None disables the guard."""
    if limit is not None and n > limit:
        raise sweep_too_large(n, limit)


def validate_generator_params(n: int, s: int, l: int) -> None:
    if not 1 <= n <= MAX_VARIABLES:
        raise ValidationError(f"--n must be between 1 and {MAX_VARIABLES}, got {n}")
    if s < 1:
        raise ValidationError(f"--s must be at least 1, got {s}")
    if l < s:
        raise ValidationError(f"--l must be at least --s (uniform rank needs l >= s), got l={l}, s={s}")


def validate_input_path(path: str) -> Path:
    resolved = Path(path)
    if not resolved.exists():
        raise path_not_found(path)
    if not resolved.is_file():
        raise ValidationError(f"Not a file: {path}")
    return resolved
