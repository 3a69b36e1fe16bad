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

from contextlib import contextmanager

import typer

"""
Custom exception hierarchy for the squarefree CLI application.

Every error carries the process exit code it maps to, so commands can
let errors bubble up and leave the translation to
``handle_squarefree_exception``:

    1  input errors (bad files, bad options, bad configuration)
    2  an oracle disagreed with a construction
    3  an internal invariant failed while building a complex
"""


class SquarefreeError(Exception):
    """Base exception for all squarefree-related errors.

    All squarefree-specific exceptions should inherit from this class to
    enable consistent error handling throughout the application.
    """

    exit_code: int = 1


class ValidationError(SquarefreeError):
    """Input validation errors.

    Raised when user input fails validation checks, such as malformed
    degree strings, out of range row indices or oversized sweeps.
    """

    pass


class MatrixFormatError(ValidationError):
    """Raised when a matrix file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None, source: str = ""):
        self.line = line
        self.source = source
        location = source
        if line is not None:
            location = f"{source}:{line}" if source else f"line {line}"
        super().__init__(f"{location}: {message}" if location else message)


class ConfigurationError(SquarefreeError):
    """Configuration-related errors.

    Raised when configuration files are invalid, missing, or contain
    incompatible settings.
    """

    pass


class PreconditionError(SquarefreeError):
    """An operation was called outside of its domain.

    For example a negative exponent passed where a vector in N^n is
    required, or the uniform-rank ideals requested for a matrix that is
    not of uniform rank.
    """

    pass


class InconsistentMatrixError(SquarefreeError):
    """The degree system of a matrix has no solution.

    Carries the cycle of entries whose alternating exponent sum does not
    vanish.
    """

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class NoSquarefreeSolutionError(SquarefreeError):
    """The degree system is consistent but admits no 0/1 solution."""

    def __init__(self, message: str, general_solution=None):
        self.general_solution = general_solution
        super().__init__(message)


class VerificationMismatch(SquarefreeError):
    """An independent oracle disagreed with a construction."""

    exit_code = 2

    def __init__(self, message: str, mismatches: list | None = None):
        self.mismatches = mismatches or []
        super().__init__(message)


class InternalConsistencyError(SquarefreeError):
    """An asserted invariant failed (d∘d ≠ 0, a target face outside its complex...)."""

    exit_code = 3


@contextmanager
def handle_squarefree_exception():
    """Function-based context manager to handle SquarefreeError exceptions.

    Yields control to the 'with' block's content. Any SquarefreeError
    escaping the block is printed to stderr and turned into a typer.Exit
    carrying the error's exit code.
    """
    try:
        yield

    except SquarefreeError as e:
        typer.secho(f"Error: {str(e)}", err=True)
        raise typer.Exit(e.exit_code)


# Convenience functions for creating common errors
def degree_length_mismatch(expected: int, got: int) -> ValidationError:
    """Create a ValidationError for a degree with the wrong number of coordinates."""
    return ValidationError(
        f"Degree has {got} coordinates but the matrix has {expected} variables"
    )


def sweep_too_large(n: int, limit: int) -> ValidationError:
    """Create a ValidationError for a sweep that exceeds the size guard."""
    return ValidationError(
        f"This command sweeps exponentially many degrees and n={n} exceeds the limit of {limit}. "
        "Pass --force (or raise max_sweep_n) to run it anyway"
    )


def path_not_found(path: str) -> ValidationError:
    """Create a ValidationError for non-existent paths."""
    return ValidationError(f"Path not found: {path}")


def negative_exponent(where: str, vector) -> PreconditionError:
    """Create a PreconditionError for a vector that must lie in N^n."""
    return PreconditionError(f"{where} expects a vector in N^n, got {vector}")
