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

"""The line-based matrix file format.

    n 4
    vars x y z w        # optional
    size 2 2            # s l
    entry 1 1 1    1 1 0 0
    entry 2 1 1    0 1 0 1
    entry 1 2 1    1 0 1 0
    entry 2 2 2    0 0 1 1
    beta 1 0 0 0 1      # optional explicit squarefree solution
    gamma 1 1 1 0 1

``#`` starts a comment. An entry is ``entry i j c e_1 .. e_n`` with a
nonzero integer or ``p/q`` coefficient; entries that are not listed are
zero. ``beta``/``gamma`` lines, when present, must give every row and
every column.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from squarefree.core.algebra.exponents import MAX_VARIABLES, ExponentVector
from squarefree.core.algebra.grading import (
    GradingSolution,
    MatrixEntry,
    MultigradedMatrix,
)
from squarefree.core.exceptions import MatrixFormatError

_COEFFICIENT = re.compile(r"^[+-]?\d+(/\d+)?$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class MatrixFile:
    n: int
    s: int
    l: int
    entries: dict[tuple[int, int], MatrixEntry] = field(default_factory=dict)
    var_names: tuple[str, ...] | None = None
    betas: dict[int, ExponentVector] = field(default_factory=dict)
    gammas: dict[int, ExponentVector] = field(default_factory=dict)

    @property
    def has_solution_override(self) -> bool:
        return bool(self.betas or self.gammas)


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.n: int | None = None
        self.size: tuple[int, int] | None = None
        self.var_names: tuple[str, ...] | None = None
        self.entries: dict[tuple[int, int], MatrixEntry] = {}
        self.betas: dict[int, ExponentVector] = {}
        self.gammas: dict[int, ExponentVector] = {}

    def error(self, message: str, line: int | None) -> MatrixFormatError:
        return MatrixFormatError(message, line=line, source=self.source)

    def integer(self, token: str, what: str, line: int, minimum: int | None = None) -> int:
        try:
            value = int(token)
        except ValueError:
            raise self.error(f"{what} must be an integer, got {token!r}", line)
        if minimum is not None and value < minimum:
            raise self.error(f"{what} must be at least {minimum}, got {value}", line)
        return value

    def coefficient(self, token: str, line: int) -> Fraction:
        if not _COEFFICIENT.match(token):
            raise self.error(f"Coefficient must be an integer or p/q, got {token!r}", line)
        numerator, _, denominator = token.partition("/")
        if denominator and int(denominator) == 0:
            raise self.error(f"Coefficient {token!r} has a zero denominator", line)
        value = Fraction(int(numerator), int(denominator) if denominator else 1)
        if value == 0:
            raise self.error("Entry coefficients must be nonzero; omit zero entries", line)
        return value

    def exponents(self, tokens: list[str], line: int) -> ExponentVector:
        n = self.require_n(line)
        if len(tokens) != n:
            raise self.error(f"Expected {n} exponents, got {len(tokens)}", line)
        return ExponentVector.of(
            self.integer(t, "Exponent", line, minimum=0) for t in tokens
        )

    def require_n(self, line: int | None) -> int:
        if self.n is None:
            raise self.error("'n' must be declared before this line", line)
        return self.n

    def require_size(self, line: int | None) -> tuple[int, int]:
        if self.size is None:
            raise self.error("'size' must be declared before this line", line)
        return self.size

    def index(self, token: str, bound: int, what: str, line: int) -> int:
        value = self.integer(token, what, line)
        if not 1 <= value <= bound:
            raise self.error(f"{what} {value} is outside 1..{bound}", line)
        return value

    def feed(self, keyword: str, args: list[str], line: int) -> None:
        if keyword == "n":
            if self.n is not None:
                raise self.error("'n' declared twice", line)
            if len(args) != 1:
                raise self.error("'n' takes one value", line)
            n = self.integer(args[0], "n", line, minimum=1)
            if n > MAX_VARIABLES:
                raise self.error(f"n must be at most {MAX_VARIABLES}, got {n}", line)
            self.n = n
        elif keyword == "vars":
            n = self.require_n(line)
            if self.var_names is not None:
                raise self.error("'vars' declared twice", line)
            if len(args) != n or len(set(args)) != n:
                raise self.error(f"'vars' needs {n} distinct names", line)
            bad = [name for name in args if not _NAME.match(name)]
            if bad:
                raise self.error(f"Invalid variable name {bad[0]!r}", line)
            self.var_names = tuple(args)
        elif keyword == "size":
            if self.size is not None:
                raise self.error("'size' declared twice", line)
            if len(args) != 2:
                raise self.error("'size' takes two values: s l", line)
            self.size = (
                self.integer(args[0], "s", line, minimum=1),
                self.integer(args[1], "l", line, minimum=1),
            )
        elif keyword == "entry":
            s, l = self.require_size(line)
            if len(args) < 3:
                raise self.error("'entry' needs i j coefficient and the exponents", line)
            i = self.index(args[0], s, "Row", line)
            j = self.index(args[1], l, "Column", line)
            if (i, j) in self.entries:
                raise self.error(f"Duplicate entry ({i},{j})", line)
            self.entries[(i, j)] = MatrixEntry(
                self.coefficient(args[2], line), self.exponents(args[3:], line)
            )
        elif keyword in ("beta", "gamma"):
            s, l = self.require_size(line)
            if len(args) < 1:
                raise self.error(f"'{keyword}' needs an index and the exponents", line)
            target = self.betas if keyword == "beta" else self.gammas
            k = self.index(args[0], s if keyword == "beta" else l, keyword, line)
            if k in target:
                raise self.error(f"Duplicate {keyword} {k}", line)
            target[k] = self.exponents(args[1:], line)
        else:
            raise self.error(f"Unknown directive {keyword!r}", line)

    def finish(self) -> MatrixFile:
        n = self.require_n(None)
        s, l = self.require_size(None)
        return MatrixFile(
            n, s, l, self.entries, self.var_names, dict(self.betas), dict(self.gammas)
        )


def parse_text(text: str, source: str = "") -> MatrixFile:
    parser = _Parser(source)
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            parser.feed(tokens[0].lower(), tokens[1:], number)
    return parser.finish()


def parse(path: str | Path) -> MatrixFile:
    from loguru import logger

    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise MatrixFormatError(f"Cannot read file: {e}", source=str(path))
    matrix_file = parse_text(text, source=str(path))
    logger.debug(
        "Parsed {path}: n={n} s={s} l={l} entries={count}",
        path=path,
        n=matrix_file.n,
        s=matrix_file.s,
        l=matrix_file.l,
        count=len(matrix_file.entries),
    )
    return matrix_file


def _exponent_text(a: ExponentVector) -> str:
    return " ".join(str(c) for c in a.coords)


def serialize(matrix_file: MatrixFile) -> str:
    lines = [f"n {matrix_file.n}"]
    if matrix_file.var_names is not None:
        lines.append("vars " + " ".join(matrix_file.var_names))
    lines.append(f"size {matrix_file.s} {matrix_file.l}")
    for (i, j), entry in sorted(matrix_file.entries.items()):
        lines.append(f"entry {i} {j} {entry.coefficient}  {_exponent_text(entry.exponent)}")
    for i, beta in sorted(matrix_file.betas.items()):
        lines.append(f"beta {i}  {_exponent_text(beta)}")
    for j, gamma in sorted(matrix_file.gammas.items()):
        lines.append(f"gamma {j}  {_exponent_text(gamma)}")
    return "\n".join(lines) + "\n"


def to_matrix(matrix_file: MatrixFile) -> MultigradedMatrix:
    return MultigradedMatrix(
        matrix_file.n,
        matrix_file.s,
        matrix_file.l,
        dict(matrix_file.entries),
        matrix_file.var_names,
    )


def from_matrix(
    matrix: MultigradedMatrix, solution: GradingSolution | None = None
) -> MatrixFile:
    """The file form of a matrix, optionally pinning ``solution`` as an override."""
    matrix_file = MatrixFile(
        matrix.n, matrix.s, matrix.l, dict(matrix.entries), matrix.var_names
    )
    if solution is not None:
        matrix_file.betas = {i: solution.beta(i) for i in range(1, matrix.s + 1)}
        matrix_file.gammas = {j: solution.gamma(j) for j in range(1, matrix.l + 1)}
    return matrix_file
