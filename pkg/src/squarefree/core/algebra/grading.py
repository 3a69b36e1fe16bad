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

"""Monomial presentation matrices and their degree system.

A matrix A = (c_ij x^a_ij) is multigraded when the equations
gamma_j - beta_i = a_ij (one per nonzero entry) have a solution. The
entries form a bipartite graph on rows and columns; a spanning forest of
that graph propagates tentative degrees and every non-tree edge either
agrees with them or closes a cycle whose alternating exponent sum is
nonzero.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import networkx as nx

from squarefree.core.algebra.exact_linalg import (
    RationalMatrix,
    determinant,
    square_selections,
)
from squarefree.core.algebra.exponents import ExponentVector, join
from squarefree.core.exceptions import (
    InconsistentMatrixError,
    InternalConsistencyError,
    NoSquarefreeSolutionError,
    PreconditionError,
    ValidationError,
)

Node = tuple[str, int]


def row_node(i: int) -> Node:
    return ("row", i)


def col_node(j: int) -> Node:
    return ("col", j)


@dataclass(frozen=True)
class MatrixEntry:
    coefficient: Fraction
    exponent: ExponentVector


@dataclass(frozen=True, eq=False)
class MultigradedMatrix:
    """An s x l matrix of terms c_ij x^a_ij over k[x_1..x_n].

    ``entries`` is keyed by 1-based (i, j); a missing key is a zero entry.
    ``row_labels`` maps internal row positions back to the rows of the
    input (they differ after ``permute_rows``).
    """

    n: int
    s: int
    l: int
    entries: Mapping[tuple[int, int], MatrixEntry]
    var_names: tuple[str, ...] | None = None
    row_labels: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 1 or self.s < 1 or self.l < 1:
            raise PreconditionError("A matrix needs n, s and l all at least 1")
        for (i, j), entry in self.entries.items():
            if not (1 <= i <= self.s and 1 <= j <= self.l):
                raise PreconditionError(f"Entry ({i},{j}) is outside a {self.s}x{self.l} matrix")
            if entry.coefficient == 0:
                raise PreconditionError(f"Entry ({i},{j}) has a zero coefficient")
            if entry.exponent.n != self.n:
                raise PreconditionError(f"Entry ({i},{j}) does not have {self.n} exponents")
            if not entry.exponent.is_nonnegative():
                raise PreconditionError(f"Entry ({i},{j}) has a negative exponent")
        if self.var_names is not None and len(self.var_names) != self.n:
            raise PreconditionError("One variable name per variable is required")
        if self.row_labels is not None and sorted(self.row_labels) != list(
            range(1, self.s + 1)
        ):
            raise PreconditionError("row_labels must be a permutation of the rows")

    def entry(self, i: int, j: int) -> MatrixEntry | None:
        return self.entries.get((i, j))

    def row(self, i: int) -> dict[int, MatrixEntry]:
        return {j: e for (r, j), e in sorted(self.entries.items()) if r == i}

    def column(self, j: int) -> dict[int, MatrixEntry]:
        return {i: e for (i, c), e in sorted(self.entries.items()) if c == j}

    def names(self) -> tuple[str, ...]:
        if self.var_names is not None:
            return self.var_names
        return tuple(f"x{k}" for k in range(1, self.n + 1))

    def label(self, i: int) -> int:
        """The input row that internal row ``i`` came from."""
        return i if self.row_labels is None else self.row_labels[i - 1]

    def coefficient_matrix(self) -> RationalMatrix:
        m = RationalMatrix.zeros(self.s, self.l)
        for (i, j), entry in self.entries.items():
            m.entries[i - 1][j - 1] = entry.coefficient
        return m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultigradedMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and self.s == other.s
            and self.l == other.l
            and dict(self.entries) == dict(other.entries)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.s, self.l, tuple(sorted(self.entries.items()))))


@dataclass(frozen=True)
class GradingSolution:
    """Column degrees gamma_j and row degrees beta_i, both 1-indexed by position."""

    gammas: tuple[ExponentVector, ...]
    betas: tuple[ExponentVector, ...]
    squarefree: bool

    def gamma(self, j: int) -> ExponentVector:
        return self.gammas[j - 1]

    def beta(self, i: int) -> ExponentVector:
        return self.betas[i - 1]

    def satisfies(self, matrix: MultigradedMatrix) -> bool:
        return all(
            self.gamma(j) - self.beta(i) == entry.exponent
            for (i, j), entry in matrix.entries.items()
        )


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk row -> col -> row ... through stored entries.

    ``cycle_sum`` is the alternating sum of the entry exponents along the
    walk; a consistent matrix makes it zero for every cycle.
    """

    edges: tuple[tuple[int, int], ...]
    cycle_sum: ExponentVector

    def __str__(self) -> str:
        walk = " -> ".join(f"({i},{j})" for i, j in self.edges)
        return f"cycle {walk} has alternating exponent sum {self.cycle_sum}"


@dataclass(frozen=True)
class GradingCheck:
    ok: bool
    witness: CycleWitness | None = None


@dataclass(frozen=True)
class Component:
    """One connected component of the entry graph with its base degrees.

    Every other solution on the component is the base one translated by a
    single vector of Z^n.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    betas: Mapping[int, ExponentVector]
    gammas: Mapping[int, ExponentVector]

    def values(self) -> list[ExponentVector]:
        return [self.betas[i] for i in self.rows] + [self.gammas[j] for j in self.cols]

    def widths(self) -> tuple[int, ...]:
        values = self.values()
        n = values[0].n
        return tuple(
            max(v[k] for v in values) - min(v[k] for v in values) for k in range(1, n + 1)
        )


@dataclass(frozen=True)
class GeneralSolution:
    components: tuple[Component, ...]

    def describe(self, names: Sequence[str] | None = None) -> list[str]:
        """Human readable family, one translation parameter t_c per component."""
        lines = []
        for c, component in enumerate(self.components, start=1):
            parameter = f"t{c}"
            for i in component.rows:
                lines.append(f"beta_{i} = {component.betas[i]} + {parameter}")
            for j in component.cols:
                lines.append(f"gamma_{j} = {component.gammas[j]} + {parameter}")
        return lines


@dataclass
class _Propagation:
    graph: nx.Graph
    tree: nx.Graph
    values: dict[Node, ExponentVector] = field(default_factory=dict)


def entry_graph(matrix: MultigradedMatrix) -> nx.Graph:
    """Bipartite graph with a node per row and column and an edge per stored entry."""
    graph = nx.Graph()
    graph.add_nodes_from(row_node(i) for i in range(1, matrix.s + 1))
    graph.add_nodes_from(col_node(j) for j in range(1, matrix.l + 1))
    for (i, j), entry in sorted(matrix.entries.items()):
        graph.add_edge(row_node(i), col_node(j), exponent=entry.exponent)
    return graph


def _component_root(nodes: Iterable[Node]) -> Node:
    rows = sorted(k for kind, k in nodes if kind == "row")
    if rows:
        return row_node(rows[0])
    return col_node(min(k for _, k in nodes))


def _propagate(matrix: MultigradedMatrix) -> _Propagation:
    graph = entry_graph(matrix)
    state = _Propagation(graph, nx.Graph())
    state.tree.add_nodes_from(graph.nodes)
    zero = ExponentVector.zero(matrix.n)
    for nodes in sorted(nx.connected_components(graph), key=lambda c: _component_root(c)):
        root = _component_root(nodes)
        state.values[root] = zero
        for parent, child in nx.bfs_edges(graph, root, sort_neighbors=sorted):
            exponent = graph.edges[parent, child]["exponent"]
            if parent[0] == "row":
                state.values[child] = state.values[parent] + exponent
            else:
                state.values[child] = state.values[parent] - exponent
            state.tree.add_edge(parent, child)
    return state


def _witness(state: _Propagation, i: int, j: int, n: int) -> CycleWitness:
    path = nx.shortest_path(state.tree, col_node(j), row_node(i))
    walk = [row_node(i), *path]
    edges = []
    cycle_sum = ExponentVector.zero(n)
    for a, b in zip(walk, walk[1:]):
        exponent = state.graph.edges[a, b]["exponent"]
        if a[0] == "row":
            edges.append((a[1], b[1]))
            cycle_sum = cycle_sum + exponent
        else:
            edges.append((b[1], a[1]))
            cycle_sum = cycle_sum - exponent
    return CycleWitness(tuple(edges), cycle_sum)


def validate_multigraded(matrix: MultigradedMatrix) -> GradingCheck:
    """Check consistency of E_A, returning a violating cycle when there is one."""
    from loguru import logger

    state = _propagate(matrix)
    for (i, j), entry in sorted(matrix.entries.items()):
        gamma = state.values[col_node(j)]
        beta = state.values[row_node(i)]
        if gamma - beta != entry.exponent:
            witness = _witness(state, i, j, matrix.n)
            logger.debug("Inconsistent entry ({i},{j}): {witness}", i=i, j=j, witness=witness)
            return GradingCheck(False, witness)
    return GradingCheck(True)


def solve_E_A(matrix: MultigradedMatrix) -> GeneralSolution:
    """Base solution per connected component, min-normalized per coordinate."""
    check = validate_multigraded(matrix)
    if not check.ok:
        raise InconsistentMatrixError(
            f"The matrix is not multigraded: {check.witness}", witness=check.witness
        )
    state = _propagate(matrix)
    components = []
    for nodes in sorted(nx.connected_components(state.graph), key=_component_root):
        members = sorted(nodes)
        values = [state.values[node] for node in members]
        lowest = ExponentVector(
            tuple(min(v[k] for v in values) for k in range(1, matrix.n + 1))
        )
        rows = tuple(sorted(k for kind, k in members if kind == "row"))
        cols = tuple(sorted(k for kind, k in members if kind == "col"))
        components.append(
            Component(
                rows,
                cols,
                {i: state.values[row_node(i)] - lowest for i in rows},
                {j: state.values[col_node(j)] - lowest for j in cols},
            )
        )
    return GeneralSolution(tuple(components))


def find_squarefree_solution(matrix: MultigradedMatrix) -> GradingSolution | None:
    """The canonical squarefree solution, or None when none exists.

    A 0/1 solution exists exactly when every coordinate of every component
    spans a width of at most one; the canonical one translates each
    coordinate so its minimum is 0.
    """
    general = solve_E_A(matrix)
    if any(max(component.widths()) > 1 for component in general.components):
        return None
    betas: dict[int, ExponentVector] = {}
    gammas: dict[int, ExponentVector] = {}
    for component in general.components:
        betas.update(component.betas)
        gammas.update(component.gammas)
    return GradingSolution(
        tuple(gammas[j] for j in range(1, matrix.l + 1)),
        tuple(betas[i] for i in range(1, matrix.s + 1)),
        squarefree=True,
    )


def require_squarefree_solution(matrix: MultigradedMatrix) -> GradingSolution:
    solution = find_squarefree_solution(matrix)
    if solution is None:
        general = solve_E_A(matrix)
        raise NoSquarefreeSolutionError(
            "The degree system has no squarefree solution; general solution:\n  "
            + "\n  ".join(general.describe()),
            general_solution=general,
        )
    return solution


def is_uniform_rank(matrix: MultigradedMatrix) -> bool:
    """Every entry nonzero and every square coefficient minor nonzero.

    Multigradedness makes every term of a minor share one monomial, so a
    minor vanishes exactly when the coefficient determinant does.
    """
    if len(matrix.entries) != matrix.s * matrix.l:
        return False
    coefficients = matrix.coefficient_matrix()
    for size in range(2, min(matrix.s, matrix.l) + 1):
        for rows, cols in square_selections(matrix.s, matrix.l, size):
            if determinant(coefficients, rows, cols) == 0:
                return False
    return True


def is_minimal_presentation(matrix: MultigradedMatrix) -> bool:
    """No entry is a unit (a nonzero constant)."""
    return all(not entry.exponent.is_zero() for entry in matrix.entries.values())


def canonical_uniform_solution(matrix: MultigradedMatrix) -> GradingSolution:
    """gamma_j = join of column j's exponents and beta_i = gamma_1 - a_i1."""
    if not is_uniform_rank(matrix):
        raise PreconditionError("canonical_uniform_solution needs a matrix of uniform rank")
    if not all(entry.exponent.is_squarefree() for entry in matrix.entries.values()):
        raise PreconditionError("canonical_uniform_solution needs squarefree entry exponents")

    gammas = tuple(
        join([e.exponent for e in matrix.column(j).values()]) for j in range(1, matrix.l + 1)
    )
    betas = tuple(gammas[0] - matrix.entries[(i, 1)].exponent for i in range(1, matrix.s + 1))
    solution = GradingSolution(gammas, betas, squarefree=True)

    if not solution.satisfies(matrix) or solution != find_squarefree_solution(matrix):
        raise InternalConsistencyError(
            "The join solution of a uniform-rank matrix disagrees with the canonical solution"
        )
    return solution


def transpose(matrix: MultigradedMatrix) -> MultigradedMatrix:
    return MultigradedMatrix(
        matrix.n,
        matrix.l,
        matrix.s,
        {(j, i): entry for (i, j), entry in matrix.entries.items()},
        matrix.var_names,
    )


def permute_rows(matrix: MultigradedMatrix, order: Sequence[int]) -> MultigradedMatrix:
    """Reorder rows so that ``order`` (highest first) becomes v_s > ... > v_1.

    The row listed k-th lands at internal position s - k + 1; ``row_labels``
    remembers where each internal row came from.
    """
    s = matrix.s
    if sorted(order) != list(range(1, s + 1)):
        raise ValidationError(f"Row order must be a permutation of 1..{s}, got {list(order)}")
    position = {original: s - k for k, original in enumerate(order)}
    labels = [0] * s
    for original, internal in position.items():
        labels[internal - 1] = matrix.label(original)
    return MultigradedMatrix(
        matrix.n,
        s,
        matrix.l,
        {(position[i], j): entry for (i, j), entry in matrix.entries.items()},
        matrix.var_names,
        tuple(labels),
    )


def apply_solution_override(
    matrix: MultigradedMatrix,
    betas: Mapping[int, ExponentVector],
    gammas: Mapping[int, ExponentVector],
) -> GradingSolution:
    """Validate an explicitly given degree assignment (keyed by input row/column)."""
    if set(betas) != set(range(1, matrix.s + 1)) or set(gammas) != set(
        range(1, matrix.l + 1)
    ):
        raise ValidationError("A solution override must give every beta_i and every gamma_j")
    solution = GradingSolution(
        tuple(gammas[j] for j in range(1, matrix.l + 1)),
        tuple(betas[matrix.label(i)] for i in range(1, matrix.s + 1)),
        squarefree=True,
    )
    if not all(v.is_squarefree() for v in (*solution.gammas, *solution.betas)):
        raise ValidationError("A solution override must consist of 0/1 vectors")
    if not solution.satisfies(matrix):
        raise ValidationError("The solution override does not satisfy gamma_j - beta_i = a_ij")
    return solution


def lcm_shift_violations(
    matrix: MultigradedMatrix, max_size: int = 3
) -> list[tuple[int, int, int, tuple[int, ...]]]:
    """Check the row-independence of lcm shifts on a uniform-rank matrix.

    For rows t, q, a column f and columns J (|J| <= max_size) the vector
    join(a_tf, a_tJ) - a_tf must not depend on the row. The same holds for
    columns, which is checked on the transpose. Returns (t, q, f, J) for
    every violation.
    """
    violations = []
    for m in (matrix, transpose(matrix)):
        for f in range(1, m.l + 1):
            others = [j for j in range(1, m.l + 1) if j != f]
            for size in range(1, min(max_size, len(others)) + 1):
                for cols in combinations(others, size):
                    shifts = {}
                    for t in range(1, m.s + 1):
                        base = m.entries[(t, f)].exponent
                        picked = [base] + [m.entries[(t, j)].exponent for j in cols]
                        shifts[t] = join(picked) - base
                    first = shifts[1]
                    violations.extend(
                        (1, q, f, cols) for q, shift in shifts.items() if shift != first
                    )
    return violations
