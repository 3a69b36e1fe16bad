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

"""Random squarefree uniform-rank matrices for testing and benchmarking."""

from __future__ import annotations

import random
from fractions import Fraction

from squarefree.core.algebra.exponents import IndexSet
from squarefree.core.algebra.grading import (
    MatrixEntry,
    is_uniform_rank,
    validate_multigraded,
)
from squarefree.core.exceptions import InternalConsistencyError
from squarefree.core.io.matrix_file import MatrixFile, to_matrix
from squarefree.core.validation import validate_generator_params


def _random_subset(rng: random.Random, pool: IndexSet) -> IndexSet:
    return IndexSet.of(k for k in pool if rng.random() < 0.5)


def generate_test_matrix(n: int, s: int, l: int, seed: int) -> MatrixFile:
    """An s x l matrix with squarefree entries x^(gamma_j - beta_i) and Cauchy coefficients.

    A random core C is shared by every gamma_j, each beta_i is a subset of
    C, and the coefficient of (i, j) is 1/(u_i + v_j) for distinct
    positive u and v, so every minor of every size is nonzero. The same
    seed always gives the same file.
    """
    from loguru import logger

    validate_generator_params(n, s, l)
    rng = random.Random(seed)
    everything = IndexSet.full(n)
    core = _random_subset(rng, everything)
    gammas = [core | _random_subset(rng, everything - core) for _ in range(l)]
    betas = [_random_subset(rng, core) for _ in range(s)]

    span = range(1, 4 * (s + l) + 1)
    u = rng.sample(span, s)
    v = rng.sample(span, l)

    entries = {}
    for i in range(1, s + 1):
        for j in range(1, l + 1):
            exponent = (gammas[j - 1] - betas[i - 1]).indicator(n)
            entries[(i, j)] = MatrixEntry(Fraction(1, u[i - 1] + v[j - 1]), exponent)

    matrix_file = MatrixFile(n, s, l, entries)
    matrix = to_matrix(matrix_file)
    if not validate_multigraded(matrix).ok or not is_uniform_rank(matrix):
        raise InternalConsistencyError(
            f"Generated matrix (n={n}, s={s}, l={l}, seed={seed}) is not a uniform-rank "
            "multigraded matrix"
        )
    logger.debug(
        "Generated n={n} s={s} l={l} seed={seed} core={core}",
        n=n,
        s=s,
        l=l,
        seed=seed,
        core=core,
    )
    return matrix_file
