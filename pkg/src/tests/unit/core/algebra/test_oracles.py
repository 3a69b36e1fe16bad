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

import random
from itertools import product

import pytest

from squarefree.core.algebra.betti import betti_numbers, build_betti_complex
from squarefree.core.algebra.exponents import ExponentVector, IndexSet
from squarefree.core.algebra.localcohom import (
    build_L_complex,
    local_cohomology_dims,
    sign_patterns,
)
from squarefree.core.algebra.oracles import (
    cech_complex,
    cech_oracle,
    induced_map,
    koszul_complex,
    koszul_oracle,
    localized_piece,
)
from tests.matrices import GENERATED_SEEDS, example_data, generated_data

# every third shape, for the heavier complex-by-complex comparisons
GENERATED_SAMPLE = GENERATED_SEEDS[::3]


def V(*coords):
    return ExponentVector(coords)


def squarefree_degrees(n):
    return [u.indicator(n) for u in IndexSet.all_subsets(n)]


def pattern_degrees(n):
    return [plus.indicator(n) - minus.indicator(n) for plus, minus in sign_patterns(n)]


def non_squarefree_sample(n, seed, count=20):
    rng = random.Random(seed)
    sample = []
    for _ in range(count):
        coords = [rng.randrange(3) for _ in range(n)]
        coords[rng.randrange(n)] = 2
        sample.append(ExponentVector(coords))
    return sample


def assert_betti_agrees(data):
    for alpha in squarefree_degrees(data.n):
        assert betti_numbers(data, alpha) == koszul_oracle(
            data.matrix, data.solution, alpha
        ), f"Betti numbers differ at {alpha}"


def assert_local_cohomology_agrees(data):
    for alpha in pattern_degrees(data.n):
        assert local_cohomology_dims(data, alpha) == cech_oracle(
            data.matrix, data.solution, alpha
        ), f"Local cohomology differs at {alpha}"


def assert_square_zero(complex_):
    for t in complex_.degrees():
        if complex_.dim(t + 1) and complex_.dim(t + 2):
            assert (complex_.differential(t + 1) @ complex_.differential(t)).is_zero()


def alternating_cohomology(complex_):
    return sum((-1) ** (t % 2) * d for t, d in complex_.cohomology_dims().items())


# -----------------------------------------------------------------------------
# Localized pieces
# -----------------------------------------------------------------------------


def test_localized_piece_of_example():
    data = example_data()
    piece = localized_piece(data.matrix, data.solution, V(1, 0, 0, 1))

    assert piece.rows == (1, 2)
    assert piece.generators == ()
    assert piece.dim == 2


def test_localization_admits_negative_exponents():
    data = example_data()
    plain = localized_piece(data.matrix, data.solution, V(0, 0, 0, 0))
    inverted = localized_piece(data.matrix, data.solution, V(0, 0, 0, 0), IndexSet.of([1, 4]))

    assert plain.dim == 0
    assert inverted.rows == (1, 2)


def test_induced_map_in_quotient_coordinates():
    data = example_data()
    source = localized_piece(data.matrix, data.solution, V(1, 0, 0, 1))
    target = localized_piece(data.matrix, data.solution, V(1, 0, 1, 1))

    assert target.basis_rows() == (2,)
    assert induced_map(source, target).entries == [[-2, 1]]


# -----------------------------------------------------------------------------
# Strands
# -----------------------------------------------------------------------------


def test_koszul_strand_at_a_relation_degree():
    data = example_data()
    alpha = V(1, 0, 1, 1)

    assert koszul_oracle(data.matrix, data.solution, alpha) == [0, 1, 0, 0, 0]
    koszul_complex(data.matrix, data.solution, alpha).check_square_zero()


def test_cech_strand_in_top_degree():
    data = example_data()
    alpha = V(0, -1, -1, 0)

    assert cech_oracle(data.matrix, data.solution, alpha) == [0, 0, 0, 2, 0]
    cech_complex(data.matrix, data.solution, alpha).check_square_zero()


def test_example_agrees_with_both_oracles():
    data = example_data()

    assert_betti_agrees(data)
    assert_local_cohomology_agrees(data)


@pytest.mark.parametrize("n,s,l,seed", GENERATED_SEEDS)
def test_generated_modules_agree_with_koszul(n, s, l, seed):
    assert_betti_agrees(generated_data(n, s, l, seed))


@pytest.mark.parametrize("n,s,l,seed", GENERATED_SEEDS)
def test_generated_modules_agree_with_cech(n, s, l, seed):
    assert_local_cohomology_agrees(generated_data(n, s, l, seed))


def test_betti_numbers_vanish_off_squarefree_degrees():
    data = example_data()
    zeros = [0] * (data.n + 1)

    for coords in product(range(3), repeat=data.n):
        if 2 not in coords:
            continue
        alpha = ExponentVector(coords)
        assert koszul_oracle(data.matrix, data.solution, alpha) == zeros
        assert betti_numbers(data, alpha) == zeros


@pytest.mark.parametrize("n,s,l,seed", GENERATED_SEEDS)
def test_generated_betti_numbers_vanish_at_non_squarefree_degrees(n, s, l, seed):
    data = generated_data(n, s, l, seed)
    zeros = [0] * (n + 1)

    for alpha in non_squarefree_sample(n, seed):
        assert koszul_oracle(data.matrix, data.solution, alpha) == zeros, str(alpha)
        assert betti_numbers(data, alpha) == zeros, str(alpha)


# -----------------------------------------------------------------------------
# Complex against complex
# -----------------------------------------------------------------------------


def test_betti_complex_of_example_has_the_koszul_strand_dims():
    data = example_data()
    alpha = V(1, 0, 1, 1)
    betti = build_betti_complex(data, alpha)
    koszul = koszul_complex(data.matrix, data.solution, alpha)

    assert betti.complex.dims() == {-1: 2, 0: 4, 1: 1}
    for k in range(data.n + 1):
        assert betti.complex.dim(betti.base_support - k - 1) == koszul.dim(-k)


@pytest.mark.parametrize("n,s,l,seed", [(4, 2, 2, 3), *GENERATED_SAMPLE])
def test_betti_complex_dims_match_the_koszul_strand(n, s, l, seed):
    data = generated_data(n, s, l, seed)

    for alpha in squarefree_degrees(n):
        betti = build_betti_complex(data, alpha)
        koszul = koszul_complex(data.matrix, data.solution, alpha)
        context = f"alpha={alpha}"

        for k in range(n + 1):
            t = betti.base_support - k - 1
            assert betti.complex.dim(t) == koszul.dim(-k), f"{context} k={k}"
        assert sum(betti.complex.dims().values()) == sum(koszul.dims().values()), context
        sign = (-1) ** ((betti.base_support - 1) % 2)
        assert betti.complex.euler_characteristic() == sign * koszul.euler_characteristic()
        assert betti.complex.euler_characteristic() == alternating_cohomology(betti.complex)
        assert_square_zero(betti.complex)


def test_L_complex_of_example_has_the_cech_strand_dims():
    data = example_data()
    alpha = V(0, 0, 0, 0)
    local = build_L_complex(data, alpha)
    cech = cech_complex(data.matrix, data.solution, alpha)

    assert local.complex.dims() == {-1: 2, 0: 6, 1: 4}
    for r in range(data.n + 1):
        assert local.complex.dim(r - local.base_negative - 1) == cech.dim(r)


@pytest.mark.parametrize("n,s,l,seed", [(4, 2, 2, 3), *GENERATED_SAMPLE])
def test_L_complex_dims_match_the_cech_strand(n, s, l, seed):
    data = generated_data(n, s, l, seed)

    for alpha in pattern_degrees(n):
        local = build_L_complex(data, alpha)
        cech = cech_complex(data.matrix, data.solution, alpha)
        context = f"alpha={alpha}"

        offset = local.base_negative + 1
        for r in range(n + 1):
            assert local.complex.dim(r - offset) == cech.dim(r), f"{context} r={r}"
        assert sum(local.complex.dims().values()) == sum(cech.dims().values()), context
        sign = (-1) ** (offset % 2)
        assert local.complex.euler_characteristic() == sign * cech.euler_characteristic()
        assert local.complex.euler_characteristic() == alternating_cohomology(local.complex)
        assert_square_zero(local.complex)


@pytest.mark.slow
@pytest.mark.parametrize("s,l,seed", [(2, 3, 11), (3, 3, 12)])
def test_six_variables_agree_with_both_oracles(s, l, seed):
    data = generated_data(6, s, l, seed)

    assert_betti_agrees(data)
    assert_local_cohomology_agrees(data)
