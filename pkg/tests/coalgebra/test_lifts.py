#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for coderivation and coalgebra-morphism lifts
===================================================
"""

import pytest

import ochax.testing as ot
from ochax.coalgebra.lifts import (
    check_coderivation,
    check_morphism_lift,
    compose_families,
    gerstenhaber_bracket,
    intertwining_residual,
    lift_coderivation,
    lift_morphism,
    square_as_corollas,
)
from ochax.errors import DegreeError
from ochax.structures.ocha import identity_morphism


@pytest.mark.parametrize("builder", [ot.dual_numbers, ot.solvable_lie, ot.leibniz_pair])
def test_lift_is_a_coderivation(builder):
    S = builder(3)
    D = lift_coderivation(S.family)
    assert check_coderivation(D), f"{builder.__name__} lifts to a coderivation"


@pytest.mark.parametrize(
    "builder", [ot.dual_numbers, ot.solvable_lie, ot.leibniz_pair, ot.abelian_complex]
)
def test_structures_square_to_zero(builder):
    S = builder(3)
    assert square_as_corollas(lift_coderivation(S.family)).is_zero(), "D^2 = 0"
    assert gerstenhaber_bracket(S.family, S.family).is_zero(), "[m, m] = 0"


def test_corrupted_square_is_nonzero():
    S = ot.corrupted_dual_numbers(3)
    square = square_as_corollas(lift_coderivation(S.family))
    assert not square.is_zero(), "the broken product does not square to zero"
    assert ("e", "e", "x") in square.table("open", 0, 3), "failure is seen on (e, e, x)"


def test_identity_lift():
    S = ot.leibniz_pair(3)
    F = identity_morphism(S)
    lifted = lift_morphism(F.family)
    assert check_morphism_lift(lifted), "identity lifts to a coalgebra morphism"
    word = (("X",), ("e", "x"))
    assert lifted(word) == {word: 1}, "identity lift fixes words"
    with pytest.raises(DegreeError):
        lift_morphism(S.family)


def test_compose_and_intertwine_identity():
    S = ot.leibniz_pair(3)
    F = identity_morphism(S)
    assert compose_families(F.family, F.family) == F.family, "id o id = id"
    assert intertwining_residual(F.family, S.family, S.family).is_zero(), "id is a morphism"
