#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for formal elements and Maurer-Cartan solving
===================================================
"""

import pytest

import ochax.testing as ot
from ochax.core.graded import GradedSpace
from ochax.core.scalars import QQ
from ochax.core.series import TruncatedSeries, hbar
from ochax.deformation.mc import (
    FormalElement,
    is_mc,
    mc_residual,
    ordered_power,
    solve_mc,
    symmetric_power,
)
from ochax.errors import DegreeError, ObstructionError, OchaError, SectorError


@pytest.fixture
def line():
    return GradedSpace("closed", (("z", 0), ("y", 0), ("w", 1)))


def test_formal_element_basics(line):
    theta = FormalElement.from_orders(line, {1: {"z": 1}, 2: {"y": 3}}, 3)
    assert theta.coefficient(1) == {"z": 1}, "first order part"
    assert theta.coefficient(2) == {"y": 3}, "second order part"
    assert repr(FormalElement.from_orders(line, {1: {"z": 1}}, 3)) == "z: h"
    assert (theta - theta).is_zero(), "x - x = 0"
    assert theta.truncate(2) == FormalElement.from_orders(line, {1: {"z": 1}}, 2)
    assert theta.scaled(2).coefficient(2) == {"y": 6}


def test_formal_element_rejections(line):
    with pytest.raises(OchaError):
        FormalElement(line, {"z": [1, 1]}, 2)
    with pytest.raises(DegreeError):
        FormalElement(line, {"w": [0, 1]}, 2)
    with pytest.raises(SectorError):
        FormalElement(line, {"q": [0, 1]}, 2)


def test_orders_outside_the_ideal_are_dropped(line):
    theta = FormalElement.from_orders(line, {0: {"z": 1}, 3: {"z": 1}}, 3)
    assert theta.is_zero(), "only orders 1..N-1 survive"


def test_symmetric_power_weights(line):
    terms = dict(symmetric_power(line, {"z": hbar(3)}, 2))
    assert terms == {("z", "z"): TruncatedSeries([0, 0, 1], 3) / 2}, "x^2 / 2!"
    mixed = dict(symmetric_power(line, {"z": 1, "y": 1}, 2))
    assert mixed[("y", "z")] == 1, "distinct letters carry no factorial"
    assert mixed[("z", "z")] == QQ(1, 2)


def test_ordered_power_keeps_every_order():
    terms = dict(ordered_power({"a": 1, "b": 2}, 2))
    assert terms[("a", "b")] == 2 and terms[("b", "a")] == 2
    assert len(terms) == 4


def test_cocycle_in_an_abelian_algebra_is_mc():
    S = ot.abelian_complex()
    theta = solve_mc(S, {"z": 1}, 4)
    assert theta.coefficient(1) == {"z": 1}
    assert theta.coefficient(2) == {} and theta.coefficient(3) == {}, "no corrections"
    assert is_mc(S, theta)


def test_exact_square_needs_a_correction():
    S = ot.exact_square_lie()
    theta = solve_mc(S, {"x": 1, "y": 1}, 3)
    assert theta.coefficient(2) == {"w": -1}, "θ_2 = -h(z) = -w"
    residual, open_residual = mc_residual(S, theta)
    assert residual.is_zero() and open_residual is None


def test_naive_seed_is_not_mc():
    S = ot.exact_square_lie()
    theta = FormalElement.from_orders(S.closed, {1: {"x": 1, "y": 1}}, 3)
    residual, _ = mc_residual(S, theta)
    assert residual.degree == 1
    assert residual.coefficient(2) == {"z": 1}, "l_2(x, y) survives at order 2"
    assert not is_mc(S, theta)


def test_obstruction_carries_the_class():
    S = ot.obstructed_lie()
    with pytest.raises(ObstructionError) as info:
        solve_mc(S, {"x": 1, "y": 1}, 3)
    assert info.value.order == 2
    assert info.value.obstruction == {"z": 1}, "the class of z obstructs"
    assert info.value.partial.coefficient(1) == {"x": 1, "y": 1}, "partial solution kept"


def test_first_order_is_always_solvable():
    S = ot.obstructed_lie()
    theta = solve_mc(S, {"x": 1, "y": 1}, 2)
    assert is_mc(S, theta), "mod hbar^2 the equation is linear"


def test_seed_rejections():
    S = ot.abelian_complex()
    with pytest.raises(OchaError):
        solve_mc(S, {"y": 1}, 3)
    with pytest.raises(DegreeError):
        solve_mc(S, {"u": 1}, 3)
    with pytest.raises(DegreeError):
        mc_residual(S, FormalElement.from_orders(S.closed, {1: {"u": 1}}, 3, degree=-1))


def test_open_residual_of_a_pair():
    S = ot.inner_derivation_pair()
    closed = FormalElement.from_orders(S.closed, {1: {"z": 1}}, 3)
    opened = FormalElement.from_orders(S.open, {1: {"n": 1}}, 3)
    residual, open_residual = mc_residual(S, closed, opened)
    assert residual.is_zero() and open_residual.is_zero(), "(hbar z, hbar n) is MC"
    assert is_mc(S, closed, opened)


def test_open_letters_outside_degree_zero_are_rejected():
    S = ot.inner_derivation_pair()
    with pytest.raises(DegreeError):
        FormalElement.from_orders(S.open, {1: {"e1": 1}}, 3)
