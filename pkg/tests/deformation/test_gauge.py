#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for gauge paths and transport along morphisms
===================================================
"""

import pytest

import ochax.testing as ot
from ochax.core.scalars import QQ
from ochax.core.series import TruncatedSeries, hbar
from ochax.deformation.gauge import (
    PathPolynomial,
    gauge_transform,
    mc_pushforward_gauge,
    transport_mc,
)
from ochax.deformation.mc import FormalElement, solve_mc
from ochax.errors import AxiomError, DegreeError, OchaError
from ochax.structures.ocha import identity_morphism


def test_path_polynomial_arithmetic():
    t = PathPolynomial({1: 1}, 3)
    p = t * t + 2
    assert p.at(1) == TruncatedSeries.constant(3, 3)
    assert p.integrate() == PathPolynomial({3: QQ(1, 3), 1: 2}, 3), "∫ t^2 + 2 = t^3/3 + 2t"
    assert (p - p) == 0 and not (p - p)
    assert repr(PathPolynomial({}, 2)) == "0"


def test_gauge_flow_from_zero_lands_on_the_boundary():
    S = ot.abelian_complex()
    start = FormalElement.zero(S.closed, 3)
    path = gauge_transform(S, start, {0: {"u": hbar(3)}})
    end, end_open = path.endpoint
    assert end_open is None
    assert end == FormalElement.from_orders(S.closed, {1: {"z": 1}}, 3), "exp(u)·0 = hbar l_1(u)"
    halfway, _ = path.at(QQ(1, 2))
    assert halfway.coefficient(1) == {"z": QQ(1, 2)}, "linear in t"


def test_gauge_flow_preserves_the_mc_locus():
    S = ot.exact_square_lie()
    theta = solve_mc(S, {"x": 1, "y": 1}, 3)
    path = gauge_transform(S, theta, {0: {}})
    assert path.endpoint[0] == theta, "the zero generator fixes every point"


def test_gauge_rejections():
    S = ot.abelian_complex()
    with pytest.raises(AxiomError):
        gauge_transform(S, FormalElement.from_orders(S.closed, {1: {"y": 1}}, 3), {})
    start = FormalElement.zero(S.closed, 3)
    with pytest.raises(DegreeError):
        gauge_transform(S, start, {0: {"z": hbar(3)}})
    with pytest.raises(OchaError):
        gauge_transform(S, start, {0: {"u": 1}})


def test_transport_along_the_identity():
    S = ot.inner_derivation_pair()
    closed = FormalElement.from_orders(S.closed, {1: {"z": 1}}, 3)
    opened = FormalElement.from_orders(S.open, {1: {"n": 1}}, 3)
    new_closed, new_open = transport_mc(identity_morphism(S), closed, opened)
    assert new_closed == closed and new_open == opened
    only_closed, missing = transport_mc(identity_morphism(S), closed)
    assert only_closed == closed and missing is None


def test_pushforward_of_a_generator():
    S = ot.abelian_complex()
    alpha = {0: {"u": hbar(3)}, 1: {"u": hbar(3) * 2}}
    image = mc_pushforward_gauge(identity_morphism(S), alpha)
    assert image == {0: {"u": hbar(3)}, 1: {"u": hbar(3) * 2}}
