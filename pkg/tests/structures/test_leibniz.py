#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for the Leibniz-pair construction
=======================================
"""

import pytest

import ochax.testing as ot
from ochax.errors import AxiomError
from ochax.structures.leibniz import (
    AssociativeData,
    LieData,
    check_leibniz_pair,
    from_leibniz_pair,
)


@pytest.fixture
def dual():
    return AssociativeData(
        (("e", 0), ("x", 0)),
        product={("e", "e"): {"e": 1}, ("e", "x"): {"x": 1}, ("x", "e"): {"x": 1}},
    )


def test_suspended_signs():
    S = ot.solvable_lie()
    assert S.closed.degree("X") == -1, "degree-0 generators move to degree -1"
    assert S.l(2).table == {("X", "Y"): {"Y": -1}}, "l2(x, y) = (-1)^|x| [X, Y]"
    D = ot.dual_numbers()
    assert D.m(2).table[("e", "x")] == {"x": -1}, "n02 carries the sign of its first input"
    L = ot.leibniz_pair()
    assert L.n(1, 1).table == {("X", "x"): {"x": -1}}, "n11 carries the sign of X"


def test_lie_bracket_antisymmetry():
    g = LieData((("X", 0), ("Y", 0)), bracket={("X", "Y"): {"Y": 1}})
    assert g.br({"Y": 1}, {"X": 1}) == {"Y": -1}, "[Y, X] = -[X, Y]"


def test_valid_pair_has_no_failures(dual):
    g = LieData((("X", 0),))
    assert check_leibniz_pair(g, dual, {("X", "x"): {"x": 1}}) == [], "X(x) = x is a derivation"


def test_derivation_law_failure(dual):
    g = LieData((("X", 0),))
    with pytest.raises(AxiomError) as excinfo:
        from_leibniz_pair(g, dual, {("X", "e"): {"e": 1}})
    assert excinfo.value.equation == "Xab", "X(e) = e breaks X(ee) = X(e)e + eX(e)"


def test_antisymmetry_failure(dual):
    g = LieData((("X", 0), ("Y", 0)), bracket={("X", "Y"): {"Y": 1}, ("Y", "X"): {"Y": 1}})
    with pytest.raises(AxiomError) as excinfo:
        from_leibniz_pair(g, AssociativeData(()))
    assert excinfo.value.equation == "antisymmetry", "bracket must be antisymmetric"


def test_associativity_failure():
    A = AssociativeData(
        (("a", 0), ("b", 0)),
        product={("a", "a"): {"b": 1}, ("b", "a"): {"a": 1}},
    )
    failures = check_leibniz_pair(LieData(()), A, {})
    assert ("associativity", ("a", "a", "a")) in [(eq, inputs) for eq, inputs, _ in failures]


def test_default_bound(dual):
    S = from_leibniz_pair(LieData(()), dual)
    assert S.bound == 3, "strict structures default to arity three"
    assert S.kind == "ainf", "no closed sector"
