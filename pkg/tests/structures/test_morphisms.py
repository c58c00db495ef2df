#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for OCHA morphisms and the adjoint map
============================================
"""

import pytest

import ochax.testing as ot
from ochax.errors import AxiomError, SectorError
from ochax.structures.cohomology import structure_splittings
from ochax.structures.morphisms import (
    adjoint_l_infinity_map,
    check_morphism,
    check_quasi_isomorphism,
    compose_morphisms,
)
from ochax.structures.ocha import OchaMorphism, identity_morphism


@pytest.mark.parametrize("builder", [ot.dual_numbers, ot.leibniz_pair, ot.solvable_lie])
def test_identity_is_a_morphism(builder):
    S = builder(3)
    report = check_morphism(identity_morphism(S))
    assert report.passed, report.to_text()
    assert report.facts["coalgebra_agrees"] is True, "both routes agree"


def test_scaling_is_not_a_morphism():
    S = ot.dual_numbers(3)
    F = OchaMorphism.from_tables(
        S, S, f_open={(0, 1): {("e",): {"e": 2}, ("x",): {"x": 2}}}, bound=3
    )
    report = check_morphism(F)
    assert not report.passed, "f(ab) = 2ab but f(a)f(b) = 4ab"
    assert (0, 2, ("e", "x")) in report.cells(), "binary failure on (e, x)"


def test_composition():
    S = ot.leibniz_pair(3)
    F = identity_morphism(S)
    G = compose_morphisms(F, F)
    assert G.family == F.family, "id o id = id"
    assert check_quasi_isomorphism(G), "identity is a quasi-isomorphism"
    with pytest.raises(SectorError):
        compose_morphisms(identity_morphism(ot.dual_numbers(3)), F)


def test_adjoint_map_is_a_chain_map():
    rho = adjoint_l_infinity_map(ot.leibniz_pair())
    assert rho.check().passed, "rho(l1 c) = -[m, rho(c)]"
    component = rho.component(("X",))
    assert component.value("open", (), ("x",)) == {"x": -1}, "n11(X; -) as a unary map"


def test_adjoint_map_requires_an_ocha():
    with pytest.raises(AxiomError):
        adjoint_l_infinity_map(ot.corrupted_dual_numbers(3))


def test_exactness_witness():
    S = ot.exact_square_lie()
    rho = adjoint_l_infinity_map(S)
    closed, _ = structure_splittings(S)
    x, holds = rho.exactness_witness(closed, {"z": 1}, 1)
    assert x == {"w": 1}, "l1(w) = z"
    assert holds, "rho of an exact class is a bracket"
    with pytest.raises(ValueError):
        rho.exactness_witness(closed, {"x": 1}, 0)
