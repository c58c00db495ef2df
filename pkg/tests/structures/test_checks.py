#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for the structure checkers
================================
"""

import pytest

import ochax.testing as ot
from ochax.core.family import MapFamily
from ochax.errors import DegreeError, SectorError
from ochax.structures.checks import (
    check_a_infinity,
    check_codifferential,
    check_l_infinity,
    check_ocha,
    check_sh_derivation,
    check_sh_module,
    relation_cells,
)
from ochax.structures.ocha import restrict_open


def test_dual_numbers_are_a_infinity():
    report = check_a_infinity(ot.dual_numbers())
    assert report.passed, report.to_text()
    assert report.bounds["m_max"] == 4, "default bound of the fixture"


def test_corrupted_product_is_located():
    S = ot.corrupted_dual_numbers()
    report = check_a_infinity(S)
    assert not report.passed, "e·x = 2x breaks associativity"
    cells = relation_cells(report)
    assert ("open", 0, 3, ("e", "e", "x")) in cells, "first failing triple"
    assert all(m == 3 for _, _, m, _ in cells), "only ternary relations involve m2 twice"


@pytest.mark.parametrize("builder", [ot.dual_numbers, ot.corrupted_dual_numbers, ot.massey_algebra])
def test_direct_and_coalgebra_checks_agree(builder):
    S = builder(4)
    direct = relation_cells(check_a_infinity(S))
    coalgebra = relation_cells(check_codifferential(S))
    assert direct == coalgebra, "both routes report the same cells"


@pytest.mark.parametrize("builder", [ot.scaling_lie, ot.corrupted_scaling_lie, ot.exact_square_lie])
def test_direct_and_coalgebra_checks_agree_on_lie(builder):
    S = builder(3)
    direct = relation_cells(check_l_infinity(S))
    coalgebra = relation_cells(check_codifferential(S))
    assert direct == coalgebra, "both routes report the same cells"


def test_broken_jacobi_is_located():
    report = check_l_infinity(ot.corrupted_scaling_lie())
    assert not report.passed, "[Y, Z] = X breaks the Jacobi identity"
    cells = relation_cells(report)
    assert ("X", "Y", "Z") in {inputs for _, _, _, inputs in cells}, "Jacobiator -2X on (X, Y, Z)"
    assert all(sector == "closed" and m == 0 for sector, _, m, _ in cells), "closed relations only"


def test_a_infinity_rejects_closed_sector():
    with pytest.raises(SectorError):
        check_a_infinity(ot.leibniz_pair())


@pytest.mark.parametrize(
    "builder", [ot.solvable_lie, ot.scaling_lie, ot.exact_square_lie, ot.abelian_complex]
)
def test_l_infinity(builder):
    report = check_l_infinity(builder())
    assert report.passed, report.to_text()


@pytest.mark.parametrize(
    "builder",
    [ot.leibniz_pair, ot.inner_derivation_pair, ot.curved_open_sector, ot.solvable_lie],
)
def test_ocha(builder):
    S = builder()
    report = check_ocha(S)
    assert report.passed, report.to_text()
    assert relation_cells(check_codifferential(S)) == set(), "lift squares to zero"


def test_broken_action_is_an_ocha_violation():
    S = ot.corrupted(ot.leibniz_pair(), ("open", 1, 1), ("X", "e"), {"e": 1})
    report = check_ocha(S)
    assert not report.passed, "X acting on the unit breaks the derivation law"
    assert relation_cells(report) == relation_cells(check_codifferential(S)), "routes agree"


def test_sh_module():
    report = check_sh_module(ot.leibniz_pair())
    assert report.passed, report.to_text()
    assert report.facts["agrees_with_ocha_slice"] is True, "module slice matches check_ocha"


def test_sh_derivation():
    S = ot.massey_algebra(4)
    m = restrict_open(S)
    differential = MapFamily(S.space, maps={("open", 0, 1): S.family.table("open", 0, 1)}, bound=3)
    report = check_sh_derivation(differential, m, 3)
    assert report.passed, report.to_text()

    broken = MapFamily(S.space, maps={("open", 0, 1): {("u",): {"v": 1}}}, bound=3)
    report = check_sh_derivation(broken, m, 3)
    assert not report.passed, "m1(theta(u)) = w is not cancelled"
    assert (0, 1, ("u",)) in report.cells(), "unary failure on u"


def test_sh_derivation_degree():
    S = ot.massey_algebra(4)
    with pytest.raises(DegreeError):
        check_sh_derivation(MapFamily(S.space, degree=0), S)
