#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for the bundled fixtures
==============================
"""

import pytest

import ochax.testing as ot
from ochax.io.document import read_document
from ochax.structures.checks import check_a_infinity, check_l_infinity, check_ocha

_CHECKERS = {"ainf": check_a_infinity, "linf": check_l_infinity, "ocha": check_ocha}

_VALID = sorted(name for name in ot.FIXTURES if not name.startswith("corrupted"))


@pytest.mark.parametrize("name", _VALID)
def test_fixture_satisfies_its_relations(name):
    S = ot.FIXTURES[name]()
    report = _CHECKERS[S.kind](S)
    assert report.passed, report.to_text()


@pytest.mark.parametrize(
    "name, kind",
    [
        ("dual_numbers", "ainf"),
        ("solvable_lie", "linf"),
        ("scaling_lie", "linf"),
        ("corrupted_scaling_lie", "linf"),
        ("abelian_complex", "linf"),
        ("leibniz_pair", "ocha"),
        ("curved_open_sector", "ocha"),
        ("small_complex", "ainf"),
    ],
)
def test_fixture_kinds(name, kind):
    assert ot.FIXTURES[name]().kind == kind


def test_corrupted_fixture_fails_where_documented():
    report = check_a_infinity(ot.corrupted_dual_numbers())
    assert not report.passed
    assert (0, 3, ("e", "e", "x")) in report.cells(), "associativity fails on (e, e, x)"


def test_corrupted_replaces_one_entry():
    S = ot.leibniz_pair()
    T = ot.corrupted(S, ("open", 1, 1), ("X", "e"), {"e": 1})
    assert T.family.value("open", ("X",), ("e",)) == {"e": 1}
    assert S.family.value("open", ("X",), ("e",)) == {}, "the original is untouched"


def test_builders_return_fresh_objects():
    assert ot.dual_numbers() is not ot.dual_numbers()
    assert ot.dual_numbers() == ot.dual_numbers()
    assert ot.dual_numbers(2).bound == 2


@pytest.mark.parametrize("name", sorted(ot.FIXTURES) + ["frobenius_pair"])
def test_write_fixture_round_trip(name, tmp_path):
    path = ot.write_fixture(name, tmp_path / f"{name}.json", order=3)
    doc = read_document(path)
    assert doc.order == 3
    expected = ot.frobenius_pair()[0] if name == "frobenius_pair" else ot.FIXTURES[name]()
    assert doc.structure == expected
    assert doc.structure.bound == expected.bound
