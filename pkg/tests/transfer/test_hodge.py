#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for Hodge-type contractions
=================================
"""

import ochax.testing as ot
from ochax.structures.ocha import OchaStructure
from ochax.transfer.hodge import check_linear_contractible, check_minimal, hodge_decompose


def test_massey_contraction():
    C = hodge_decompose(ot.massey_algebra())
    assert C.small.open.names == ("a", "p"), "cohomology letters keep their names"
    assert not C.is_trivial(), "u and v are contracted away"
    report = C.check()
    assert report.passed, report.to_text()
    assert C.h("open", {"b": 1}) == {"u": 1}, "h(b) = u"
    assert C.pi("open", {"p": 1, "b": 1}) == {"p": 1}, "projection kills exact letters"


def test_minimal_structures_have_trivial_contractions():
    S = ot.dual_numbers()
    assert check_minimal(S), "no differential"
    assert hodge_decompose(S).is_trivial(), "h = 0"


def test_linear_contractible():
    acyclic = OchaStructure.from_tables(open=(("a", 0), ("b", 1)), n={(0, 1): {("a",): {"b": 1}}})
    assert check_linear_contractible(acyclic), "d is an isomorphism"
    assert not check_linear_contractible(ot.small_complex()), "s and t survive"
    assert not check_linear_contractible(ot.massey_algebra()), "products are present"
