#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for symplectic pairings and cyclic tensors
================================================
"""

import pytest

import ochax.testing as ot
from ochax.errors import DegreeError, OchaError
from ochax.structures.cyclic import (
    SymplecticPair,
    check_cyclicity,
    check_r_duality,
    cyclic_tensors,
    dualize_to_r,
)


@pytest.fixture
def frobenius():
    return ot.frobenius_pair()


def test_pairing_is_completed_by_skew_symmetry(frobenius):
    _, W = frobenius
    assert W.omega_c[("d", "c")] == -1, "even letters flip sign"
    assert W.omega_o[("x", "e")] == 1, "odd letters keep it"
    assert W.pair("open", {"e": 2}, {"x": 3}) == 6, "bilinear extension"


def test_pairing_validation(frobenius):
    S, _ = frobenius
    with pytest.raises(DegreeError):
        SymplecticPair(S.space, {("c", "d"): 1}, 3, {("e", "x"): 1}, 2)
    with pytest.raises(OchaError):
        SymplecticPair(S.space, {("c", "c"): 1}, 4, {("e", "x"): 1}, 2)


def test_frobenius_pair_is_cyclic(frobenius):
    S, W = frobenius
    tensors = cyclic_tensors(S, W)
    report = check_cyclicity(tensors, S, W)
    assert report.passed, report.to_text()
    mixed = {t.name: t for t in tensors if t.kind == "mixed"}
    assert mixed["V1,1"].value(("c", "e")) == 1, "omega_o(x, e) = 1"


def test_generic_pairing_breaks_cyclicity(frobenius):
    S, _ = frobenius
    W = ot.generic_pairing(S)
    report = check_cyclicity(cyclic_tensors(S, W), S, W)
    assert not report.passed, "omega_o(x, x) spoils the rotation identity"
    assert ("cyclic:rotation", 0, 3, ("x", "x", "e")) in report.instances(), "rotation failure"


def test_dualize_to_r(frobenius):
    S, W = frobenius
    tensors = cyclic_tensors(S, W)
    r = dualize_to_r(S, W, tensors)
    assert r.degree == -1, "degree 1 + |omega_o| - |omega_c|"
    assert r.value("closed", (), ("e",)) == {"d": -1}, "omega_c(r(e), c) = V(c; e)"
    assert check_r_duality(r, tensors, S, W).passed, "duality holds on all tuples"
