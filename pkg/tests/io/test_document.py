#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for structure documents
=============================
"""

import json

import pytest

import ochax.testing as ot
from ochax.core.graded import GradedSpace
from ochax.core.scalars import QQ
from ochax.deformation.mc import FormalElement
from ochax.errors import DocumentError
from ochax.io.document import (
    FORMAT_VERSION,
    StructureDocument,
    dump_document,
    parse_document,
    parse_element,
    read_document,
)

DUAL = """{
  "version": 1,
  "flags": {"bound": 3},
  "spaces": [{"sector": "open", "basis": [["e", -1], ["x", -1]]}],
  "maps": [
    {"kind": "m", "indices": [2], "entries": [
      {"inputs": ["e", "e"], "output": "e", "coefficient": "1"},
      {"inputs": ["e", "x"], "output": "x", "coefficient": 1},
      {"inputs": ["x", "e"], "output": "x", "coefficient": "1"}
    ]}
  ]
}
"""


def _with(text, old, new):
    assert old in text, f"{old!r} not in the template"
    return text.replace(old, new)


def test_parse_a_small_algebra():
    doc = parse_document(DUAL)
    S = doc.structure
    assert S.kind == "ainf"
    assert S.bound == 3 and doc.flags["bound"] == 3
    assert S.m(2).table[("e", "x")] == {"x": 1}
    assert doc.order is None and doc.pairing is None and doc.morphism is None


def test_floats_are_rejected_with_their_line():
    text = _with(DUAL, '"coefficient": 1}', '"coefficient": 0.5}')
    with pytest.raises(DocumentError) as info:
        parse_document(text)
    assert info.value.line == 8, "line of the offending entry"
    assert "inexact" in str(info.value)


def test_duplicate_keys_are_rejected():
    with pytest.raises(DocumentError) as info:
        parse_document('{"version": 1,\n "version": 1}')
    assert info.value.line == 1
    assert "duplicate key" in str(info.value)


def test_duplicate_entries_are_rejected():
    text = _with(DUAL, '["x", "e"], "output": "x"', '["e", "x"], "output": "x"')
    with pytest.raises(DocumentError, match="duplicate entry"):
        parse_document(text)


def test_syntax_errors_report_a_line():
    with pytest.raises(DocumentError) as info:
        parse_document('{\n  "version": 1,\n  "flags": \n}')
    assert info.value.line == 4


@pytest.mark.parametrize(
    "old, new, message",
    [
        ('"version": 1', '"version": 2', "unsupported format version"),
        ('"kind": "m"', '"kind": "q"', "unknown map kind"),
        ('"sector": "open"', '"sector": "middle"', "unknown sector"),
        ('"indices": [2]', '"indices": [2, 0]', "take one index"),
        ('"bound": 3', '"bound": 0', "must be positive"),
        ('["x", -1]]', '["x", "-1"]]', "pairs"),
        ('["x", "e"], "output"', '["x"], "output"', "do not match arity"),
    ],
)
def test_malformed_documents(old, new, message):
    with pytest.raises(DocumentError, match=message):
        parse_document(_with(DUAL, old, new))


def test_missing_fields():
    with pytest.raises(DocumentError, match="missing field 'version'"):
        parse_document('{"spaces": []}')
    with pytest.raises(DocumentError, match="JSON object"):
        parse_document("[1, 2]")


def test_shift_moves_degrees():
    text = _with(DUAL, '"bound": 3', '"bound": 3, "shift": {"open": -1}')
    text = _with(text, '[["e", -1], ["x", -1]]', '[["e", 0], ["x", 0]]')
    doc = parse_document(text)
    assert doc.structure.open.degree("e") == -1, "stored degrees are shifted on load"
    assert doc.flags["shift"] == {"open": -1}


def test_dump_is_canonical():
    S = ot.dual_numbers()
    text = dump_document(S)
    again = dump_document(parse_document(text))
    assert text == again, "dump(parse(dump(S))) == dump(S)"
    assert json.loads(text)["version"] == FORMAT_VERSION
    assert parse_document(text).structure == S


def test_documents_compare_by_content():
    S = ot.leibniz_pair()
    assert StructureDocument(S) == parse_document(dump_document(S))
    assert StructureDocument(S) != StructureDocument(ot.dual_numbers(3))


def test_elements_and_order(tmp_path):
    S = ot.abelian_complex()
    theta = FormalElement.from_orders(S.closed, {1: {"z": 1}, 2: {"y": "1/2"}}, 3)
    path = ot.write_fixture("abelian_complex", tmp_path / "abelian.json", order=3,
                            elements={"cbar": theta})
    doc = read_document(path)
    assert doc.order == 3
    assert doc.elements["cbar"] == theta
    assert doc.structure == S


def test_elements_need_an_order():
    text = _with(DUAL, '"maps"', '"elements": {"obar": {"sector": "open", '
                                 '"coefficients": {"x": "1"}}},\n  "maps"')
    with pytest.raises(DocumentError, match="need flags.order"):
        parse_document(text)


def test_parse_element_scalar_means_first_order():
    V = GradedSpace("closed", (("z", 0),))
    theta = parse_element(V, {"z": "2/3"}, 3)
    assert theta.coefficient(1) == {"z": QQ(2, 3)}, "a bare rational is the hbar coefficient"
    with pytest.raises(DocumentError):
        parse_element(V, {"q": "1"}, 3, line=5)


def test_pairing_survives_a_round_trip(tmp_path):
    S, W = ot.frobenius_pair()
    doc = read_document(ot.write_fixture("frobenius_pair", tmp_path / "frobenius.json"))
    assert doc.pairing is not None
    assert doc.pairing.omega_c[("c", "d")] == W.omega_c[("c", "d")]
    assert doc.pairing.omega_o[("e", "x")] == 1
    assert doc.structure == S
