#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for the command line front end
====================================
"""

import io
import json

import pytest

import ochax.testing as ot
from ochax.cli import EXIT_FAIL, EXIT_OBSTRUCTED, EXIT_PASS, EXIT_USAGE, build_parser, run
from ochax.io.document import read_document


def _run(argv):
    stream = io.StringIO()
    code = run(argv, stream)
    return code, stream.getvalue()


def _run_json(argv):
    code, text = _run(argv + ["--format", "json", "--no-timing"])
    return code, json.loads(text) if text else None


@pytest.fixture
def fixture_file(tmp_path):
    def write(name, **kwargs):
        return str(ot.write_fixture(name, tmp_path / f"{name}.json", **kwargs))
    return write


def test_parser_requires_a_command():
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args([])
    assert info.value.code == 2


def test_trees_count_schroder():
    code, payload = _run_json(["trees", "--operad", "a", "--leaves", "4"])
    assert code == EXIT_PASS
    report = payload["report"]
    assert report["facts"]["count"] == 11, "Schröder number for four leaves"
    assert report["facts"]["schroder_count"] is True
    assert "timing" not in report


def test_trees_with_graph_and_d_squared():
    code, text = _run(["trees", "--operad", "l", "--leaves", "3", "--graph", "--check-d2",
                       "--no-timing"])
    assert code == EXIT_PASS
    assert "d_squared_zero: True" in text
    assert text.count("## ") == 4, "four binary L-trees on three leaves"


def test_trees_leaf_limit():
    code, _ = _run(["trees", "--operad", "a", "--leaves", "9"])
    assert code == EXIT_USAGE


def test_check_passes_and_fails(fixture_file):
    code, payload = _run_json(["check", fixture_file("dual_numbers"), "--kind", "ainf"])
    assert code == EXIT_PASS and payload["report"]["verdict"] == "PASS"
    code, payload = _run_json(["check", fixture_file("corrupted_dual_numbers"), "--kind", "ainf"])
    assert code == EXIT_FAIL
    inputs = [v["inputs"] for v in payload["report"]["violations"]]
    assert ["e", "e", "x"] in inputs, "associativity fails on (e, e, x)"


def test_check_usage_errors(fixture_file, tmp_path):
    path = fixture_file("dual_numbers", bound=3)
    assert _run(["check", path, "--kind", "ainf", "--bound", "4"])[0] == EXIT_USAGE
    assert _run(["check", path, "--kind", "morphism"])[0] == EXIT_USAGE
    assert _run(["check", path, "--kind", "cyclic"])[0] == EXIT_USAGE
    assert _run(["check", str(tmp_path / "missing.json"), "--kind", "ainf"])[0] == EXIT_USAGE
    broken = tmp_path / "broken.json"
    broken.write_text('{"version": 1, "flags": {"bound": 1.5}}')
    assert _run(["check", str(broken), "--kind", "ainf"])[0] == EXIT_USAGE


def test_check_cyclic(fixture_file):
    code, _ = _run(["check", fixture_file("frobenius_pair"), "--kind", "cyclic"])
    assert code == EXIT_PASS


def test_mc_on_an_abelian_complex(fixture_file):
    code, payload = _run_json(["mc", fixture_file("abelian_complex"), "--seed", "z", "--order", "3"])
    assert code == EXIT_PASS
    element = payload["document"]["elements"]["cbar"]
    assert element["coefficients"] == {"z": ["0", "1", "0"]}, "theta = hbar z"


def test_mc_obstruction_exit_code(fixture_file):
    code, payload = _run_json(["mc", fixture_file("obstructed_lie"), "--seed", "x", "--seed", "y",
                               "--order", "3"])
    assert code == EXIT_OBSTRUCTED
    facts = payload["report"]["facts"]
    assert facts["obstruction_order"] == 2
    assert facts["obstruction_class"] == {"z": "1"}


def test_mc_needs_a_seed(fixture_file):
    assert _run(["mc", fixture_file("abelian_complex")])[0] == EXIT_USAGE


def test_transfer_writes_a_document(fixture_file, tmp_path):
    out = tmp_path / "minimal.json"
    code, payload = _run_json(["transfer", fixture_file("small_complex"), "--out", str(out)])
    assert code == EXIT_PASS
    assert payload["report"]["facts"]["output"] == str(out)
    assert payload["report"]["facts"]["dim_H:open"] == {"0": 1, "1": 1}
    doc = read_document(out)
    assert doc.structure.open.names == ("s", "t")
    assert doc.morphism is not None, "the quasi-isomorphism is written with its target"


def test_gauge_from_zero(fixture_file):
    code, payload = _run_json(["gauge", fixture_file("abelian_complex"), "--order", "2",
                               "--cbar", "z=0", "--alpha", "u=0,1"])
    assert code == EXIT_PASS
    assert payload["document"]["elements"]["cbar"]["coefficients"] == {"z": ["0", "1"]}


def test_gauge_needs_a_start(fixture_file):
    assert _run(["gauge", fixture_file("abelian_complex")])[0] == EXIT_USAGE


def test_deform_by_an_inner_derivation(fixture_file):
    code, payload = _run_json(["deform", fixture_file("inner_derivation_pair"), "--order", "2",
                               "--cbar", "z=0,1"])
    assert code == EXIT_PASS
    report = payload["report"]
    assert report["facts"]["weak"] is False
    assert report["facts"]["closed_residual_zero"] is True
    assert report["bounds"]["trusted"] == 3


def test_deform_rejects_a_non_solution(fixture_file):
    code, _ = _run(["deform", fixture_file("obstructed_lie"), "--order", "3",
                    "--cbar", "x=0,1", "--cbar", "y=0,1"])
    assert code == EXIT_FAIL
