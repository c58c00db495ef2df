#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for reports
=================
"""

import json

from ochax.core.scalars import QQ
from ochax.core.series import TruncatedSeries
from ochax.report import Report, Violation


def _report():
    report = Report("check --kind ainf", {"n_max": 0, "m_max": 3})
    report.add("ainf", 0, 3, ("e", "e", "x"), {"x": QQ(-2)})
    report.add("ainf", 0, 2, ("e", "x"), {"x": QQ(1, 2)})
    return report.finish()


def test_violations_are_sorted():
    report = _report()
    assert not report.passed and report.verdict == "FAIL"
    assert [v.m for v in report.violations] == [2, 3]
    assert report.violations[0].residual == (("x", "1/2"),)


def test_false_facts_fail():
    report = Report("facts")
    report.fact("agrees", True)
    assert report.passed
    report.fact("count", 0)
    assert report.passed, "only a literal False fails"
    report.fact("d_squared_zero", False)
    assert not report.passed
    assert report.cells() == set(), "facts carry no cell"
    assert report.instances() == {("fact:d_squared_zero", 0, 0, ())}


def test_extend_with_prefix():
    outer = Report("outer")
    inner = _report()
    inner.facts["weak"] = False
    outer.extend(inner, prefix="deformed:")
    assert {v.kind for v in outer.violations} == {"deformed:ainf"}
    assert outer.facts == {"deformed:weak": False}
    assert outer.cells() == {(0, 2, ("e", "x")), (0, 3, ("e", "e", "x"))}


def test_summary_grid():
    ds = _report().summary()
    assert ds["violations"].dims == ("n", "m")
    assert ds["violations"].sel(n=0, m=3).item() == 1
    assert int(ds["violations"].sum()) == 2
    assert ds.attrs["verdict"] == "FAIL"


def test_serialisation_without_timing():
    report = _report()
    report.facts["series"] = TruncatedSeries([0, 1], 2)
    report.facts["classes"] = {"z": QQ(1, 3)}
    payload = json.loads(report.to_json(timing=False))
    assert "timing" not in payload
    assert payload["facts"] == {"classes": {"z": "1/3"}, "series": "h"}
    assert payload["violations"][0] == {
        "relation": "ainf", "n": 0, "m": 2, "inputs": ["e", "x"], "residual": {"x": "1/2"},
    }
    text = report.to_text(timing=False)
    assert text.splitlines()[0] == "check --kind ainf: FAIL"
    assert "[ainf] (n=0, m=3) ('e', 'e', 'x'): -2*x" in text
    assert "time:" not in text


def test_violation_instance():
    v = Violation.from_vector("linf", 2, 0, ["a", "b"], {"c": 1})
    assert v.instance == ("linf", 2, 0, ("a", "b"))
    assert v.residual == (("c", "1"),)
