#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""Tests for `ochax` package."""

import importlib
import pkgutil
from unittest import mock

import pytest

import ochax


def test_public_namespace():
    assert ochax.Report is ochax.report.Report
    assert issubclass(ochax.DocumentError, ochax.OchaError)
    for name in ("core", "coalgebra", "structures", "trees", "transfer", "deformation", "io"):
        assert hasattr(ochax, name), f"ochax.{name} is importable"


def test_version_import_failure():
    """A missing version module falls back to the placeholder."""
    with mock.patch.dict("sys.modules", {"ochax.version": None}):
        importlib.reload(ochax)
        assert ochax.__version__ == "999"


def _modules():
    return sorted(
        info.name
        for info in pkgutil.walk_packages(ochax.__path__, prefix="ochax.")
        if info.name != "ochax.version"
    )


@pytest.mark.parametrize("name", _modules())
def test_module_docstrings_list_their_api(name):
    module = importlib.import_module(name)
    doc = module.__doc__ or ""
    assert "{}" not in doc, f"{name} formats its autosummary"
    if "autosummary" in doc:
        for attr in module.__all__:
            assert f"   {attr}" in doc, f"{name} documents {attr}"
