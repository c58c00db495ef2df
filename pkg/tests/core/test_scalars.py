#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for exact scalars and truncated series
============================================
"""

import pytest

from ochax.core.scalars import QQ, format_scalar, inverse_factorial, parity_sign, to_scalar
from ochax.core.series import TruncatedSeries, hbar, is_zero, sadd, smul


@pytest.mark.parametrize(
    "raw, expected",
    [("3/6", QQ(1, 2)), ("-4", QQ(-4)), (7, QQ(7)), (" 2 / 3 ", QQ(2, 3))],
)
def test_to_scalar_exact(raw, expected):
    assert to_scalar(raw) == expected, f"{raw!r} should read as {expected}"


@pytest.mark.parametrize("raw", [0.5, True, 1e-3])
def test_to_scalar_rejects_inexact(raw):
    with pytest.raises(TypeError):
        to_scalar(raw)


@pytest.mark.parametrize("raw", ["1/0", "1.5", "x"])
def test_to_scalar_rejects_malformed(raw):
    with pytest.raises(ValueError):
        to_scalar(raw)


def test_format_scalar():
    assert format_scalar(QQ(-3, 4)) == "-3/4", "fractions print as p/q"
    assert format_scalar(2) == "2", "integers print without denominator"
    assert to_scalar(format_scalar(QQ(5, 7))) == QQ(5, 7), "formatting is exact"


def test_signs_and_factorials():
    assert parity_sign(3) == -1 and parity_sign(4) == 1, "parity sign"
    assert inverse_factorial(3) == QQ(1, 6), "1/3! = 1/6"
    assert inverse_factorial(0) == 1, "1/0! = 1"


def test_series_arithmetic():
    h = hbar(3)
    assert h * h == TruncatedSeries([0, 0, 1], 3), "h*h = h^2"
    assert not h * h * h, "h^3 vanishes mod h^3"
    assert (h + 1).coefficient(0) == 1, "constant term after adding 1"
    assert (h - h).valuation == 3, "zero series has valuation equal to the order"
    assert str(h + h * h * 2) == "h + 2*h^2", "series printing"


def test_series_mixed_products():
    h = hbar(4)
    assert smul(QQ(2), h) == TruncatedSeries([0, 2], 4), "scalar times series"
    assert smul(h, QQ(3)) == TruncatedSeries([0, 3], 4), "series times scalar"
    assert sadd(None, h) is h, "None acts as zero"
    assert sadd(QQ(1), h) == TruncatedSeries([1, 1], 4), "scalar plus series"
    assert is_zero(TruncatedSeries([0], 2)) and is_zero(QQ(0)), "zero test"


def test_series_truncation():
    s = TruncatedSeries([0, 1, 2, 3], 4)
    assert s.truncate(2) == TruncatedSeries([0, 1], 2), "truncation drops higher powers"
    assert s.is_nilpotent, "no constant term"
    assert s.to_strings() == ["0", "1", "2", "3"], "document form of the coefficients"
    with pytest.raises(ValueError):
        s.truncate(5)
