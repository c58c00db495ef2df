#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for exact linear algebra
==============================
"""

import pytest

from ochax.core.linalg import (
    extend_basis,
    inverse,
    kernel_basis,
    mat_vec,
    rank,
    row_reduce,
    solve,
)


def test_rank_and_row_reduce():
    assert rank([[1, 2], [2, 4]], 2) == 1, "dependent rows"
    reduced, pivots = row_reduce([[0, 2, 4], [1, 1, 1]], 3)
    assert pivots == (0, 1), "two pivots"
    assert reduced[1] == [0, 1, 2], "second row is normalised"
    assert row_reduce([], 3) == ([], ()), "empty input"


def test_kernel_basis():
    kernel = kernel_basis([[1, 2]], 2)
    assert kernel == [[-2, 1]], "kernel of (1 2)"
    assert mat_vec([[1, 2]], kernel[0]) == [0], "kernel vector is annihilated"


def test_inverse():
    inv = inverse([[1, 0], [1, 1]])
    assert inv == [[1, -1], [0, 1]], "inverse of a unipotent matrix"
    with pytest.raises(ValueError):
        inverse([[1, 2], [2, 4]])


def test_solve():
    assert solve([[1, 1]], [3], 2) == [3, 0], "free variables are zero"
    assert solve([[1, 1], [2, 2]], [1, 3], 2) is None, "inconsistent system"


def test_extend_basis():
    added = extend_basis([[1, 0, 0]], [[2, 0, 0], [0, 1, 0], [1, 1, 0]], 3)
    assert added == [[0, 1, 0]], "only the candidate raising the rank is taken"
