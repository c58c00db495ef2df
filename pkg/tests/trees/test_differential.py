#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for the tree differential
===============================
"""

import pytest

from ochax.trees.differential import check_d_squared, tree_differential, vertex_splittings
from ochax.trees.tree import Tree, TreeSum, graft


def test_binary_trees_are_cycles():
    assert tree_differential(Tree.corolla("m", 2)).is_zero(), "m2 has no splitting"
    assert tree_differential(Tree.corolla("l", 2)).is_zero(), "l2 has no splitting"


def test_differential_of_m3():
    m2 = Tree.corolla("m", 2)
    d = tree_differential(Tree.corolla("m", 3))
    assert len(d) == 2, "two ways to split a ternary vertex"
    left, right = graft(m2, 1, m2), graft(m2, 2, m2)
    assert set(d) == {left, right}, "left and right combs"
    assert abs(d.terms[left]) == 1 and abs(d.terms[right]) == 1, "unit coefficients"


def test_differential_of_l3():
    d = tree_differential(Tree.corolla("l", 3))
    assert len(d) == 3, "one term per pair of leaves"


def test_vertex_splittings_of_n11():
    splits = list(vertex_splittings(Tree.corolla("n", 1, 1)))
    assert len(splits) == 2, "n0,2 with n1,0 on either side"


@pytest.mark.parametrize(
    "leaf_bound, operads",
    [(5, ("A",)), (5, ("L",)), (4, ("A", "L", "OC")), (5, ("OC",))],
)
def test_d_squared_vanishes(leaf_bound, operads):
    assert check_d_squared(leaf_bound, operads=operads), f"d^2 = 0 for {operads}"


def test_memoized_differential_is_not_shared():
    m3 = Tree.corolla("m", 3)
    d = tree_differential(m3)
    d.add(m3, 1)
    assert len(tree_differential(m3)) == 2, "callers get their own copy"
    assert d - TreeSum.of(m3) == tree_differential(m3), "cached expansion untouched"


def test_flipped_sign_breaks_d_squared():
    assert not check_d_squared(4, flip=True, operads=("A",)), "the pre-order sign is needed"
