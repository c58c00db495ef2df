#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tests for tree representations
==============================
"""

import pytest

import ochax.testing as ot
from ochax.errors import ArityError
from ochax.trees.represent import check_chain_map, evaluate_tree, represent, tree_degree
from ochax.trees.tree import Tree, graft


def test_corolla_evaluates_to_the_structure_map():
    S = ot.dual_numbers(3)
    m2 = Tree.corolla("m", 2)
    assert evaluate_tree(m2, S, (), ("e", "x")) == {"x": -1}, "m2(e, x)"
    with pytest.raises(ArityError):
        evaluate_tree(m2, S, (), ("e",))


def test_represent_grafted_tree():
    S = ot.dual_numbers(3)
    m2 = Tree.corolla("m", 2)
    T = graft(m2, 1, m2)
    fmap = represent(T, S)
    assert fmap.degree == tree_degree(T) == 2, "one per vertex"
    assert fmap.arity == (0, 3), "three open inputs"
    assert fmap.table[("e", "e", "e")] == {"e": 1}, "m2(m2(e, e), e) with the Koszul sign"
    with pytest.raises(ArityError):
        represent(Tree.corolla("m", 4), S)


@pytest.mark.parametrize(
    "builder",
    [
        ot.dual_numbers,
        ot.leibniz_pair,
        ot.solvable_lie,
        ot.inner_derivation_pair,
        ot.curved_open_sector,
        ot.exact_square_lie,
        ot.massey_algebra,
    ],
)
def test_chain_map_on_fixtures(builder):
    report = check_chain_map(builder(4), leaf_bound=4)
    assert report.passed, report.to_text()
    assert report.facts["agrees_with_relations"] is True, "corolla cells match"
    assert report.bounds["n_max"] == 4, "trees with up to four leaves"


def test_chain_map_detects_broken_relations():
    report = check_chain_map(ot.corrupted_dual_numbers(3))
    assert not report.passed, "associativity fails"
    assert report.facts["agrees_with_relations"] is True, "corolla cells match the checker"
