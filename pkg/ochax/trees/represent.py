#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tree Representations
====================

``φ(T)`` for a tree ``T`` and an OCHA: each vertex is replaced by the
structure map of its arity and the tree is read as a composite, with the
Koszul sign of routing the inputs to the leaves and the tensor sign of
every child map passing the inputs to its left. Optional decorations on
leaves, internal edges and the root turn the same recursion into the tree
formulas of homotopy transfer.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["Decoration", "evaluate_tree", "tree_degree", "represent", "check_chain_map"]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging
from dataclasses import dataclass

from ..core.graded import add_scaled
from ..core.multimap import MultiMap
from ..core.permutations import reorder_sign
from ..core.scalars import ONE, parity_sign
from ..core.series import smul
from ..errors import ArityError
from ..report import Report
from ..structures.checks import check_ocha, relation_cells
from .differential import tree_differential
from .tree import enumerate_trees

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Decoration:
    """
    A pair of linear maps (closed, open) of a common degree.

    Each map is a table ``letter -> vector``, a callable on dict vectors,
    or None for the identity.
    """

    closed: object = None
    open: object = None
    degree: int = 0

    def apply(self, sector, vector):
        linear = self.closed if sector == "closed" else self.open
        if linear is None:
            return dict(vector)
        if callable(linear):
            return linear(vector)
        out = {}
        for letter, coef in vector.items():
            add_scaled(out, linear.get(letter, {}), coef)
        return out


_IDENTITY = Decoration()


def _evaluate(node, S, inputs, source, leaf, edge, is_root):
    """Return ``(vector, map degree, input degree)`` of a subtree."""
    if node.is_leaf:
        letter = inputs[(node.sector, node.label)]
        vec = leaf.apply(node.sector, {letter: ONE})
        return vec, leaf.degree, source.degree(letter)
    vectors, sign, seen_degree, map_degree, in_degree = [], 1, 0, 1, 0
    for child in node.children:
        vec, deg, indeg = _evaluate(child, S, inputs, source, leaf, edge, False)
        if not vec:
            return {}, 0, 0
        sign *= parity_sign(deg * seen_degree)
        seen_degree += indeg
        vectors.append(vec)
        map_degree += deg
        in_degree += indeg
    split = len(node.closed)
    out = {}
    for combo in itertools.product(*[list(v.items()) for v in vectors]):
        coef = ONE * sign
        for _, c in combo:
            coef = smul(coef, c)
        names = [name for name, _ in combo]
        value = S.family.value(node.sector, tuple(names[:split]), tuple(names[split:]))
        add_scaled(out, value, coef)
    if not is_root and out:
        out = edge.apply(node.sector, out)
        map_degree += edge.degree
    return out, map_degree, in_degree


def evaluate_tree(T, S, closed, opens, leaf=None, edge=None, root=None, source=None):
    """
    ``φ(T)(c_1, ..., c_p; o_1, ..., o_q)`` on basis letters.

    Closed letters are matched to the closed leaf labels in increasing
    order, open letters to the planar positions.
    """
    source = S.space if source is None else source
    leaf = leaf or _IDENTITY
    edge = edge or _IDENTITY
    labels = T.closed_labels
    if len(labels) != len(closed) or T.open_count != len(opens):
        raise ArityError(f"tree {T} has arity {T.arity}, got ({len(closed)}, {len(opens)})")
    inputs = {("closed", lab): c for lab, c in zip(labels, closed)}
    inputs.update({("open", i + 1): o for i, o in enumerate(opens)})
    rank = {("closed", lab): i for i, lab in enumerate(labels)}
    rank.update({("open", i + 1): len(labels) + i for i in range(len(opens))})
    word = tuple(closed) + tuple(opens)
    order = [rank[(leaf_node.sector, leaf_node.label)] for leaf_node in T.leaves()]
    sign = reorder_sign(order, [source.degree(x) for x in word])
    out, _, _ = _evaluate(T, S, inputs, source, leaf, edge, True)
    if root is not None and out:
        out = root.apply(T.sector, out)
    return {k: v * sign for k, v in out.items()}


def tree_degree(T, leaf=None, edge=None, root=None):
    degree = T.vertices
    if leaf is not None:
        degree += leaf.degree * len(T.leaves())
    if edge is not None:
        degree += edge.degree * T.internal_edges
    if root is not None:
        degree += root.degree
    return degree


def represent(T, S, leaf=None, edge=None, root=None, source=None, target=None):
    """
    ``φ(T)`` as a :class:`~ochax.core.multimap.MultiMap` on all ordered tuples.

    Raises
    ------
    ArityError
        If the tree needs a corolla beyond the bound of ``S``.
    """
    source = S.space if source is None else source
    target = S.space.space(T.sector) if target is None else target
    for v in T.nodes():
        if len(v.children) > S.bound:
            raise ArityError(f"corolla {v.vertex_name()} exceeds the bound {S.bound}")
    p, q = T.arity
    table = {}
    for closed in itertools.product(source.closed.names, repeat=p):
        for opens in itertools.product(source.open.names, repeat=q):
            value = evaluate_tree(T, S, closed, opens, leaf, edge, root, source)
            if value:
                table[closed + opens] = value
    return MultiMap(str(T), p, q, source, target, tree_degree(T, leaf, edge, root), table,
                    canonical=False)


def _delta(S, sector, vector):
    out = {}
    for letter, coef in vector.items():
        key = ((letter,), ()) if sector == "closed" else ((), (letter,))
        add_scaled(out, S.family.value(sector, *key), coef)
    return out


def _bracket_with_delta(T, S, closed, opens):
    """``[δ, φ(T)] = δ φ(T) - (-1)^{v(T)} φ(T) δ`` on one word."""
    out = _delta(S, T.sector, evaluate_tree(T, S, closed, opens))
    word = list(closed) + list(opens)
    p = len(closed)
    seen = 0
    for j, letter in enumerate(word):
        sector = "closed" if j < p else "open"
        sign = -parity_sign(T.vertices) * parity_sign(seen)
        for image, coef in _delta(S, sector, {letter: ONE}).items():
            changed = word[:j] + [image] + word[j + 1 :]
            value = evaluate_tree(T, S, tuple(changed[:p]), tuple(changed[p:]))
            add_scaled(out, value, coef * sign)
        seen += S.space.degree(letter)
    return out


def _operads(S):
    if S.kind == "ainf":
        return ("A",)
    if S.kind == "linf":
        return ("L",)
    return ("L", "OC")


def _trees(S, leaf_bound):
    for operad in _operads(S):
        for total in range(1, leaf_bound + 1):
            if operad == "A":
                yield from enumerate_trees("A", open=total)
            elif operad == "L":
                yield from enumerate_trees("L", closed=total)
            else:
                for p in range(total + 1):
                    yield from enumerate_trees("OC", closed=p, open=total - p)


def check_chain_map(S, leaf_bound=None):
    """
    ``φ(d T) = [l_1 + n_{0,1}, φ(T)]`` for every tree with ``<= leaf_bound`` leaves.

    On corollas this is the defining relation, so the violated corolla
    cells are compared with those of the direct checker (fact
    ``agrees_with_relations``).
    """
    leaf_bound = S.bound if leaf_bound is None else min(leaf_bound, S.bound)
    report = Report(f"check_chain_map(leaf_bound={leaf_bound})",
                    {"n_max": leaf_bound, "m_max": leaf_bound})
    if S.weak:
        report.note("curvature terms have no tree counterpart and are skipped")
    corolla_cells = set()
    for T in _trees(S, leaf_bound):
        if not T.vertices:
            continue
        p, q = T.arity
        dT = tree_differential(T)
        is_corolla = T.vertices == 1
        for closed in itertools.product(S.closed.names, repeat=p):
            for opens in itertools.product(S.open.names, repeat=q):
                lhs = {}
                for tree, coef in dT.items():
                    add_scaled(lhs, evaluate_tree(tree, S, closed, opens), coef)
                add_scaled(lhs, _bracket_with_delta(T, S, closed, opens), -1)
                if lhs:
                    report.add("chain", p, q, (str(T),) + closed + opens, lhs)
                    if is_corolla and list(closed) == sorted(closed, key=S.closed.sort_key):
                        corolla_cells.add((T.sector, p, q, closed + opens))
    relations = relation_cells(check_ocha(S, leaf_bound, leaf_bound))
    expected = {
        cell for cell in relations
        if cell[1] + cell[2] <= leaf_bound
        and (cell[1] >= 2 if cell[0] == "closed" else 2 * cell[1] + cell[2] >= 2)
    }
    report.fact("agrees_with_relations", corolla_cells == expected)
    return report.finish()
