#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Tree Differential
=================

The edge-expansion differential: every vertex is split in all ways into
two stable vertices joined by a new internal edge. On a corolla this gives
``-Σ`` of the two-vertex trees contracting to it; on a general tree the
split of the ``k``-th vertex in pre-order carries ``(-1)^k``, which is the
Leibniz extension along grafting.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["tree_differential", "check_d_squared", "vertex_splittings"]

__doc__ = __doc__.format("\n   ".join(__all__))

import functools
import itertools
import logging
from dataclasses import replace

from ..core.scalars import parity_sign
from .tree import Tree, TreeSum, _with_vids, enumerate_trees

logger = logging.getLogger(__name__)


def _stable(kind, p, q):
    if kind == "l":
        return p >= 2
    return 2 * p + q >= 2


def vertex_splittings(u):
    """
    Yield ``(outer, inner)`` vertex pairs that contract back to ``u``.

    ``inner`` hangs from ``outer`` in place of some of ``u``'s children.
    """
    C, O = u.closed, u.open
    p, q = len(C), len(O)
    top = p - 1 if u.kind == "l" else p
    for size in range(2, top + 1):
        for chosen in itertools.combinations(range(p), size):
            inner = Tree("l", tuple(C[i] for i in chosen))
            rest = tuple(C[i] for i in range(p) if i not in chosen)
            yield Tree(u.kind, (inner,) + rest, O), inner
    if u.kind == "l":
        return
    for r in range(p + 1):
        for used in itertools.combinations(range(p), r):
            kept = tuple(C[i] for i in range(p) if i not in used)
            for s in range(q + 1):
                if not _stable("n", r, s) or not _stable("n", p - r, q - s + 1):
                    continue
                for i in range(q - s + 1):
                    inner = Tree("n", tuple(C[k] for k in used), O[i : i + s])
                    yield Tree("n", kept, O[:i] + (inner,) + O[i + s :]), inner


def _replace_vertex(node, vid, new):
    if node.is_leaf:
        return node
    if node.vid == vid:
        return new
    return replace(node, closed=tuple(_replace_vertex(c, vid, new) for c in node.closed),
                   open=tuple(_replace_vertex(c, vid, new) for c in node.open))


def _mark(outer, inner, vid):
    """Give ``outer`` the id ``vid`` and ``inner`` the id ``vid + 1``."""
    marked_inner = replace(inner, vid=vid + 1)

    def swap(children):
        return tuple(marked_inner if c is inner else c for c in children)

    return replace(outer, closed=swap(outer.closed), open=swap(outer.open), vid=vid)


@functools.cache
def _expansions(T, flip):
    out = TreeSum()
    annotated = _with_vids(T, itertools.count(0, 2))
    for u in annotated.nodes():
        k = u.vid // 2
        sign = -1 if flip else -parity_sign(k)
        for outer, inner in vertex_splittings(u):
            expanded = _replace_vertex(annotated, u.vid, _mark(outer, inner, u.vid))
            out.add_oriented(expanded, sign)
    return out


def tree_differential(T, flip=False):
    """
    ``d(T)`` as a :class:`TreeSum`.

    Expansions are memoized per tree, so ``d(d(T))`` over an enumeration
    reuses the splittings of every tree already seen.

    Parameters
    ----------
    T : Tree or TreeSum
    flip : bool
        Drop the pre-order sign ``(-1)^k``; only useful to show that
        ``d^2 = 0`` then fails.
    """
    if isinstance(T, Tree):
        return TreeSum(_expansions(T, flip).terms)
    out = TreeSum()
    for tree, coef in T.items():
        for image, c in _expansions(tree, flip).items():
            out.add(image, c * coef)
    return out


def _trees_up_to(leaf_bound, operads):
    for operad in operads:
        for total in range(2, leaf_bound + 1):
            if operad == "A":
                yield from enumerate_trees("A", open=total)
            elif operad == "L":
                yield from enumerate_trees("L", closed=total)
            else:
                for p in range(total + 1):
                    if p == 0 and "A" in operads:
                        continue
                    yield from enumerate_trees("OC", closed=p, open=total - p)
        if operad == "OC":
            yield from enumerate_trees("OC", closed=1, open=0)


def check_d_squared(leaf_bound, flip=False, operads=("A", "L", "OC")):
    """
    ``d(d(T)) = 0`` for every canonical tree with at most ``leaf_bound`` leaves.
    """
    count = 0
    for tree in _trees_up_to(leaf_bound, operads):
        count += 1
        square = tree_differential(tree_differential(tree, flip), flip)
        if not square.is_zero():
            logger.info("d^2 does not vanish on %s", tree)
            return False
    logger.debug("d^2 = 0 on %d trees", count)
    return True
