#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Rooted Trees
============

Planar (A∞), non-planar (L∞) and mixed (open-closed) rooted trees with
grafting and linear combinations. Every vertex has degree +1; a tree is
stored in canonical form, the sign of any other vertex ordering is carried
by the coefficient in a :class:`TreeSum`.

Vertices are ``"l"`` (closed output, closed children only, unordered) and
``"n"`` (open output, unordered closed children followed by ordered open
children); A∞ trees are built from ``"n"`` vertices without closed
children. Leaves are ``"e"`` nodes; a lone leaf is the identity tree.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "Tree",
    "TreeSum",
    "graft",
    "enumerate_trees",
    "schroder",
    "catalan",
    "classical_dimension",
    "to_graph_text",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import math
from dataclasses import dataclass, field, replace

from ..core.graded import accumulate
from ..core.permutations import reorder_sign, set_partitions
from ..core.scalars import ONE, format_scalar
from ..errors import ArityError, SectorError

_INF = float("inf")


@dataclass(frozen=True)
class Tree:
    """
    Rooted tree node.

    Parameters
    ----------
    kind : {"l", "n", "e"}
        Closed vertex, open vertex or leaf.
    closed, open : tuple of Tree
        Children in closed and open slots.
    sector : {"closed", "open"}
        Output sector; fixed by ``kind`` for vertices.
    label : int
        Leaf label: an arbitrary number for closed leaves, the planar
        position for open leaves.
    """

    kind: str
    closed: tuple = ()
    open: tuple = ()
    sector: str = "open"
    label: int = 0
    vid: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in ("l", "n", "e"):
            raise ValueError(f"unknown node kind {self.kind!r}")
        if self.kind == "l":
            if self.open:
                raise SectorError("closed vertices take no open children")
            object.__setattr__(self, "sector", "closed")
        elif self.kind == "n":
            object.__setattr__(self, "sector", "open")
        for child in self.closed:
            if child.sector != "closed":
                raise SectorError("open subtree in a closed slot")
        for child in self.open:
            if child.sector != "open":
                raise SectorError("closed subtree in an open slot")
        object.__setattr__(self, "closed", tuple(self.closed))
        object.__setattr__(self, "open", tuple(self.open))
        object.__setattr__(
            self, "_hash", hash((self.kind, self.closed, self.open, self.sector, self.label))
        )

    def __hash__(self):
        # set in __post_init__
        return self._hash

    @classmethod
    def leaf(cls, sector, label=1):
        return cls("e", sector=sector, label=int(label))

    @classmethod
    def identity(cls, sector="open"):
        """The 0-vertex tree, unit for grafting."""
        return cls.leaf(sector, 1)

    @classmethod
    def corolla(cls, kind, p, q=0):
        """
        ``corolla("l", k)``, ``corolla("n", p, q)`` or ``corolla("m", k)``.
        """
        if kind == "m":
            kind, p, q = "n", 0, p
        closed = tuple(cls.leaf("closed", i) for i in range(1, p + 1))
        opens = tuple(cls.leaf("open", i) for i in range(1, q + 1))
        return cls(kind, closed, opens)

    @property
    def is_leaf(self):
        return self.kind == "e"

    @property
    def children(self):
        return self.closed + self.open

    @property
    def vertices(self):
        """``v(T)``, the grading of the tree."""
        if self.is_leaf:
            return 0
        return 1 + sum(c.vertices for c in self.children)

    @property
    def internal_edges(self):
        return max(self.vertices - 1, 0)

    def leaves(self):
        """Leaves in pre-order (closed slots before open slots at each vertex)."""
        if self.is_leaf:
            return [self]
        return [leaf for c in self.children for leaf in c.leaves()]

    @property
    def closed_labels(self):
        return tuple(sorted(leaf.label for leaf in self.leaves() if leaf.sector == "closed"))

    @property
    def open_count(self):
        return sum(1 for leaf in self.leaves() if leaf.sector == "open")

    @property
    def arity(self):
        return (len(self.closed_labels), self.open_count)

    @property
    def min_label(self):
        labels = self.closed_labels
        return labels[0] if labels else _INF

    def nodes(self):
        """Vertices in pre-order."""
        if self.is_leaf:
            return []
        return [self] + [v for c in self.children for v in c.nodes()]

    @property
    def operad(self):
        """``"A"``, ``"L"`` or ``"OC"`` according to the vertices present."""
        nodes = self.nodes() or [self]
        if all(v.kind == "l" or (v.is_leaf and v.sector == "closed") for v in nodes):
            return "L"
        if all(v.kind == "n" and not v.closed for v in self.nodes()) and not self.closed_labels:
            return "A"
        return "OC"

    def is_binary(self):
        return all(len(v.children) == 2 for v in self.nodes())

    def vertex_name(self):
        if self.kind == "l":
            return f"l{len(self.closed)}"
        return f"n{len(self.closed)},{len(self.open)}"

    def __str__(self):
        if self.is_leaf:
            return f"[{self.label}]" if self.sector == "closed" else f"({self.label})"
        inner = ",".join(str(c) for c in self.closed)
        if self.kind == "n":
            inner += ";" + ",".join(str(c) for c in self.open)
        return f"{self.vertex_name()}{{{inner}}}"


def _canon(node):
    """Closed children sorted by least closed label, recursively."""
    if node.is_leaf:
        return node
    closed = sorted((_canon(c) for c in node.closed), key=lambda c: c.min_label)
    opens = tuple(_canon(c) for c in node.open)
    return replace(node, closed=tuple(closed), open=opens)


def _strip(node):
    if node.is_leaf:
        return node
    return Tree(node.kind, tuple(_strip(c) for c in node.closed),
                tuple(_strip(c) for c in node.open), node.sector)


def _with_vids(node, counter):
    """Attach vertex ids in pre-order drawn from ``counter``."""
    if node.is_leaf:
        return node
    vid = next(counter)
    closed = tuple(_with_vids(c, counter) for c in node.closed)
    opens = tuple(_with_vids(c, counter) for c in node.open)
    return replace(node, closed=closed, open=opens, vid=vid)


def _renumber_open(node, counter=None):
    counter = itertools.count(1) if counter is None else counter
    if node.is_leaf:
        if node.sector == "open":
            return replace(node, label=next(counter))
        return node
    closed = tuple(_renumber_open(c, counter) for c in node.closed)
    opens = tuple(_renumber_open(c, counter) for c in node.open)
    return replace(node, closed=closed, open=opens)


def _relabel_closed(node, mapping):
    if node.is_leaf:
        if node.sector == "closed":
            return replace(node, label=mapping[node.label])
        return node
    return replace(node, closed=tuple(_relabel_closed(c, mapping) for c in node.closed),
                   open=tuple(_relabel_closed(c, mapping) for c in node.open))


def orient(node):
    """
    Canonical form of a tree whose vertices carry ids in a chosen order.

    Returns ``(sign, tree)`` where ``sign`` is the parity of the permutation
    taking the id order to the canonical pre-order (all vertices are odd).
    """
    canon = _renumber_open(_canon(node))
    seq = [v.vid for v in canon.nodes()]
    ranks = {vid: i for i, vid in enumerate(sorted(seq))}
    order = [ranks[vid] for vid in seq]
    return reorder_sign(order, [1] * len(order)), _strip(canon)


def canonical(tree):
    """``(sign, tree)`` with vertices taken in the given pre-order."""
    return orient(_with_vids(tree, itertools.count()))


class TreeSum:
    """Formal rational combination of canonical trees."""

    def __init__(self, terms=None):
        self.terms = {}
        for tree, coef in (terms or {}).items():
            self.add(tree, coef)

    @classmethod
    def of(cls, tree, coef=ONE):
        """Single tree, canonicalised with its sign."""
        sign, canon = canonical(tree)
        return cls({canon: coef * sign})

    def add(self, tree, coef):
        accumulate(self.terms, tree, coef)
        return self

    def add_oriented(self, node, coef):
        """Add a tree with vertex ids, folding in its orientation sign."""
        sign, canon = orient(node)
        return self.add(canon, coef * sign)

    def __add__(self, other):
        out = TreeSum(self.terms)
        for tree, coef in other.terms.items():
            out.add(tree, coef)
        return out

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        return TreeSum({t: c * scalar for t, c in self.terms.items()})

    def items(self):
        return self.terms.items()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Tree):
            other = TreeSum.of(other)
        if not isinstance(other, TreeSum):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "TreeSum(0)"
        body = " + ".join(f"({format_scalar(c)})*{t}" for t, c in sorted(self.terms.items(), key=lambda kv: str(kv[0])))
        return f"TreeSum({body})"


def _find_leaf(node, sector, label):
    return any(leaf.sector == sector and leaf.label == label for leaf in node.leaves())


def _substitute(node, sector, label, subtree):
    if node.is_leaf:
        if node.sector == sector and node.label == label:
            return subtree
        return node
    return replace(node, closed=tuple(_substitute(c, sector, label, subtree) for c in node.closed),
                   open=tuple(_substitute(c, sector, label, subtree) for c in node.open))


def graft(T, i, T2, signed=False):
    """
    Graft ``T2`` into leaf ``i`` of ``T``.

    A closed-output ``T2`` goes into the closed leaf labelled ``i`` (``∘_i``);
    its labels become ``i, i+1, ...`` and the larger labels of ``T`` shift up.
    An open-output ``T2`` goes into the ``i``-th open leaf (``•_i``); its
    closed labels are shifted past those of ``T`` and open leaves are
    renumbered in planar order.

    Returns
    -------
    Tree, or (int, Tree) when ``signed``
        The sign is ``(-1)^{v(T2) * (vertices of T after leaf i)}``.

    Raises
    ------
    ArityError
        If ``T`` has no such leaf.
    """
    sector = T2.sector
    if not _find_leaf(T, sector, i):
        raise ArityError(f"tree {T} has no {sector} leaf {i}")
    labels2 = T2.closed_labels
    if sector == "closed":
        shift = len(labels2) - 1
        outer = {c: c + shift if c > i else c for c in T.closed_labels if c != i}
        inner = {c: i + k for k, c in enumerate(labels2)}
    else:
        base = max(T.closed_labels, default=0)
        outer = {c: c for c in T.closed_labels}
        inner = {c: base + k + 1 for k, c in enumerate(labels2)}
    counter = itertools.count()
    outer_tree = _with_vids(_relabel_closed(T, {**outer, i: -1} if sector == "closed" else outer), counter)
    inner_tree = _with_vids(_relabel_closed(T2, inner), counter)
    if sector == "closed":
        grafted = _substitute(outer_tree, "closed", -1, inner_tree)
    else:
        grafted = _substitute(outer_tree, "open", i, inner_tree)
    sign, tree = orient(grafted)
    return (sign, tree) if signed else tree


def _gen_l(labels):
    if len(labels) == 1:
        return [Tree.leaf("closed", labels[0])]
    out = []
    for partition in set_partitions(labels):
        if len(partition) < 2:
            continue
        for children in itertools.product(*[_gen_l(block) for block in partition]):
            out.append(Tree("l", children))
    return out


def _gen_open_child(labels, q):
    if not labels and q == 1:
        return [Tree.leaf("open", 0)]
    if not labels and q == 0:
        return []
    return _gen_n(labels, q)


def _gen_n(labels, q):
    out = []
    for size in range(len(labels) + 1):
        for chosen in itertools.combinations(labels, size):
            others = tuple(c for c in labels if c not in chosen)
            for partition in set_partitions(chosen):
                closed_options = list(itertools.product(*[_gen_l(b) for b in partition]))
                for j in range(q + len(others) + 1):
                    if 2 * len(partition) + j < 2:
                        continue
                    for qs in _compositions(q, j):
                        for owner in itertools.product(range(j), repeat=len(others)):
                            groups = [tuple(c for c, o in zip(others, owner) if o == k) for k in range(j)]
                            if any(not g and qk == 0 for g, qk in zip(groups, qs)):
                                continue
                            open_options = [_gen_open_child(g, qk) for g, qk in zip(groups, qs)]
                            for closed in closed_options:
                                for opens in itertools.product(*open_options):
                                    out.append(Tree("n", closed, opens))
    return out


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        ends = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(ends, ends[1:]))


def enumerate_trees(operad, closed=0, open=0):
    """
    Every canonical tree of an operad with the given leaf counts.

    Parameters
    ----------
    operad : {"A", "L", "OC"}
        Planar trees on ``open`` leaves, non-planar trees on ``closed``
        labelled leaves, or open-rooted mixed trees.

    Returns
    -------
    list of Tree
        Includes the identity tree for a single leaf.

    Examples
    --------
    >>> len(enumerate_trees("A", open=4))
    11
    """
    if operad == "A":
        if closed:
            raise ArityError("planar trees have no closed leaves")
        if open == 1:
            return [Tree.identity("open")]
        return [_renumber_open(t) for t in _gen_n((), open)] if open >= 2 else []
    if operad == "L":
        if open:
            raise ArityError("non-planar trees have no open leaves")
        return _gen_l(tuple(range(1, closed + 1))) if closed >= 1 else []
    if operad == "OC":
        if closed == 0 and open == 1:
            return [Tree.identity("open")]
        if closed == 0 and open == 0:
            return []
        return [_renumber_open(t) for t in _gen_n(tuple(range(1, closed + 1)), open)]
    raise ValueError(f"unknown operad {operad!r}")


def schroder(n):
    """Number of planar rooted trees with ``n`` leaves and no unary vertices."""
    if n <= 0:
        return 0
    values = [0, 1, 1]
    for k in range(3, n + 1):
        values.append((3 * (2 * k - 3) * values[k - 1] - (k - 3) * values[k - 2]) // k)
    return values[n]


def catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def classical_dimension(T):
    """
    Unsuspended grading: ``int + 2 - n`` (planar), ``int + 3 - 2k``
    (non-planar) or ``int + 2 - 2k - l`` (mixed).
    """
    k, q = T.arity
    operad = T.operad
    if operad == "A":
        return T.internal_edges + 2 - q
    if operad == "L":
        return T.internal_edges + 3 - 2 * k
    return T.internal_edges + 2 - 2 * k - q


def _graph_lines(tree):
    nodes = tree.nodes()
    ids = {id(v): f"v{i}" for i, v in enumerate(nodes)}
    lines = []
    for v in nodes:
        tokens = []
        for slot, children in (("c", v.closed), ("o", v.open)):
            for child in children:
                tokens.append(f"{slot}:{child}" if child.is_leaf else f"{slot}:{ids[id(child)]}")
        lines.append(f"{ids[id(v)]} {v.vertex_name()} <- {' '.join(tokens)}".rstrip())
    if not nodes:
        lines.append(f"e {tree}")
    return lines


def to_graph_text(obj):
    """
    Plain-text graph: one vertex per line with its children and edge kinds.

    A :class:`TreeSum` prints each tree under a ``# coefficient`` header.
    """
    if isinstance(obj, Tree):
        return "\n".join(_graph_lines(obj))
    blocks = []
    for tree, coef in sorted(obj.items(), key=lambda kv: str(kv[0])):
        blocks.append("\n".join([f"# {format_scalar(coef)}"] + _graph_lines(tree)))
    return "\n\n".join(blocks)
