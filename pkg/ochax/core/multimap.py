#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Multilinear Maps
================

Sparse structure-constant tables for graded multilinear maps
``Hc^{{⊗p}} ⊗ Ho^{{⊗q}} -> target``. The first ``p`` slots are graded
symmetric, the last ``q`` ordered. Symmetric blocks are stored only on
canonical keys (letters sorted by degree, then name); evaluation applies the
Koszul sign of the sorting permutation.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "MultiMap",
    "canonical_closed",
    "evaluate",
    "tensor_apply",
    "check_symmetry",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging

from ..errors import ArityError, DegreeError, SectorError
from .graded import Element, accumulate, add_scaled
from .permutations import reorder_sign
from .scalars import ONE, parity_sign
from .series import smul

logger = logging.getLogger(__name__)


def canonical_closed(space, letters):
    """
    Sort closed letters canonically.

    Returns
    -------
    sign : int
        Koszul sign of the sort, 0 when an odd letter repeats.
    key : tuple of str
    """
    degrees = [space.closed.degree(c) for c in letters]
    order = sorted(range(len(letters)), key=lambda i: space.closed.sort_key(letters[i]))
    key = tuple(letters[i] for i in order)
    for a, b in zip(key, key[1:]):
        if a == b and space.closed.degree(a) % 2:
            return 0, key
    return reorder_sign(order, degrees), key


class MultiMap:
    """
    Graded multilinear map given by a sparse table.

    Parameters
    ----------
    name : str
        Display name, e.g. ``"l2"`` or ``"n1,1"``.
    p, q : int
        Number of closed (symmetric) and open (ordered) inputs.
    source : OCSpace
        Input spaces.
    target : GradedSpace
        Output space.
    degree : int
        Intrinsic degree: +1 for structure maps, 0 for morphism components.
    table : dict
        Input tuple (closed letters then open letters) to a dict vector in
        ``target``.
    canonical : bool
        When False, the table is read verbatim and no symmetrisation is
        applied. Only useful for building broken tables in tests.
    """

    def __init__(self, name, p, q, source, target, degree=1, table=None, canonical=True):
        self.name = name
        self.p = int(p)
        self.q = int(q)
        self.source = source
        self.target = target
        self.degree = int(degree)
        self.canonical = canonical
        self.table = {}
        for key, value in (table or {}).items():
            key = tuple(key)
            self._validate_key(key)
            vector = value.coeffs if isinstance(value, Element) else value
            clean = {}
            add_scaled(clean, vector)
            if not clean:
                continue
            expected = self.input_degree(key) + self.degree
            for out in clean:
                if out not in target:
                    raise SectorError(f"{name}: output {out!r} not in the {target.sector} space")
                if target.degree(out) != expected:
                    raise DegreeError(
                        f"{name}{key} -> {out}: degree {target.degree(out)}, expected {expected}"
                    )
            if key in self.table:
                raise ValueError(f"{name}: duplicate table key {key}")
            self.table[key] = clean

    def _validate_key(self, key):
        if len(key) != self.p + self.q:
            raise ArityError(f"{self.name}: key {key} has wrong length for arity ({self.p},{self.q})")
        closed, opens = key[: self.p], key[self.p :]
        for c in closed:
            if c not in self.source.closed:
                raise SectorError(f"{self.name}: {c!r} is not a closed basis element")
        for o in opens:
            if o not in self.source.open:
                raise SectorError(f"{self.name}: {o!r} is not an open basis element")
        if self.canonical and self.p > 1:
            sign, canon = canonical_closed(self.source, closed)
            if canon != tuple(closed):
                raise ValueError(f"{self.name}: non-canonical symmetric key {key}")

    @property
    def flavor(self):
        if self.p == 0:
            return "ordered"
        if self.q == 0:
            return "fully-symmetric"
        return "mixed"

    @property
    def arity(self):
        return (self.p, self.q)

    def input_degree(self, key):
        return sum(self.source.degree(x) for x in key)

    def is_zero(self):
        return not self.table

    def apply_basis(self, closed, opens):
        """Value on basis letters as a dict vector (a fresh dict)."""
        if self.canonical:
            if self.p > 1:
                sign, closed = canonical_closed(self.source, tuple(closed))
                if sign == 0:
                    return {}
            else:
                sign = 1
        else:
            sign = 1
        value = self.table.get(tuple(closed) + tuple(opens))
        if not value:
            return {}
        if sign == 1:
            return dict(value)
        return {k: -v for k, v in value.items()}

    def items(self):
        return self.table.items()

    def scaled(self, scalar, name=None):
        table = {k: {o: smul(c, scalar) for o, c in v.items()} for k, v in self.table.items()}
        return MultiMap(name or self.name, self.p, self.q, self.source, self.target,
                        self.degree, table, self.canonical)

    def __eq__(self, other):
        if not isinstance(other, MultiMap):
            return NotImplemented
        return (self.arity, self.degree, self.table) == (other.arity, other.degree, other.table)

    def __repr__(self):
        return f"MultiMap({self.name}, arity={self.arity}, degree={self.degree}, entries={len(self.table)})"


def evaluate(fmap, args):
    """
    Evaluate a multilinear map on homogeneous elements.

    Parameters
    ----------
    fmap : MultiMap
    args : sequence of Element
        ``p`` closed elements followed by ``q`` open ones.

    Returns
    -------
    Element
        In ``fmap.target`` of degree ``sum(deg args) + fmap.degree``.

    Examples
    --------
    With ``l2(c1, c2) = c3`` stored and ``|c1| = |c2| = 1``,
    ``evaluate(l2, [c2, c1])`` is ``-c3``.
    """
    if len(args) != fmap.p + fmap.q:
        raise ArityError(f"{fmap.name} takes {fmap.p + fmap.q} arguments, got {len(args)}")
    for i, arg in enumerate(args):
        want = fmap.source.closed if i < fmap.p else fmap.source.open
        if arg.space != want:
            raise SectorError(f"argument {i + 1} of {fmap.name} must be {want.sector}")
    degree = sum(a.degree for a in args) + fmap.degree
    out = {}
    for combo in itertools.product(*[list(a.items()) for a in args]):
        coef = ONE
        for _, c in combo:
            coef = smul(coef, c)
        letters = tuple(name for name, _ in combo)
        value = fmap.apply_basis(letters[: fmap.p], letters[fmap.p :])
        add_scaled(out, value, coef)
    return Element(fmap.target, out, degree)


def tensor_apply(maps, args):
    """
    Apply ``f_1 ⊗ f_2 ⊗ ...`` to ``x_1 ⊗ x_2 ⊗ ...``.

    ``None`` stands for an identity slot. Moving a map ``g`` past earlier
    arguments costs ``(-1)^{|g| (|x_1| + ...)}``. The accumulated sign is
    folded into the first output factor.

    Returns
    -------
    list of Element
    """
    need = sum(1 if m is None else m.p + m.q for m in maps)
    if need != len(args):
        raise ArityError(f"maps consume {need} arguments, {len(args)} given")
    outputs = []
    exponent = 0
    passed = 0
    pos = 0
    for m in maps:
        if m is None:
            block = args[pos : pos + 1]
            outputs.append(block[0])
        else:
            block = args[pos : pos + m.p + m.q]
            exponent += m.degree * passed
            outputs.append(evaluate(m, block))
        passed += sum(a.degree for a in block)
        pos += len(block)
    sign = parity_sign(exponent)
    if sign == -1 and outputs:
        outputs[0] = -outputs[0]
    return outputs


def check_symmetry(fmap):
    """
    Verify graded symmetry in the closed block on every basis tuple.

    Ordered maps (no closed inputs) pass vacuously.
    """
    if fmap.p < 2:
        return True
    closed = fmap.source.closed.names
    opens_all = list(itertools.product(fmap.source.open.names, repeat=fmap.q))
    for letters in itertools.product(closed, repeat=fmap.p):
        degrees = [fmap.source.degree(c) for c in letters]
        for opens in opens_all:
            base = fmap.apply_basis(letters, opens)
            for order in itertools.permutations(range(fmap.p)):
                permuted = tuple(letters[i] for i in order)
                sign = reorder_sign(order, degrees)
                other = fmap.apply_basis(permuted, opens)
                diff = dict(other)
                add_scaled(diff, base, -sign)
                if diff:
                    logger.debug("%s fails symmetry on %s%s", fmap.name, permuted, opens)
                    return False
    return True
