#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Leibniz Pairs
=============

A dg Lie algebra ``g`` acting by derivations on a dg associative algebra
``A`` gives a strict OCHA on ``(↓g, ↓A)``. Inputs are given in their
unsuspended degrees; every strict axiom is checked before the suspension.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["LieData", "AssociativeData", "from_leibniz_pair", "check_leibniz_pair"]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging
from dataclasses import dataclass, field

from ..core.graded import GradedSpace, OCSpace, add_scaled
from ..core.multimap import canonical_closed
from ..core.scalars import parity_sign, to_scalar
from ..errors import AxiomError
from .ocha import OchaStructure

logger = logging.getLogger(__name__)


def _clean_table(table):
    out = {}
    for key, vec in (table or {}).items():
        clean = {}
        add_scaled(clean, {k: to_scalar(v) for k, v in vec.items()})
        if clean:
            out[tuple(key) if isinstance(key, tuple) else key] = clean
    return out


@dataclass
class LieData:
    """
    dg Lie algebra with basis degrees, bracket ``[X, Y]`` and differential.

    Only one of ``(X, Y)`` and ``(Y, X)`` needs to be listed; the other is
    filled in by graded antisymmetry.
    """

    basis: tuple
    bracket: dict = field(default_factory=dict)
    differential: dict = field(default_factory=dict)

    def __post_init__(self):
        self.basis = tuple((str(n), int(d)) for n, d in self.basis)
        self.degrees = dict(self.basis)
        self.bracket = _clean_table(self.bracket)
        self.differential = _clean_table(self.differential)

    def br(self, x, y):
        """Bracket of two vectors."""
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                if (a, b) in self.bracket:
                    add_scaled(out, self.bracket[(a, b)], ca * cb)
                elif (b, a) in self.bracket:
                    sign = -parity_sign(self.degrees[a] * self.degrees[b])
                    add_scaled(out, self.bracket[(b, a)], ca * cb * sign)
        return out

    def d(self, x):
        out = {}
        for a, c in x.items():
            add_scaled(out, self.differential.get(a, {}), c)
        return out


@dataclass
class AssociativeData:
    """dg associative algebra with basis degrees, product ``a·b`` and differential."""

    basis: tuple
    product: dict = field(default_factory=dict)
    differential: dict = field(default_factory=dict)

    def __post_init__(self):
        self.basis = tuple((str(n), int(d)) for n, d in self.basis)
        self.degrees = dict(self.basis)
        self.product = _clean_table(self.product)
        self.differential = _clean_table(self.differential)

    def mul(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                add_scaled(out, self.product.get((a, b), {}), ca * cb)
        return out

    def d(self, x):
        out = {}
        for a, c in x.items():
            add_scaled(out, self.differential.get(a, {}), c)
        return out


def _unit(name):
    return {name: 1}


def _act(action, x, a):
    out = {}
    for X, cx in x.items():
        for b, cb in a.items():
            add_scaled(out, action.get((X, b), {}), cx * cb)
    return out


def _difference(lhs, *terms):
    out = dict(lhs)
    for sign, vec in terms:
        add_scaled(out, vec, -sign)
    return out


def check_leibniz_pair(g, A, action):
    """
    List of ``(equation, inputs, residual)`` for every failing strict axiom.

    Equations are named ``antisymmetry``, ``Jacobi``, ``associativity``,
    ``Xab`` (derivation law), ``XYa`` (action law) and ``chain`` (every
    compatibility with the differentials, including ``d^2 = 0``).
    """
    action = _clean_table(action)
    failures = []
    gdeg, adeg = g.degrees, A.degrees

    for (X, Y), vec in g.bracket.items():
        if (Y, X) in g.bracket:
            residual = _difference(g.bracket[(Y, X)], (-parity_sign(gdeg[X] * gdeg[Y]), vec))
            if residual:
                failures.append(("antisymmetry", (X, Y), residual))
        if X == Y and gdeg[X] % 2 == 0 and vec:
            failures.append(("antisymmetry", (X, X), vec))
    for X in gdeg:
        if g.d(g.d(_unit(X))):
            failures.append(("chain", (X,), g.d(g.d(_unit(X)))))
        for Y in gdeg:
            lhs = g.d(g.br(_unit(X), _unit(Y)))
            residual = _difference(lhs, (1, g.br(g.d(_unit(X)), _unit(Y))),
                                   (parity_sign(gdeg[X]), g.br(_unit(X), g.d(_unit(Y)))))
            if residual:
                failures.append(("chain", (X, Y), residual))
            for Z in gdeg:
                lhs = g.br(_unit(X), g.br(_unit(Y), _unit(Z)))
                residual = _difference(
                    lhs,
                    (1, g.br(g.br(_unit(X), _unit(Y)), _unit(Z))),
                    (parity_sign(gdeg[X] * gdeg[Y]), g.br(_unit(Y), g.br(_unit(X), _unit(Z)))),
                )
                if residual:
                    failures.append(("Jacobi", (X, Y, Z), residual))
    for a in adeg:
        if A.d(A.d(_unit(a))):
            failures.append(("chain", (a,), A.d(A.d(_unit(a)))))
        for b in adeg:
            lhs = A.d(A.mul(_unit(a), _unit(b)))
            residual = _difference(lhs, (1, A.mul(A.d(_unit(a)), _unit(b))),
                                   (parity_sign(adeg[a]), A.mul(_unit(a), A.d(_unit(b)))))
            if residual:
                failures.append(("chain", (a, b), residual))
            for c in adeg:
                residual = _difference(A.mul(A.mul(_unit(a), _unit(b)), _unit(c)),
                                       (1, A.mul(_unit(a), A.mul(_unit(b), _unit(c)))))
                if residual:
                    failures.append(("associativity", (a, b, c), residual))
    for X in gdeg:
        for a in adeg:
            lhs = A.d(_act(action, _unit(X), _unit(a)))
            residual = _difference(lhs, (1, _act(action, g.d(_unit(X)), _unit(a))),
                                   (parity_sign(gdeg[X]), _act(action, _unit(X), A.d(_unit(a)))))
            if residual:
                failures.append(("chain", (X, a), residual))
            for b in adeg:
                lhs = _act(action, _unit(X), A.mul(_unit(a), _unit(b)))
                residual = _difference(
                    lhs,
                    (1, A.mul(_act(action, _unit(X), _unit(a)), _unit(b))),
                    (parity_sign(gdeg[X] * adeg[a]), A.mul(_unit(a), _act(action, _unit(X), _unit(b)))),
                )
                if residual:
                    failures.append(("Xab", (X, a, b), residual))
            for Y in gdeg:
                lhs = _act(action, g.br(_unit(X), _unit(Y)), _unit(a))
                residual = _difference(
                    lhs,
                    (1, _act(action, _unit(X), _act(action, _unit(Y), _unit(a)))),
                    (-parity_sign(gdeg[X] * gdeg[Y]), _act(action, _unit(Y), _act(action, _unit(X), _unit(a)))),
                )
                if residual:
                    failures.append(("XYa", (X, Y, a), residual))
    return failures


def from_leibniz_pair(g, A, action=None, bound=None):
    """
    Strict OCHA ``l_1, l_2, n_{0,1}, n_{0,2}, n_{1,1}`` of a Leibniz pair.

    On suspended letters ``x = ↓X`` of degree ``|X| - 1`` the binary maps
    carry the sign ``(-1)^{|x|}`` of their first input:
    ``l_2(x, y) = (-1)^{|x|} ↓[X, Y]``, ``n_{0,2}(x, y) = (-1)^{|x|} ↓(ab)``
    and ``n_{1,1}(x; y) = (-1)^{|x|} ↓(X a)``; the unary maps are the
    differentials.

    Raises
    ------
    AxiomError
        Naming the first violated strict equation.
    """
    action = _clean_table(action)
    failures = check_leibniz_pair(g, A, action)
    if failures:
        equation, inputs, residual = failures[0]
        logger.error("Leibniz pair rejected: %d failing instances", len(failures))
        raise AxiomError(equation, f"fails on {inputs}: residual {residual}")
    closed = GradedSpace("closed", tuple((n, d - 1) for n, d in g.basis))
    opened = GradedSpace("open", tuple((n, d - 1) for n, d in A.basis))
    space = OCSpace(closed, opened)

    l1 = {(X,): g.d(_unit(X)) for X in g.degrees}
    l2 = {}
    for X in g.degrees:
        for Y in g.degrees:
            sign, key = canonical_closed(space, (X, Y))
            if not sign or key != (X, Y):
                continue
            value = g.br(_unit(X), _unit(Y))
            l2[key] = {k: v * parity_sign(closed.degree(X)) for k, v in value.items()}
    n01 = {(a,): A.d(_unit(a)) for a in A.degrees}
    n02 = {}
    for a in A.degrees:
        for b in A.degrees:
            value = A.mul(_unit(a), _unit(b))
            n02[(a, b)] = {k: v * parity_sign(opened.degree(a)) for k, v in value.items()}
    n11 = {}
    for X in g.degrees:
        for a in A.degrees:
            value = _act(action, _unit(X), _unit(a))
            n11[(X, a)] = {k: v * parity_sign(closed.degree(X)) for k, v in value.items()}
    bound = 3 if bound is None else bound
    return OchaStructure.from_tables(
        closed.basis, opened.basis,
        l={1: l1, 2: l2},
        n={(0, 1): n01, (0, 2): n02, (1, 1): n11},
        bound=bound,
    )
