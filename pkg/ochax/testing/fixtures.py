#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Bundled Fixtures
================

Small exact instances used by the test-suite, the documentation and the
command line examples. Every builder returns a fresh object; degrees are
suspended (structure maps of degree +1).

Example::

    import ochax as ox
    S = ox.testing.dual_numbers()
    ox.structures.check_a_infinity(S).passed

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "dual_numbers",
    "corrupted_dual_numbers",
    "solvable_lie",
    "abelian_complex",
    "exact_square_lie",
    "scaling_lie",
    "corrupted_scaling_lie",
    "obstructed_lie",
    "leibniz_pair",
    "inner_derivation_pair",
    "curved_open_sector",
    "massey_algebra",
    "small_complex",
    "frobenius_pair",
    "generic_pairing",
    "corrupted",
    "FIXTURES",
    "write_fixture",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging

from ..core.scalars import to_scalar
from ..io.document import StructureDocument, write_document
from ..structures.cyclic import SymplecticPair
from ..structures.leibniz import AssociativeData, LieData, from_leibniz_pair
from ..structures.ocha import OchaStructure

logger = logging.getLogger(__name__)

_NO_LIE = LieData(())
_NO_ALGEBRA = AssociativeData(())


def dual_numbers(bound=4):
    """``Q[x]/(x^2)`` as a strict A∞-algebra on ``e`` (unit) and ``x``."""
    A = AssociativeData(
        (("e", 0), ("x", 0)),
        product={("e", "e"): {"e": 1}, ("e", "x"): {"x": 1}, ("x", "e"): {"x": 1}},
    )
    return from_leibniz_pair(_NO_LIE, A, bound=bound)


def corrupted(S, key, inputs, vector):
    """Copy of ``S`` with one table entry of the member ``key`` replaced."""
    sector, p, q = key
    table = {k: dict(v) for k, v in S.family.table(sector, p, q).items()}
    table[tuple(inputs)] = {n: to_scalar(c) for n, c in vector.items()}
    if sector == "closed":
        return S.with_maps(l={p: table})
    return S.with_maps(n={(p, q): table})


def corrupted_dual_numbers(bound=4):
    """
    :func:`dual_numbers` with ``e·x = 2x``; associativity fails on
    ``(e, e, x)``.
    """
    return corrupted(dual_numbers(bound), ("open", 0, 2), ("e", "x"), {"x": -2})


def solvable_lie(bound=3):
    """Two-dimensional solvable Lie algebra ``[X, Y] = Y``."""
    g = LieData((("X", 0), ("Y", 0)), bracket={("X", "Y"): {"Y": 1}})
    return from_leibniz_pair(g, _NO_ALGEBRA, bound=bound)


def scaling_lie(bound=3):
    """Three-dimensional Lie algebra ``[X, Y] = Y``, ``[X, Z] = Z``."""
    g = LieData((("X", 0), ("Y", 0), ("Z", 0)), bracket={("X", "Y"): {"Y": 1}, ("X", "Z"): {"Z": 1}})
    return from_leibniz_pair(g, _NO_ALGEBRA, bound=bound)


def corrupted_scaling_lie(bound=3):
    """
    :func:`scaling_lie` with ``[Y, Z] = X``; the Jacobi identity fails on
    ``(X, Y, Z)``.
    """
    return corrupted(scaling_lie(bound), ("closed", 2, 0), ("Y", "Z"), {"X": 1})


def abelian_complex(bound=3):
    """
    Closed complex ``u -> z``, ``y -> w`` with no brackets.

    ``z`` is a degree-0 cocycle, ``u`` a degree -1 gauge direction with
    ``l_1(u) = z``.
    """
    return OchaStructure.from_tables(
        closed=(("u", -1), ("z", 0), ("y", 0), ("w", 1)),
        l={1: {("u",): {"z": 1}, ("y",): {"w": 1}}},
        bound=bound,
    )


def exact_square_lie(bound=3):
    """
    dg Lie algebra with ``[X, Y] = Z = dW``.

    The seed ``x + y`` is a cocycle whose square is exact, so the
    Maurer-Cartan equation needs the correction ``-hbar^2 w``.
    """
    g = LieData(
        (("x", 1), ("y", 1), ("w", 1), ("z", 2)),
        bracket={("x", "y"): {"z": 1}},
        differential={"w": {"z": 1}},
    )
    return from_leibniz_pair(g, _NO_ALGEBRA, bound=bound)

def obstructed_lie(bound=3):
    """``[X, Y] = Z`` with ``d = 0``: the class of ``z`` obstructs ``x + y``."""
    g = LieData((("x", 1), ("y", 1), ("z", 2)), bracket={("x", "y"): {"z": 1}})
    return from_leibniz_pair(g, _NO_ALGEBRA, bound=bound)


def leibniz_pair(bound=3):
    """
    Abelian ``g = Q X`` acting on ``Q[x]/(x^2)`` by ``X(x) = x``, ``X(e) = 0``.

    ``X`` has suspended degree -1, so the only closed Maurer-Cartan element
    is zero; :func:`inner_derivation_pair` is the Leibniz pair to twist.
    """
    g = LieData((("X", 0),))
    A = AssociativeData(
        (("e", 0), ("x", 0)),
        product={("e", "e"): {"e": 1}, ("e", "x"): {"x": 1}, ("x", "e"): {"x": 1}},
    )
    return from_leibniz_pair(g, A, {("X", "x"): {"x": 1}}, bound=bound)


def inner_derivation_pair(bound=3):
    """
    Leibniz pair: odd ``Z`` acting by ``[n, -]`` on the path algebra of ``1 -n-> 2``.

    ``z = ↓Z`` and ``n`` both have suspended degree 0, and ``(hbar z, hbar n)``
    is a Maurer-Cartan pair.
    """
    g = LieData((("z", 1),))
    A = AssociativeData(
        (("e1", 0), ("e2", 0), ("n", 1)),
        product={
            ("e1", "e1"): {"e1": 1},
            ("e2", "e2"): {"e2": 1},
            ("e1", "n"): {"n": 1},
            ("n", "e2"): {"n": 1},
        },
    )
    action = {("z", "e1"): {"n": -1}, ("z", "e2"): {"n": 1}}
    return from_leibniz_pair(g, A, action, bound=bound)


def curved_open_sector(bound=3):
    """
    Dual numbers with ``n_{1,0}(z) = w`` for a closed ``z`` of degree 0.

    ``hbar z`` is Maurer-Cartan for the (zero) closed brackets, yet the
    deformed open sector acquires ``m_0 = hbar w``.
    """
    S = dual_numbers(bound)
    n = {(0, 2): S.family.table("open", 0, 2), (1, 0): {("z",): {"w": 1}}}
    return OchaStructure.from_tables(
        closed=(("z", 0),),
        open=S.open.basis + (("w", 1),),
        n=n,
        bound=bound,
    )


def massey_algebra(bound=5):
    """
    Six-dimensional dg algebra with ``a·a = du`` and ``a·u = p``.

    Its cohomology is spanned by ``a`` and ``p``; the minimal model has
    ``m_3(a, a, a) = ±p`` from the Massey product.
    """
    A = AssociativeData(
        (("a", 1), ("u", 1), ("b", 2), ("p", 2), ("v", 2), ("w", 3)),
        product={("a", "a"): {"b": 1}, ("a", "u"): {"p": 1}},
        differential={"u": {"b": 1}, "v": {"w": 1}},
    )
    return from_leibniz_pair(_NO_LIE, A, bound=bound)


def small_complex(bound=2):
    """Four-dimensional open complex ``a -> b`` plus cocycles ``s``, ``t``."""
    return OchaStructure.from_tables(
        open=(("a", 0), ("s", 0), ("b", 1), ("t", 1)),
        n={(0, 1): {("a",): {"b": 1}}},
        bound=bound,
    )


def frobenius_pair(bound=3):
    """
    Cyclic OCHA over the dual numbers with the trace pairing.

    Closed letters ``c``, ``d`` of degree -2 are paired by ``ω_c(c, d) = 1``
    and ``n_{1,0}(c) = x``; ``ω_o`` pairs ``e`` with ``x``.

    Returns
    -------
    S : OchaStructure
    W : SymplecticPair
    """
    S = dual_numbers(bound)
    S = OchaStructure.from_tables(
        closed=(("c", -2), ("d", -2)),
        open=S.open.basis,
        n={(0, 2): S.family.table("open", 0, 2), (1, 0): {("c",): {"x": 1}}},
        bound=bound,
    )
    W = SymplecticPair(S.space, {("c", "d"): 1}, 4, {("e", "x"): 1}, 2)
    return S, W


def generic_pairing(S):
    """Non-invariant pairing on :func:`frobenius_pair`'s structure."""
    return SymplecticPair(S.space, {("c", "d"): 1}, 4, {("e", "x"): 1, ("x", "x"): 1}, 2)


FIXTURES = {
    "dual_numbers": dual_numbers,
    "corrupted_dual_numbers": corrupted_dual_numbers,
    "solvable_lie": solvable_lie,
    "abelian_complex": abelian_complex,
    "exact_square_lie": exact_square_lie,
    "scaling_lie": scaling_lie,
    "corrupted_scaling_lie": corrupted_scaling_lie,
    "obstructed_lie": obstructed_lie,
    "leibniz_pair": leibniz_pair,
    "inner_derivation_pair": inner_derivation_pair,
    "curved_open_sector": curved_open_sector,
    "massey_algebra": massey_algebra,
    "small_complex": small_complex,
}


def write_fixture(name, path, order=None, elements=None, **kwargs):
    """
    Write a bundled fixture as a structure document.

    Parameters
    ----------
    name : str
        Key of :data:`FIXTURES`, or ``"frobenius_pair"``.
    order : int, optional
        Stored as ``flags.order``.
    elements : dict, optional
        Named formal elements to embed.
    """
    pairing = None
    if name == "frobenius_pair":
        S, pairing = frobenius_pair(**kwargs)
    else:
        S = FIXTURES[name](**kwargs)
    flags = {"bound": S.bound}
    if order is not None:
        flags["order"] = order
    doc = StructureDocument(S, flags, pairing=pairing, elements=dict(elements or {}))
    logger.debug("writing fixture %s to %s", name, path)
    return write_document(doc, path)
