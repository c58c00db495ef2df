#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Structure Checkers
==================

Direct evaluation of the defining relations of A∞-algebras, L∞-algebras,
sh-modules, strong homotopy derivations and OCHAs on every basis tuple up to
the requested arity, plus the coalgebra-level check that the lifted family
squares to zero. Both routes report violations on the same
``(sector, n, m, inputs)`` cells.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "check_a_infinity",
    "check_l_infinity",
    "check_ocha",
    "check_sh_module",
    "check_sh_derivation",
    "check_codifferential",
    "relation_cells",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging

from ..coalgebra.lifts import gerstenhaber_bracket, lift_coderivation, square_as_corollas
from ..coalgebra.words import basis_words
from ..core.graded import add_scaled
from ..core.permutations import reorder_sign, unshuffle_splits
from ..core.scalars import parity_sign
from ..errors import DegreeError, SectorError
from ..report import Report

logger = logging.getLogger(__name__)

_CLOSED_KINDS = {"linf", "square:closed", "morphism:closed"}


def relation_cells(report):
    """Violated cells as ``(sector, n, m, inputs)``, independent of the route."""
    cells = set()
    for v in report.violations:
        if v.kind.startswith("fact:"):
            continue
        sector = "closed" if v.kind in _CLOSED_KINDS else "open"
        cells.add((sector, v.n, v.m, v.inputs))
    return cells


def _closed_relation(outer, inner, word, degrees):
    """``sum eps outer_{1+l}(inner_k(c_sigma), c_rest)`` on one closed word."""
    n = len(word)
    out = {}
    for k in range(0 if inner.weak else 1, n + 1):
        for chosen, rest in unshuffle_splits(n, (k, n - k)):
            value = inner.value("closed", tuple(word[i] for i in chosen), ())
            if not value:
                continue
            eps = reorder_sign(chosen + rest, degrees)
            rest_letters = tuple(word[i] for i in rest)
            for letter, coef in value.items():
                image = outer.value("closed", (letter,) + rest_letters, ())
                add_scaled(out, image, coef * eps)
    return out


def _open_relation(outer, inner, closed, opens, include_l=True, open_inner=None):
    """
    Residual of the open relation on ``(c_1..c_n; o_1..o_m)``.

    ``inner`` is a degree +1 structure family inserted into ``outer``;
    ``open_inner`` optionally restricts the inner ``n_{r,s}`` arities.
    """
    n, m = len(closed), len(opens)
    space = inner.source
    cdeg = [space.closed.degree(c) for c in closed]
    odeg = [space.open.degree(o) for o in opens]
    out = {}
    if include_l:
        for k in range(0 if inner.weak else 1, n + 1):
            for chosen, rest in unshuffle_splits(n, (k, n - k)):
                value = inner.value("closed", tuple(closed[i] for i in chosen), ())
                if not value:
                    continue
                eps = reorder_sign(chosen + rest, cdeg)
                rest_letters = tuple(closed[i] for i in rest)
                for letter, coef in value.items():
                    image = outer.value("open", (letter,) + rest_letters, opens)
                    add_scaled(out, image, coef * eps)
    for r in range(n + 1):
        for kept, used in unshuffle_splits(n, (n - r, r)):
            eps = reorder_sign(kept + used, cdeg)
            kept_letters = tuple(closed[i] for i in kept)
            used_letters = tuple(closed[i] for i in used)
            deg_kept = sum(cdeg[i] for i in kept)
            deg_used = sum(cdeg[i] for i in used)
            for s in range(m + 1):
                if r == 0 and s == 0 and not inner.weak:
                    continue
                if open_inner is not None and (r, s) not in open_inner:
                    continue
                for i in range(m - s + 1):
                    value = inner.value("open", used_letters, opens[i : i + s])
                    if not value:
                        continue
                    pre = sum(odeg[:i])
                    sign = eps * parity_sign(deg_kept + pre + pre * deg_used)
                    for letter, coef in value.items():
                        image = outer.value(
                            "open", kept_letters, opens[:i] + (letter,) + opens[i + s :]
                        )
                        add_scaled(out, image, coef * sign)
    return out


def check_l_infinity(S, n_max=None):
    """
    L∞ relations on every canonical closed word of length ``<= n_max``.

    Returns
    -------
    Report
        Violations of kind ``"linf"`` at ``(n, 0)``.
    """
    n_max = S.bound if n_max is None else n_max
    report = Report(f"check_l_infinity(n_max={n_max})", {"n_max": n_max, "m_max": 0})
    space = S.space
    for n in range(0 if S.weak else 1, n_max + 1):
        if n and not space.closed.dimension:
            continue
        for word, _ in basis_words(space, n, 0):
            degrees = [space.closed.degree(c) for c in word]
            residual = _closed_relation(S.family, S.family, word, degrees)
            if residual:
                report.add("linf", n, 0, word, residual)
    return report.finish()


def check_a_infinity(S, n_max=None):
    """
    A∞ relations ``sum (-1)^{o_1+...+o_{i-1}} m_k(.., m_l(..), ..) = 0``.

    Raises
    ------
    SectorError
        If the structure has a closed sector.
    """
    if S.closed.dimension:
        raise SectorError("check_a_infinity needs Hc = 0")
    n_max = S.bound if n_max is None else n_max
    report = Report(f"check_a_infinity(n_max={n_max})", {"n_max": 0, "m_max": n_max})
    for m in range(0 if S.weak else 1, n_max + 1):
        for _, opens in basis_words(S.space, 0, m):
            residual = _open_relation(S.family, S.family, (), opens, include_l=False)
            if residual:
                report.add("ainf", 0, m, opens, residual)
    return report.finish()


def check_ocha(S, n_max=None, m_max=None):
    """
    Both sums of the open-closed relation for ``n <= n_max``, ``m <= m_max``
    (``(n, m) != (0, 0)`` unless weak), together with the L∞ relations on the
    closed sector.
    """
    n_max = S.bound if n_max is None else n_max
    m_max = S.bound if m_max is None else m_max
    report = Report(f"check_ocha(n_max={n_max}, m_max={m_max})", {"n_max": n_max, "m_max": m_max})
    report.extend(check_l_infinity(S, n_max))
    space = S.space
    if space.open.dimension:
        for n in range(0, n_max + 1):
            if n and not space.closed.dimension:
                continue
            for m in range(0, m_max + 1):
                if n + m == 0 and not S.weak:
                    continue
                for closed, opens in basis_words(space, n, m):
                    residual = _open_relation(S.family, S.family, closed, opens)
                    if residual:
                        report.add("ocha", n, m, closed + opens, residual)
    return report.finish()


def _module_relation(family, closed, o):
    n = len(closed)
    space = family.source
    cdeg = [space.closed.degree(c) for c in closed]
    out = {}
    for k in range(0 if family.weak else 1, n + 1):
        for chosen, rest in unshuffle_splits(n, (k, n - k)):
            inner = family.value("closed", tuple(closed[i] for i in chosen), ())
            eps = reorder_sign(chosen + rest, cdeg)
            for letter, coef in inner.items():
                outer = family.value("open", (letter,) + tuple(closed[i] for i in rest), (o,))
                add_scaled(out, outer, coef * eps)
    for p in range(n + 1):
        for first, second in unshuffle_splits(n, (p, n - p)):
            eps = reorder_sign(first + second, cdeg)
            sign = eps * parity_sign(sum(cdeg[i] for i in first))
            inner = family.value("open", tuple(closed[i] for i in second), (o,))
            for letter, coef in inner.items():
                outer = family.value("open", tuple(closed[i] for i in first), (letter,))
                add_scaled(out, outer, coef * sign)
    return out


def check_sh_module(S, n_max=None):
    """
    sh-module relations of ``{l_k}`` acting through ``{k_{p+1} = n_{p,1}}``.

    The result is cross-checked against the ``m = 1`` slice of
    :func:`check_ocha` on the structure restricted to ``{l_k} ∪ {n_{p,1}}``;
    the fact ``agrees_with_ocha_slice`` records the comparison.
    """
    n_max = S.bound - 1 if n_max is None else n_max
    module = S.restricted(lambda k: k[0] == "closed" or k[2] == 1)
    report = Report(f"check_sh_module(n_max={n_max})", {"n_max": n_max, "m_max": 1})
    space = S.space
    for n in range(0, n_max + 1):
        if n and not space.closed.dimension:
            continue
        for closed, opens in basis_words(space, n, 1):
            residual = _module_relation(module.family, closed, opens[0])
            if residual:
                report.add("module", n, 1, closed + opens, residual)
    slice_cells = set()
    for n in range(0, n_max + 1):
        if n and not space.closed.dimension:
            continue
        for closed, opens in basis_words(space, n, 1):
            if _open_relation(module.family, module.family, closed, opens):
                slice_cells.add((n, 1, closed + opens))
    report.fact("agrees_with_ocha_slice", slice_cells == report.cells())
    return report.finish()


def _derivation_residual(theta, m_family, opens):
    """``sum (-1)^{o_1+..+o_i} [theta(.., m(..), ..) + m(.., theta(..), ..)]``."""
    space = m_family.source
    odeg = [space.open.degree(o) for o in opens]
    total = len(opens)
    out = {}
    for outer_fam, inner_fam in ((theta, m_family), (m_family, theta)):
        for s in range(0 if inner_fam.weak else 1, total + 1):
            for i in range(total - s + 1):
                inner = inner_fam.value("open", (), opens[i : i + s])
                if not inner:
                    continue
                sign = parity_sign(inner_fam.degree * sum(odeg[:i]))
                for letter, coef in inner.items():
                    outer = outer_fam.value("open", (), opens[:i] + (letter,) + opens[i + s :])
                    add_scaled(out, outer, coef * sign)
    return out


def check_sh_derivation(theta, m_family, q_max=None):
    """
    Strong homotopy derivation relations of ``theta`` for ``(A, 𝔪)``.

    The bracket ``[𝔪, θ]`` computed by :func:`gerstenhaber_bracket` must
    vanish on exactly the same cells; the fact ``bracket_agrees`` records it.

    Raises
    ------
    DegreeError
        If ``theta`` is not of degree +1 or has a constant term.
    """
    if hasattr(m_family, "family"):
        m_family = m_family.family
    if theta.degree != 1:
        raise DegreeError("sh derivations have degree +1")
    if theta.get_map("open", 0, 0) is not None:
        raise DegreeError("sh derivations have no constant term")
    q_max = theta.bound if q_max is None else q_max
    report = Report(f"check_sh_derivation(q_max={q_max})", {"n_max": 0, "m_max": q_max})
    for q in range(1, q_max + 1):
        for _, opens in basis_words(m_family.source, 0, q):
            residual = _derivation_residual(theta, m_family, opens)
            if residual:
                report.add("shder", 0, q, opens, residual)
    bracket = gerstenhaber_bracket(m_family, theta, q_max)
    bracket_cells = set()
    for (sector, p, q), fmap in bracket.items():
        for key in fmap.table:
            bracket_cells.add((p, q, key))
    report.fact("bracket_agrees", bracket_cells == report.cells())
    return report.finish()


def check_codifferential(S, bound=None):
    """
    ``(𝔩 + 𝔫)^2 = 0`` read off the corollas of the squared coderivation.
    """
    bound = S.bound if bound is None else bound
    D = lift_coderivation(S.family, bound)
    square = square_as_corollas(D, bound)
    report = Report(f"check_codifferential(bound={bound})", {"n_max": bound, "m_max": bound})
    for (sector, p, q), fmap in square.items():
        for key, vector in sorted(fmap.table.items()):
            report.add(f"square:{sector}", p, q, key, vector)
    return report.finish()
