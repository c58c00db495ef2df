#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Twisting
========

Twisting an L∞-algebra or an OCHA by a degree-0 formal element, and the
induced deformations of the open A∞-sector.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "trusted_bound",
    "twist_l_infinity",
    "twist_ocha",
    "deform_open_sector",
    "first_order_derivation",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging

from ..coalgebra.lifts import gerstenhaber_bracket
from ..coalgebra.words import basis_words
from ..core.family import MapFamily
from ..core.graded import GradedSpace, OCSpace, add_scaled
from ..core.scalars import to_scalar
from ..core.series import smul
from ..errors import AxiomError, OchaError
from ..report import Report
from ..structures.checks import check_a_infinity, check_l_infinity, check_ocha, check_sh_derivation
from ..structures.morphisms import AdjointMap
from ..structures.ocha import OchaStructure
from .mc import _check_degree_zero, mc_residual, ordered_power, symmetric_power

logger = logging.getLogger(__name__)


def trusted_bound(S, order):
    """
    Arity up to which a twist by an order-``N`` element can be verified.

    If no composite of two nonzero members reaches beyond the bound, the
    relations of ``S`` hold in every arity and so does the twist;
    otherwise only arities ``<= bound - (N - 1)`` are backed by checked
    relations.
    """
    top = max((p + q for _, p, q in S.family), default=0)
    if 2 * top - 1 <= S.bound:
        return S.bound
    return max(S.bound - (order - 1), 0)


def _splits(total, parts):
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        ends = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(ends, ends[1:]))


def _twisted_closed(S, closed, order):
    maps = {}
    space = OCSpace(S.closed, GradedSpace("open"))
    for l in range(0, S.bound + 1):
        table = {}
        for key, _ in basis_words(space, l, 0):
            value = {}
            for n in range(0, min(order - 1, S.bound - l) + 1):
                if n + l == 0 and not S.weak:
                    continue
                for ckey, coef in symmetric_power(S.closed, closed.coeffs, n):
                    add_scaled(value, S.family.value("closed", ckey + key, ()), coef)
            if value:
                table[key] = value
        if table:
            maps[("closed", l, 0)] = table
    return maps


def _twisted_open(S, closed, opened, order):
    maps = {}
    ovec = opened.coeffs if opened is not None else {}
    for total in range(0, S.bound + 1):
        for p in range(total + 1):
            q = total - p
            table = {}
            for ckeys, okeys in basis_words(S.space, p, q):
                value = {}
                for n in range(0, min(order - 1, S.bound - total) + 1):
                    top = min(order - 1 - n, S.bound - total - n) if ovec else 0
                    for M in range(0, top + 1):
                        if n + p == 0 and M + q == 0 and not S.weak:
                            continue
                        for cpow, ccoef in symmetric_power(S.closed, closed.coeffs, n):
                            for opow, ocoef in ordered_power(ovec, M):
                                coef = smul(ocoef, ccoef)
                                for split in _splits(M, q + 1):
                                    args, pos = list(opow[: split[0]]), split[0]
                                    for o, m in zip(okeys, split[1:]):
                                        args.append(o)
                                        args.extend(opow[pos : pos + m])
                                        pos += m
                                    add_scaled(value, S.family.value("open", cpow + ckeys,
                                                                     tuple(args)), coef)
                if value:
                    table[ckeys + okeys] = value
            if table:
                maps[("open", p, q)] = table
    return maps


def _verified(T, checker, S, order, what):
    bound = trusted_bound(S, order)
    if bound < 1:
        logger.warning("%s: no arity is backed by checked relations", what)
        return T
    report = checker(T, bound)
    if not report.passed:
        raise OchaError(f"{what} fails its relations:\n{report.to_text()}")
    return T


def twist_l_infinity(S, closed, verify=True):
    """
    ``l'_l(c_1, ..., c_l) = Σ_n (1/n!) l_{n+l}(c̄^{⊗n}, c_1, ..., c_l)``.

    Returns a weak L∞-structure whose curvature ``l'_0`` is the MC
    residual of ``c̄``.

    Raises
    ------
    DegreeError
        If ``c̄`` is not of degree 0.
    """
    _check_degree_zero(closed)
    order = closed.order
    space = OCSpace(S.closed, GradedSpace("open"))
    family = MapFamily(space, space, 1, _twisted_closed(S, closed, order), bound=S.bound, weak=True)
    T = OchaStructure(space, family, S.bound)
    if verify:
        _verified(T, check_l_infinity, S, order, "twisted L∞-structure")
    return T


def twist_ocha(S, closed, opened=None, verify=True):
    """
    Weak OCHA twisted by ``(c̄, ō)``.

    ``n'_{p,q}`` inserts ``c̄^{⊗n}`` in front of the closed inputs with
    ``1/n!`` and ``ō`` in every interleaving ``ō^{m_0}, o_1, ō^{m_1}, ...``
    of the open inputs. The constants are ``l'_0 = 𝔩_*(c̄)`` and
    ``n'_{0,0} = 𝔫_*(c̄; ō)``.
    """
    _check_degree_zero(closed, opened)
    order = closed.order if opened is None else min(closed.order, opened.order)
    maps = _twisted_closed(S, closed, order)
    maps.update(_twisted_open(S, closed, opened, order))
    family = MapFamily(S.space, S.space, 1, maps, bound=S.bound, weak=True)
    T = OchaStructure(S.space, family, S.bound)
    if verify:
        _verified(T, lambda s, b: check_ocha(s, b, b), S, order, "twisted OCHA")
    return T


def deform_open_sector(S, closed, opened=None, verify=True):
    """
    The A∞-structure ``𝔪 + ρ(c̄)`` on ``Ho``.

    Without ``ō`` the members are ``Σ_p (1/p!) n_{p,q}(c̄^{⊗p}; -)`` and the
    result is weak when some ``n_{p,0}(c̄, ...)`` survives. With ``ō`` it is
    the open part of the twisted OCHA, strict because ``n'_{0,0}`` vanishes.

    Raises
    ------
    AxiomError
        If ``c̄`` (or ``(c̄, ō)``) is not a Maurer-Cartan element.
    """
    residual, open_residual = mc_residual(S, closed, opened)
    if not residual.is_zero():
        raise AxiomError("Maurer-Cartan", f"closed residual is nonzero: {residual}")
    if open_residual is not None and not open_residual.is_zero():
        raise AxiomError("Maurer-Cartan", f"open residual is nonzero: {open_residual}")
    order = closed.order if opened is None else min(closed.order, opened.order)
    maps = {k: t for k, t in _twisted_open(S, closed, opened, order).items() if k[1] == 0}
    space = OCSpace(GradedSpace("closed"), S.open)
    weak = ("open", 0, 0) in maps
    family = MapFamily(space, space, 1, maps, bound=S.bound, weak=weak)
    if weak:
        logger.warning("weak deformation produced: m_0 = %s", maps[("open", 0, 0)])
    T = OchaStructure(space, family, S.bound)
    if verify:
        _verified(T, check_a_infinity, S, order, "deformed A∞-structure")
    return T


def first_order_derivation(S, z, verify=True):
    """
    First-order deformation ``ρ(z) = {n_{1,q}(z; -)}_q`` of ``𝔪``.

    ``ρ(z)`` is a (weak, when ``n_{1,0}(z) != 0``) homotopy derivation; the
    report checks ``[𝔪, ρ(z)] = 0`` and, without constant term, the
    derivation relations.

    Returns
    -------
    family : MapFamily
    report : Report
    """
    vector = {n: to_scalar(v) for n, v in z.items() if to_scalar(v) != 0}
    degrees = {S.closed.degree(n) for n in vector}
    if degrees - {0}:
        raise OchaError(f"first-order deformations need a degree-0 closed element, got {degrees}")
    boundary = {}
    for name, coef in vector.items():
        add_scaled(boundary, S.family.value("closed", (name,), ()), coef)
    if boundary:
        raise OchaError(f"l_1(z) = {boundary} is not zero")
    adjoint = AdjointMap(S)
    theta = adjoint(vector, 0)
    report = Report("first_order_derivation", {"n_max": 0, "m_max": adjoint.bound})
    weak = theta.get_map("open", 0, 0) is not None
    report.facts["weak"] = weak
    if verify:
        bracket = gerstenhaber_bracket(adjoint.m_family, theta, adjoint.bound)
        for (_, p, q), fmap in bracket.items():
            for key, vec in sorted(fmap.table.items()):
                report.add("bracket", 0, q, key, vec)
        if not weak:
            report.extend(check_sh_derivation(theta, adjoint.m_family, adjoint.bound))
    return theta, report.finish()
