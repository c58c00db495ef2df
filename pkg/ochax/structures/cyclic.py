#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Cyclic OCHAs
============

Symplectic pairings on ``Hc`` and ``Ho``, the scalar tensors
``V_{{k+1}} = ω_c(l_k ⊗ 1)`` and ``V_{{p,q+1}} = ω_o(n_{{p,q}} ⊗ 1)``, their
symmetry checks and the dual maps ``r_{{p-1,q+1}}: Hc^{{p-1}} ⊗ Ho^{{q+1}} -> Hc``.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "SymplecticPair",
    "CyclicTensor",
    "cyclic_tensors",
    "check_cyclicity",
    "dualize_to_r",
    "check_r_duality",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging
from dataclasses import dataclass, field

from ..coalgebra.words import basis_words
from ..core.family import MapFamily
from ..core.linalg import inverse
from ..core.scalars import QQ, parity_sign, to_scalar
from ..errors import DegreeError, OchaError, SectorError
from ..report import Report

logger = logging.getLogger(__name__)


def _complete_pairing(space, table, degree, label):
    full = {}
    for (x, y), value in table.items():
        value = to_scalar(value)
        if value == 0:
            continue
        if space.degree(x) + space.degree(y) + degree != 0:
            raise DegreeError(f"{label}({x}, {y}) pairs degrees that do not sum to {-degree}")
        mirrored = -parity_sign(space.degree(x) * space.degree(y)) * value
        for key, val in (((x, y), value), ((y, x), mirrored)):
            if key in full and full[key] != val:
                raise OchaError(f"{label} is not skew-symmetric at {key}")
            full[key] = val
    return full


def _check_nondegenerate(space, table, degree, label):
    for k in space.degrees():
        rows = space.names_in_degree(k)
        cols = space.names_in_degree(-degree - k)
        if len(rows) != len(cols):
            raise OchaError(f"{label} is degenerate between degrees {k} and {-degree - k}")
        columns = [[QQ(0) + table.get((x, y), 0) for x in rows] for y in cols]
        try:
            inverse(columns)
        except ValueError:
            raise OchaError(f"{label} is degenerate between degrees {k} and {-degree - k}")


class SymplecticPair:
    """
    Non-degenerate skew-symmetric pairings ``ω_c`` on ``Hc`` and ``ω_o`` on ``Ho``.

    Tables map letter pairs to scalars; the mirrored entry is filled in by
    skew-symmetry ``ω(y, x) = -(-1)^{xy} ω(x, y)``.

    Raises
    ------
    DegreeError
        If an entry pairs letters whose degrees do not add up to ``-|ω|``.
    OchaError
        If a pairing is not skew-symmetric or is degenerate.
    """

    def __init__(self, space, omega_c=None, degree_c=0, omega_o=None, degree_o=0):
        self.space = space
        self.degree_c = int(degree_c)
        self.degree_o = int(degree_o)
        self.omega_c = _complete_pairing(space.closed, omega_c or {}, self.degree_c, "ω_c")
        self.omega_o = _complete_pairing(space.open, omega_o or {}, self.degree_o, "ω_o")
        _check_nondegenerate(space.closed, self.omega_c, self.degree_c, "ω_c")
        _check_nondegenerate(space.open, self.omega_o, self.degree_o, "ω_o")

    def pair(self, sector, x, y):
        """Pairing of two vectors (dicts) of the given sector."""
        table = self.omega_c if sector == "closed" else self.omega_o
        total = QQ(0)
        for a, ca in x.items():
            for b, cb in y.items():
                value = table.get((a, b))
                if value:
                    total += ca * cb * value
        return total

    def __repr__(self):
        return f"SymplecticPair(|ω_c|={self.degree_c}, |ω_o|={self.degree_o})"


@dataclass
class CyclicTensor:
    """
    Scalar-valued multilinear map on all ordered basis tuples.

    ``kind`` is ``"closed"`` for ``V_{k+1}`` (``p = k + 1``, ``q = 0``) and
    ``"mixed"`` for ``V_{p,q+1}``.
    """

    kind: str
    p: int
    q: int
    degree: int
    table: dict = field(default_factory=dict)

    @property
    def name(self):
        return f"V{self.p}" if self.kind == "closed" else f"V{self.p},{self.q}"

    def value(self, key):
        return self.table.get(tuple(key), QQ(0))

    def is_zero(self):
        return not self.table


def cyclic_tensors(S, W):
    """
    All ``V_{k+1}`` and ``V_{p,q+1}`` for arities within the bound of ``S``.

    Raises
    ------
    SectorError
        If ``W`` is defined on different spaces than ``S``.
    """
    if W.space != S.space:
        raise SectorError("symplectic pair and structure live on different spaces")
    closed, opened = S.closed.names, S.open.names
    tensors = []
    if closed:
        for k in range(1, S.bound + 1):
            table = {}
            for key in itertools.product(closed, repeat=k + 1):
                value = S.family.value("closed", key[:k], ())
                scalar = W.pair("closed", value, {key[k]: 1}) if value else 0
                if scalar:
                    table[key] = scalar
            tensors.append(CyclicTensor("closed", k + 1, 0, W.degree_c + 1, table))
    if opened:
        for total in range(1, S.bound + 1):
            for p in range(total + 1):
                q = total - p
                if p and not closed:
                    continue
                table = {}
                for cs in itertools.product(closed, repeat=p):
                    for os in itertools.product(opened, repeat=q + 1):
                        value = S.family.value("open", cs, os[:q])
                        scalar = W.pair("open", value, {os[q]: 1}) if value else 0
                        if scalar:
                            table[cs + os] = scalar
                tensors.append(CyclicTensor("mixed", p, q + 1, W.degree_o + 1, table))
    return tensors


def _transpositions(letters, degree_of, length):
    """Every tuple with each adjacent swap and its Koszul sign."""
    for key in itertools.product(letters, repeat=length):
        for i in range(len(key) - 1):
            swapped = key[:i] + (key[i + 1], key[i]) + key[i + 2 :]
            sign = parity_sign(degree_of(key[i]) * degree_of(key[i + 1]))
            yield key, swapped, sign


def check_cyclicity(tensors, S, W=None):
    """
    Full graded symmetry of ``V_{k+1}``, the cyclic identity of
    ``V_{p,q+1}`` in its open block, and closed-block symmetry of
    ``V_{p,q+1}``.
    """
    report = Report("check_cyclicity", {"n_max": S.bound, "m_max": S.bound})
    cdeg, odeg = S.closed.degree, S.open.degree
    for t in tensors:
        if t.kind == "closed":
            for key, swapped, sign in _transpositions(S.closed.names, cdeg, t.p):
                if t.value(swapped) != sign * t.value(key):
                    report.add("cyclic:symmetric", t.p, 0, key,
                               {"lhs": t.value(swapped), "rhs": sign * t.value(key)})
            continue
        for cs in itertools.product(S.closed.names, repeat=t.p):
            for os in itertools.product(S.open.names, repeat=t.q):
                rotated = os[1:] + os[:1]
                sign = parity_sign(odeg(os[0]) * sum(odeg(o) for o in os[1:]))
                lhs, rhs = t.value(cs + os), sign * t.value(cs + rotated)
                if lhs != rhs:
                    report.add("cyclic:rotation", t.p, t.q, cs + os, {"lhs": lhs, "rhs": rhs})
                for i in range(t.p - 1):
                    swapped = cs[:i] + (cs[i + 1], cs[i]) + cs[i + 2 :]
                    sign = parity_sign(cdeg(cs[i]) * cdeg(cs[i + 1]))
                    if t.value(swapped + os) != sign * t.value(cs + os):
                        report.add("cyclic:closed_block", t.p, t.q, cs + os,
                                   {"lhs": t.value(swapped + os), "rhs": sign * t.value(cs + os)})
    return report.finish()


def _transfer_sign(S, closed):
    """Koszul sign of moving ``c_1`` past ``c_2, ..., c_p``."""
    first = S.closed.degree(closed[0])
    return parity_sign(first * sum(S.closed.degree(c) for c in closed[1:]))


def dualize_to_r(S, W, tensors=None):
    """
    Maps ``r_{p-1,q+1}`` with ``ω_c(r(c_2..c_p; o), c_1) = ± V_{p,q+1}(c_1..c_p; o)``.

    The sign is that of moving ``c_1`` past ``c_2, ..., c_p``. The duality
    is verified on every tuple after solving.

    Raises
    ------
    OchaError
        If ``ω_c`` is degenerate in a degree where ``r`` needs a value, or
        the duality cannot be met.
    """
    tensors = cyclic_tensors(S, W) if tensors is None else tensors
    closed = S.closed
    degree = 1 + W.degree_o - W.degree_c
    maps = {}
    for t in tensors:
        if t.kind != "mixed" or t.p == 0:
            continue
        table = {}
        for rest, opens in basis_words(S.space, t.p - 1, t.q):
            rhs = {}
            for c1 in closed.names:
                key = (c1,) + rest + opens
                value = t.value(key)
                if value:
                    rhs[c1] = value * _transfer_sign(S, (c1,) + rest)
            if not rhs:
                continue
            vector = {}
            for k in sorted({closed.degree(c) for c in rhs}):
                targets = closed.names_in_degree(-W.degree_c - k)
                partners = closed.names_in_degree(k)
                columns = [[QQ(0) + W.omega_c.get((a, c1), 0) for c1 in partners] for a in targets]
                try:
                    inv = inverse(columns)
                except ValueError:
                    raise OchaError(f"ω_c is degenerate in degree {-W.degree_c - k}")
                b = [QQ(0) + rhs.get(c1, 0) for c1 in partners]
                for a, row in zip(targets, inv):
                    coef = sum((x * y for x, y in zip(row, b)), QQ(0))
                    if coef:
                        vector[a] = coef
            table[rest + opens] = vector
        maps[("closed", t.p - 1, t.q)] = table
    family = MapFamily(S.space, S.space, degree, maps, S.bound, prefix=("r", "r"))
    report = check_r_duality(family, tensors, S, W)
    if not report.passed:
        raise OchaError(f"r maps fail the duality on {len(report.violations)} tuples")
    return family


def check_r_duality(r, tensors, S, W):
    """``ω_c(r(c_2..c_p; o), c_1) = ± V_{p,q+1}(c_1..c_p; o)`` on all tuples."""
    report = Report("check_r_duality")
    for t in tensors:
        if t.kind != "mixed" or t.p == 0:
            continue
        for cs in itertools.product(S.closed.names, repeat=t.p):
            for os in itertools.product(S.open.names, repeat=t.q):
                value = r.value("closed", cs[1:], os)
                lhs = W.pair("closed", value, {cs[0]: 1}) if value else QQ(0)
                rhs = _transfer_sign(S, cs) * t.value(cs + os)
                if lhs != rhs:
                    report.add("r_duality", t.p, t.q, cs + os, {"lhs": lhs, "rhs": rhs})
    return report.finish()
