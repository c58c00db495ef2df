#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Cohomology and Hodge Splittings
===============================

Degree-wise splitting ``C^k = B^k ⊕ H^k ⊕ Y^k`` of a finite complex by exact
Gaussian elimination, where ``B`` are the boundaries, ``H`` the chosen
cohomology representatives and ``Y`` a complement of the cycles. The
splitting yields the contraction data ``(ι, π, h)`` with
``d h + h d = 1 - ι π``.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "ComplexSplitting",
    "cohomology",
    "check_contraction",
    "structure_splittings",
    "linear_table",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging

from ..core.graded import GradedSpace, accumulate, add_scaled
from ..core.linalg import extend_basis, inverse, kernel_basis
from ..core.multimap import MultiMap
from ..core.scalars import ONE, QQ
from ..errors import DegreeError, DifferentialError
from ..report import Report

logger = logging.getLogger(__name__)

_TAGS = {"closed": "c", "open": "o"}


def linear_table(differential):
    """``{letter: vector}`` from a unary MultiMap or a plain table."""
    if differential is None:
        return {}
    if isinstance(differential, MultiMap):
        return {key[0]: dict(vec) for key, vec in differential.table.items()}
    out = {}
    for key, vec in differential.items():
        name = key[0] if isinstance(key, tuple) else key
        if vec:
            out[name] = dict(vec)
    return out


def _apply(table, vec):
    out = {}
    for name, coef in vec.items():
        add_scaled(out, table.get(name, {}), coef)
    return out


def _to_list(vec, names):
    return [QQ(0) + vec.get(n, 0) for n in names]


def _to_dict(values, names):
    out = {}
    for name, coef in zip(names, values):
        accumulate(out, name, coef)
    return out


class ComplexSplitting:
    """
    Hodge-type splitting of a finite complex ``(C, d)``.

    Parameters
    ----------
    space : GradedSpace
    d : dict
        ``letter -> vector``; every output has degree one higher.
    pivot : {"lowest", "highest"}
        Whether Gaussian elimination favours early or late basis letters.
        The two choices give different but equally valid splittings.

    Attributes
    ----------
    representatives : dict
        Cohomology representative name to its vector in ``C``.
    cohomology_space : GradedSpace
        ``H(C, d)`` with the representative names as basis.
    exact, coexact : list of (str, int, dict)
        Named bases of ``B`` and ``Y``; ``exact[i] = d(coexact[i])``.
    """

    def __init__(self, space, d=None, pivot="lowest"):
        if pivot not in ("lowest", "highest"):
            raise ValueError(f"unknown pivot rule {pivot!r}")
        self.space = space
        self.d = linear_table(d)
        self.pivot = pivot
        self._validate()
        self._split()

    def _names(self, degree):
        names = list(self.space.names_in_degree(degree))
        return names[::-1] if self.pivot == "highest" else names

    def _validate(self):
        for name, vec in self.d.items():
            expected = self.space.degree(name) + 1
            for out in vec:
                if self.space.degree(out) != expected:
                    raise DegreeError(f"d({name}) has a component {out} of the wrong degree")
        for name in self.space.names:
            square = self.differential(self.differential({name: ONE}))
            if square:
                raise DifferentialError(f"d^2({name}) = {square} is not zero")

    def _split(self):
        tag = _TAGS.get(self.space.sector, "")
        cycles, coexact, exact = {}, {}, {}
        for k in self.space.degrees():
            cols, rows = self._names(k), self._names(k + 1)
            matrix = [[QQ(0) + self.d.get(c, {}).get(r, 0) for c in cols] for r in rows]
            cycles[k] = kernel_basis(matrix, len(cols))
            standard = [[QQ(1) if i == j else QQ(0) for i in range(len(cols))] for j in range(len(cols))]
            coexact[k] = [_to_dict(y, cols) for y in extend_basis(cycles[k], standard, len(cols))]
            exact[k + 1] = [self.differential(y) for y in coexact[k]]

        self.representatives = {}
        self.exact, self.coexact = [], []
        self.pi, self.h, self._coords = {}, {}, {}
        basis = []
        for k in self.space.degrees():
            cols = self._names(k)
            B = [_to_list(b, cols) for b in exact.get(k, [])]
            H = extend_basis(B, cycles[k], len(cols))
            Y = [_to_list(y, cols) for y in coexact[k]]
            b_names = [f"B{tag}{k}_{i}" for i in range(len(B))]
            y_names = [f"Y{tag}{k}_{i}" for i in range(len(Y))]
            h_names = []
            for i, vec in enumerate(H):
                rep = _to_dict(vec, cols)
                name = f"H{tag}{k}_{i}"
                if len(rep) == 1 and next(iter(rep.values())) == 1:
                    name = next(iter(rep))
                h_names.append(name)
                self.representatives[name] = rep
                basis.append((name, k))
            self.exact += [(n, k, _to_dict(v, cols)) for n, v in zip(b_names, B)]
            self.coexact += [(n, k, _to_dict(v, cols)) for n, v in zip(y_names, Y)]
            columns = B + H + Y
            if len(columns) != len(cols):
                raise DifferentialError(f"degree {k}: splitting has {len(columns)} vectors for {len(cols)} letters")
            inv = inverse(columns)
            all_names = b_names + h_names + y_names
            preimages = coexact.get(k - 1, [])
            for j, letter in enumerate(cols):
                coords = _to_dict([row[j] for row in inv], all_names)
                self._coords[letter] = coords
                self.pi[letter] = {n: c for n, c in coords.items() if n in h_names}
                hvec = {}
                for i, bname in enumerate(b_names):
                    if bname in coords:
                        add_scaled(hvec, preimages[i], coords[bname])
                self.h[letter] = hvec
        self.cohomology_space = GradedSpace(self.space.sector, tuple(basis))
        logger.debug("%s cohomology: %s", self.space.sector, self.cohomology_space.basis)

    def differential(self, vec):
        return _apply(self.d, vec)

    def homotopy(self, vec):
        return _apply(self.h, vec)

    def project(self, vec):
        return _apply(self.pi, vec)

    def include(self, vec):
        """``ι`` on a vector over the representative names."""
        return _apply(self.representatives, vec)

    def coordinates(self, vec):
        """Coordinates of ``vec`` in the basis ``B ∪ H ∪ Y`` (by name)."""
        return _apply(self._coords, vec)

    def contractible_part(self):
        """Named basis of ``B ⊕ Y`` as ``(name, degree, vector)`` triples."""
        return self.exact + self.coexact

    def betti(self):
        """Dimension of the cohomology per degree."""
        return {k: len(self.cohomology_space.names_in_degree(k)) for k in self.cohomology_space.degrees()}

    def __repr__(self):
        return f"ComplexSplitting({self.space.sector}, betti={self.betti()}, pivot={self.pivot})"


def cohomology(space, differential=None, pivot="lowest"):
    """
    Cohomology representatives with inclusion, projection and homotopy.

    Raises
    ------
    DifferentialError
        If the differential does not square to zero.

    Examples
    --------
    >>> C = GradedSpace("plain", (("a", 0), ("b", 1)))
    >>> cohomology(C, {"a": {"b": 1}}).cohomology_space.dimension
    0
    """
    return ComplexSplitting(space, differential, pivot)


def check_contraction(splitting):
    """
    Verify ``dh + hd = 1 - ιπ``, ``πι = 1``, ``h² = 0``, ``hι = 0`` and ``πh = 0``.
    """
    report = Report(f"check_contraction({splitting.space.sector})")
    d, h = splitting.differential, splitting.homotopy
    for name in splitting.space.names:
        deg = splitting.space.degree(name)
        unit = {name: ONE}
        residual = d(h(unit))
        add_scaled(residual, h(d(unit)))
        add_scaled(residual, unit, -1)
        add_scaled(residual, splitting.include(splitting.project(unit)))
        if residual:
            report.add("homotopy", deg, 0, (name,), residual)
        if h(h(unit)):
            report.add("h_squared", deg, 0, (name,), h(h(unit)))
        if splitting.project(h(unit)):
            report.add("pi_h", deg, 0, (name,), splitting.project(h(unit)))
    for rep in splitting.cohomology_space.names:
        deg = splitting.cohomology_space.degree(rep)
        vec = splitting.representatives[rep]
        back = splitting.project(vec)
        add_scaled(back, {rep: ONE}, -1)
        if back:
            report.add("pi_iota", deg, 0, (rep,), back)
        if splitting.homotopy(vec):
            report.add("h_iota", deg, 0, (rep,), splitting.homotopy(vec))
    return report.finish()


def structure_splittings(S, pivot="lowest"):
    """Splittings of ``(Hc, l_1)`` and ``(Ho, n_{0,1})``."""
    closed = ComplexSplitting(S.closed, S.l(1), pivot)
    opened = ComplexSplitting(S.open, S.n(0, 1), pivot)
    return closed, opened
