#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Hodge Decomposition
===================

Contraction data ``(ι, π, h)`` of an OCHA onto the cohomology of
``d = l_1 + n_{{0,1}}``, one splitting per sector, together with the
minimality and linear-contractibility predicates.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["Contraction", "hodge_decompose", "check_minimal", "check_linear_contractible"]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging

from ..core.graded import OCSpace
from ..report import Report
from ..structures.cohomology import check_contraction, structure_splittings
from ..trees.represent import Decoration

logger = logging.getLogger(__name__)


def _negated(func):
    def apply(vector):
        return {k: -v for k, v in func(vector).items()}

    return apply


class Contraction:
    """
    ``ι: H̄ -> H``, ``π: H -> H̄`` and ``h: H -> H`` for both sectors.

    Parameters
    ----------
    structure : OchaStructure
        The big structure ``H``.
    closed, open : ComplexSplitting
        Splittings of ``(Hc, l_1)`` and ``(Ho, n_{0,1})``.
    """

    def __init__(self, structure, closed, open):
        self.structure = structure
        self.closed = closed
        self.open = open
        self.small = OCSpace(closed.cohomology_space, open.cohomology_space)

    def splitting(self, sector):
        return self.closed if sector == "closed" else self.open

    def iota(self, sector, vector):
        return self.splitting(sector).include(vector)

    def pi(self, sector, vector):
        return self.splitting(sector).project(vector)

    def h(self, sector, vector):
        return self.splitting(sector).homotopy(vector)

    @property
    def leaf(self):
        return Decoration(self.closed.include, self.open.include, 0)

    @property
    def edge(self):
        """Internal edges carry ``-h``."""
        return Decoration(_negated(self.closed.homotopy), _negated(self.open.homotopy), -1)

    @property
    def root_pi(self):
        return Decoration(self.closed.project, self.open.project, 0)

    @property
    def root_h(self):
        return self.edge

    def is_trivial(self):
        """``h = 0``: the structure is already minimal."""
        return not any(self.closed.h.values()) and not any(self.open.h.values())

    def check(self):
        """All contraction identities, side conditions included."""
        report = Report("check_contraction")
        report.extend(check_contraction(self.closed), prefix="closed:")
        report.extend(check_contraction(self.open), prefix="open:")
        return report.finish()

    def __repr__(self):
        return f"Contraction(closed={self.closed.betti()}, open={self.open.betti()})"


def hodge_decompose(S, pivot="lowest"):
    """
    Contraction of ``(H, l_1 + n_{0,1})`` onto its cohomology.

    Raises
    ------
    DifferentialError
        If ``l_1`` or ``n_{0,1}`` does not square to zero.
    """
    closed, opened = structure_splittings(S, pivot)
    contraction = Contraction(S, closed, opened)
    logger.info("hodge decomposition: %r", contraction)
    return contraction


def check_minimal(S):
    """``l_1 = 0`` and ``n_{0,1} = 0``."""
    return S.is_minimal()


def check_linear_contractible(S):
    """
    Only ``l_1`` and ``n_{0,1}`` are nonzero and the cohomology vanishes.
    """
    for key in S.family:
        if key not in (("closed", 1, 0), ("open", 0, 1)):
            return False
    closed, opened = structure_splittings(S)
    return not closed.cohomology_space.dimension and not opened.cohomology_space.dimension
