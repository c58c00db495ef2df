#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
OCHA Structures and Morphisms
=============================

An open-closed homotopy algebra on ``H = Hc + Ho`` is an L∞-structure
``{{l_k}}`` on ``Hc`` together with maps ``n_{{p,q}}: Hc^{{⊗p}} ⊗ Ho^{{⊗q}} -> Ho``,
all of degree +1. Setting ``Hc = 0`` leaves an A∞-algebra ``{{m_k = n_{{0,k}}}}``,
setting ``Ho = 0`` an L∞-algebra.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "OchaStructure",
    "OchaMorphism",
    "a_infinity",
    "l_infinity",
    "identity_morphism",
    "restrict_open",
    "restrict_closed",
    "direct_sum",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging

from ..core.family import MapFamily
from ..core.graded import GradedSpace, OCSpace
from ..core.scalars import ONE
from ..errors import DegreeError, SectorError

logger = logging.getLogger(__name__)


def _family_maps(l=None, n=None):
    maps = {}
    for k, table in (l or {}).items():
        maps[("closed", int(k), 0)] = table
    for (p, q), table in (n or {}).items():
        maps[("open", int(p), int(q))] = table
    return maps


class OchaStructure:
    """
    OCHA (or A∞ / L∞ as degenerate cases).

    Parameters
    ----------
    space : OCSpace
    family : MapFamily
        Degree-1 family; closed-output members take closed inputs only.
    bound : int, optional
        Arity bound ``B``; defaults to the family bound.

    Examples
    --------
    >>> A = GradedSpace("open", (("e", -1), ("x", -1)))
    >>> S = a_infinity(A, {2: {("e", "e"): {"e": 1}}})
    """

    def __init__(self, space, family, bound=None):
        if family.degree != 1:
            raise DegreeError(f"structure maps have degree +1, got {family.degree}")
        for (sector, p, q), fmap in family.items():
            if sector == "closed" and q:
                raise SectorError(f"{fmap.name}: closed outputs take no open inputs")
        self.space = space
        self.family = family
        self.weak = family.weak
        self.bound = family.bound if bound is None else int(bound)
        self.family.bound = self.bound

    @classmethod
    def from_tables(cls, closed=(), open=(), l=None, n=None, weak=False, bound=None):
        """
        Build from bases and raw tables.

        Parameters
        ----------
        closed, open : sequence of (str, int)
            Bases of ``Hc`` and ``Ho``.
        l : dict
            ``k -> table`` for ``l_k``.
        n : dict
            ``(p, q) -> table`` for ``n_{p,q}``.
        """
        space = OCSpace(GradedSpace("closed", tuple(closed)), GradedSpace("open", tuple(open)))
        family = MapFamily(space, space, 1, _family_maps(l, n), bound=bound, weak=weak)
        return cls(space, family, bound)

    @property
    def closed(self):
        return self.space.closed

    @property
    def open(self):
        return self.space.open

    @property
    def kind(self):
        if not self.closed.dimension:
            return "ainf"
        if not self.open.dimension:
            return "linf"
        return "ocha"

    def l(self, k):
        return self.family.get_map("closed", k, 0)

    def n(self, p, q):
        return self.family.get_map("open", p, q)

    def m(self, k):
        return self.n(0, k)

    def with_maps(self, l=None, n=None, weak=None, bound=None):
        """Copy with some members replaced; an empty table removes a member."""
        family = self.family.with_maps(
            _family_maps(l, n),
            weak=self.weak if weak is None else weak,
            bound=self.bound if bound is None else bound,
        )
        return OchaStructure(self.space, family, family.bound)

    def restricted(self, keep):
        return OchaStructure(self.space, self.family.restricted(keep), self.bound)

    def is_minimal(self):
        """``l_1 = 0`` and ``n_{0,1} = 0``."""
        return self.l(1) is None and self.n(0, 1) is None

    def __eq__(self, other):
        if not isinstance(other, OchaStructure):
            return NotImplemented
        return self.space == other.space and self.family == other.family

    def __repr__(self):
        return (
            f"OchaStructure(kind={self.kind}, dim=({self.closed.dimension},"
            f"{self.open.dimension}), bound={self.bound}, weak={self.weak}, "
            f"maps=[{', '.join(f.name for f in self.family.values())}])"
        )


def a_infinity(space, m=None, weak=False, bound=None):
    """A∞-algebra on an open-sector space from tables ``k -> m_k``."""
    if space.sector != "open":
        space = GradedSpace("open", space.basis)
    return OchaStructure.from_tables((), space.basis, n={(0, k): t for k, t in (m or {}).items()},
                                     weak=weak, bound=bound)


def l_infinity(space, l=None, weak=False, bound=None):
    """L∞-algebra on a closed-sector space from tables ``k -> l_k``."""
    if space.sector != "closed":
        space = GradedSpace("closed", space.basis)
    return OchaStructure.from_tables(space.basis, (), l=l, weak=weak, bound=bound)


class OchaMorphism:
    """
    (Weak) OCHA-morphism ``{f_k} ∪ {f_{k,l}}`` of degree 0.

    Closed components are keyed ``("closed", k, 0)``, open ones
    ``("open", k, l)``.
    """

    def __init__(self, source, target, family, bound=None):
        if family.degree != 0:
            raise DegreeError(f"morphism components have degree 0, got {family.degree}")
        if family.weak:
            constant = family.get_map("closed", 0, 0)
            if constant is not None:
                for vec in constant.table.values():
                    for letter in vec:
                        if target.closed.degree(letter) != 0:
                            raise DegreeError("f_0 must land in degree 0")
        self.source = source
        self.target = target
        self.family = family
        self.weak = family.weak
        self.bound = family.bound if bound is None else int(bound)
        self.family.bound = self.bound

    @classmethod
    def from_tables(cls, source, target, f_closed=None, f_open=None, weak=False, bound=None):
        maps = {}
        for k, table in (f_closed or {}).items():
            maps[("closed", int(k), 0)] = table
        for (p, q), table in (f_open or {}).items():
            maps[("open", int(p), int(q))] = table
        family = MapFamily(source.space, target.space, 0, maps, bound=bound, weak=weak,
                           prefix=("f", "f"))
        return cls(source, target, family, bound)

    def f(self, *arity):
        if len(arity) == 1:
            return self.family.get_map("closed", arity[0], 0)
        return self.family.get_map("open", *arity)

    def linear_part(self):
        """``(f_1, f_{0,1})`` tables as dict vectors per basis letter."""
        closed = {c: self.family.value("closed", (c,), ()) for c in self.source.closed.names}
        opens = {o: self.family.value("open", (), (o,)) for o in self.source.open.names}
        return closed, opens

    def __repr__(self):
        return f"OchaMorphism(bound={self.bound}, maps=[{', '.join(f.name for f in self.family.values())}])"


def identity_morphism(S, bound=None):
    maps = {
        ("closed", 1, 0): {(c,): {c: ONE} for c in S.closed.names},
        ("open", 0, 1): {(o,): {o: ONE} for o in S.open.names},
    }
    family = MapFamily(S.space, S.space, 0, maps, bound=bound or S.bound, prefix=("f", "f"))
    return OchaMorphism(S, S, family)


def restrict_open(S):
    """The A∞-algebra ``(Ho, {n_{0,k}})``."""
    space = OCSpace(GradedSpace("closed"), S.open)
    maps = {k: f.table for k, f in S.family.items() if k[0] == "open" and k[1] == 0}
    return OchaStructure(space, MapFamily(space, space, 1, maps, S.bound, S.weak), S.bound)


def restrict_closed(S):
    """The L∞-algebra ``(Hc, 𝔩)``."""
    space = OCSpace(S.closed, GradedSpace("open"))
    maps = {k: f.table for k, f in S.family.items() if k[0] == "closed"}
    return OchaStructure(space, MapFamily(space, space, 1, maps, S.bound, S.weak), S.bound)


def direct_sum(S1, S2):
    """
    Direct sum of two OCHAs; basis names must not collide.

    No member mixes letters from the two summands.
    """
    space = OCSpace(
        GradedSpace("closed", S1.closed.basis + S2.closed.basis),
        GradedSpace("open", S1.open.basis + S2.open.basis),
    )
    maps = {}
    for S in (S1, S2):
        for key, fmap in S.family.items():
            table = maps.setdefault(key, {})
            table.update({k: dict(v) for k, v in fmap.table.items()})
    weak = S1.weak or S2.weak
    bound = min(S1.bound, S2.bound)
    return OchaStructure(space, MapFamily(space, space, 1, maps, bound, weak), bound)
