#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Map Families
============

A family of multilinear maps keyed by ``(sector, p, q)``: ``sector`` is the
output sector, ``p`` the number of closed inputs and ``q`` the number of
open inputs. ``l_k`` is ``("closed", k, 0)``, ``n_{{p,q}}`` is
``("open", p, q)`` and an A∞-family lives entirely on ``("open", 0, k)``.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["MapFamily", "family_key", "map_name"]

__doc__ = __doc__.format("\n   ".join(__all__))

from collections.abc import Mapping

from ..errors import DegreeError, SectorError
from .graded import OCSpace
from .multimap import MultiMap


def family_key(sector, p, q):
    if sector not in ("closed", "open"):
        raise SectorError(f"unknown output sector {sector!r}")
    return (sector, int(p), int(q))


def map_name(prefix, key):
    """``("closed", 2, 0)`` -> ``"l2"``; ``("open", 1, 1)`` -> ``"n1,1"``."""
    sector, p, q = key
    closed_prefix, open_prefix = prefix
    if sector == "closed" and q == 0:
        return f"{closed_prefix}{p}"
    return f"{open_prefix}{p},{q}"


class MapFamily(Mapping):
    """
    Homogeneous family of maps between two :class:`OCSpace` objects.

    Parameters
    ----------
    source, target : OCSpace
    degree : int
        Common intrinsic degree of all members.
    maps : dict, optional
        Key to :class:`MultiMap` or to a raw table (dict).
    bound : int, optional
        Arity bound ``p + q <= bound`` of the stored data.
    weak : bool
        Whether the constant key ``p = q = 0`` is permitted.
    prefix : tuple of str
        Name prefixes for closed- and open-output members.
    """

    def __init__(self, source, target=None, degree=1, maps=None, bound=None,
                 weak=False, prefix=("l", "n")):
        self.source = source if source is not None else OCSpace()
        self.target = target if target is not None else self.source
        self.degree = int(degree)
        self.weak = bool(weak)
        self.prefix = tuple(prefix)
        self._maps = {}
        for key, value in (maps or {}).items():
            key = family_key(*key)
            if not isinstance(value, MultiMap):
                value = self._build(key, value)
            if value.degree != self.degree:
                raise DegreeError(f"{value.name} has degree {value.degree}, family degree {self.degree}")
            if key[1] == 0 and key[2] == 0 and not self.weak and not value.is_zero():
                raise DegreeError(f"constant term {value.name} requires the weak flag")
            if not value.is_zero():
                self._maps[key] = value
        top = max((p + q for _, p, q in self._maps), default=0)
        self.bound = max(top, 1) if bound is None else int(bound)

    def _build(self, key, table):
        sector, p, q = key
        return MultiMap(map_name(self.prefix, key), p, q, self.source,
                        self.target.space(sector), self.degree, table)

    def __getitem__(self, key):
        return self._maps[family_key(*key)]

    def __iter__(self):
        return iter(sorted(self._maps, key=lambda k: (k[1] + k[2], k)))

    def __len__(self):
        return len(self._maps)

    def get_map(self, sector, p, q):
        return self._maps.get((sector, p, q))

    def value(self, sector, closed, opens):
        """Value of the member of the right arity on basis letters (dict)."""
        fmap = self._maps.get((sector, len(closed), len(opens)))
        if fmap is None:
            return {}
        return fmap.apply_basis(tuple(closed), tuple(opens))

    def table(self, sector, p, q):
        fmap = self._maps.get((sector, p, q))
        return {} if fmap is None else fmap.table

    def restricted(self, keep):
        """Sub-family of the members whose key satisfies ``keep(key)``."""
        maps = {k: v for k, v in self._maps.items() if keep(k)}
        return MapFamily(self.source, self.target, self.degree, maps, self.bound,
                         self.weak, self.prefix)

    def with_maps(self, maps, **kwargs):
        """Copy with some members replaced (raw tables or MultiMaps)."""
        merged = dict(self._maps)
        for key, value in maps.items():
            merged[family_key(*key)] = value if isinstance(value, MultiMap) else self._build(family_key(*key), value)
        options = dict(source=self.source, target=self.target, degree=self.degree,
                       bound=self.bound, weak=self.weak, prefix=self.prefix)
        options.update(kwargs)
        return MapFamily(maps=merged, **options)

    def scaled(self, scalar):
        return MapFamily(self.source, self.target, self.degree,
                         {k: v.scaled(scalar) for k, v in self._maps.items()},
                         self.bound, self.weak, self.prefix)

    def is_zero(self):
        return not self._maps

    def __eq__(self, other):
        if not isinstance(other, MapFamily):
            return NotImplemented
        return self.degree == other.degree and {
            k: v.table for k, v in self._maps.items()
        } == {k: v.table for k, v in other._maps.items()}

    def __repr__(self):
        names = ", ".join(v.name for v in self.values())
        return f"MapFamily(degree={self.degree}, bound={self.bound}, maps=[{names}])"
