#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Graded Spaces
=============

Finite graded bases, the closed/open pair ``H = Hc + Ho`` and homogeneous
elements. Degrees follow the suspended convention: every structure map has
degree +1 and every morphism component degree 0.

Internally a vector is a plain ``dict`` mapping basis names to coefficients
(rationals or :class:`~ochax.core.series.TruncatedSeries`); :class:`Element`
is the public, degree-checked wrapper.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "SECTORS",
    "GradedSpace",
    "OCSpace",
    "Element",
    "suspension_shift",
    "accumulate",
    "add_scaled",
]

__doc__ = __doc__.format("\n   ".join(__all__))

from dataclasses import dataclass, field

from ..errors import DegreeError, SectorError
from .scalars import ONE
from .series import is_zero, sadd, smul

SECTORS = ("closed", "open", "plain")


def accumulate(acc, key, coef):
    """Add ``coef`` at ``key`` in ``acc``, dropping the key when it cancels."""
    if is_zero(coef):
        return
    total = sadd(acc.get(key), coef)
    if is_zero(total):
        acc.pop(key, None)
    else:
        acc[key] = total


def add_scaled(acc, vector, scale=ONE):
    """``acc += scale * vector`` for dict vectors."""
    for key, coef in vector.items():
        accumulate(acc, key, smul(scale, coef))


@dataclass(frozen=True)
class GradedSpace:
    """
    Finite graded vector space with a named basis.

    Parameters
    ----------
    sector : {"closed", "open", "plain"}
        Sector tag.
    basis : tuple of (str, int)
        Basis names with their (suspended) degrees; names must be unique.
    """

    sector: str
    basis: tuple = ()
    _degrees: dict = field(init=False, repr=False, compare=False, hash=False)
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.sector not in SECTORS:
            raise SectorError(f"unknown sector {self.sector!r}")
        basis = tuple((str(name), int(deg)) for name, deg in self.basis)
        names = [name for name, _ in basis]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate basis names in {self.sector} space")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_degrees", dict(basis))
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def from_degrees(cls, sector, **degrees):
        return cls(sector, tuple(degrees.items()))

    @property
    def names(self):
        return tuple(name for name, _ in self.basis)

    @property
    def dimension(self):
        return len(self.basis)

    def __contains__(self, name):
        return name in self._degrees

    def __len__(self):
        return len(self.basis)

    def degree(self, name):
        try:
            return self._degrees[name]
        except KeyError:
            raise SectorError(f"{name!r} is not a basis element of the {self.sector} space")

    def index(self, name):
        return self._index[name]

    def degrees(self):
        """Sorted list of the degrees that occur."""
        return sorted(set(self._degrees.values()))

    def names_in_degree(self, degree):
        return tuple(name for name, deg in self.basis if deg == degree)

    def sort_key(self, name):
        """Canonical order of basis letters: by degree, then name."""
        return (self._degrees[name], name)

    def shifted(self, shift):
        return GradedSpace(self.sector, tuple((n, d + shift) for n, d in self.basis))


def suspension_shift(space, shift):
    """
    Shift every basis degree by ``shift``.

    ``shift = -1`` desuspends (``(↓A)^(r+1) = A^r``), ``shift = -2`` gives the
    double desuspension used for the closed sector in physics notation.
    """
    if shift == 0:
        return space
    return space.shifted(shift)


@dataclass(frozen=True)
class OCSpace:
    """The pair ``(Hc, Ho)``; basis names must be distinct across sectors."""

    closed: GradedSpace = field(default_factory=lambda: GradedSpace("closed"))
    open: GradedSpace = field(default_factory=lambda: GradedSpace("open"))

    def __post_init__(self):
        if self.closed.sector != "closed" and self.closed.dimension:
            raise SectorError("closed slot needs a closed-sector space")
        if self.open.sector != "open" and self.open.dimension:
            raise SectorError("open slot needs an open-sector space")
        overlap = set(self.closed.names) & set(self.open.names)
        if overlap:
            raise ValueError(f"names shared between sectors: {sorted(overlap)}")

    def degree(self, name):
        if name in self.closed:
            return self.closed.degree(name)
        return self.open.degree(name)

    def sector_of(self, name):
        if name in self.closed:
            return "closed"
        if name in self.open:
            return "open"
        raise SectorError(f"{name!r} is in neither sector")

    def space(self, sector):
        return self.closed if sector == "closed" else self.open

    def closed_key(self, name):
        return self.closed.sort_key(name)

    @property
    def dimension(self):
        return self.closed.dimension + self.open.dimension


class Element:
    """
    Homogeneous element of a :class:`GradedSpace`.

    Parameters
    ----------
    space : GradedSpace
    coeffs : dict
        Basis name to coefficient; zero entries are dropped.
    degree : int, optional
        Declared degree. Inferred from the support when omitted; required
        for the zero element.
    """

    __slots__ = ("space", "coeffs", "degree")

    def __init__(self, space, coeffs=None, degree=None):
        clean = {}
        for name, coef in (coeffs or {}).items():
            if name not in space:
                raise SectorError(f"{name!r} not in the {space.sector} space")
            accumulate(clean, name, coef)
        degrees = {space.degree(name) for name in clean}
        if len(degrees) > 1:
            raise DegreeError(f"inhomogeneous element with degrees {sorted(degrees)}")
        if degree is None:
            if not degrees:
                raise DegreeError("the zero element needs an explicit degree")
            degree = degrees.pop()
        elif degrees and degrees != {degree}:
            raise DegreeError(f"element declared of degree {degree} has support in {sorted(degrees)}")
        self.space = space
        self.coeffs = clean
        self.degree = degree

    @classmethod
    def basis(cls, space, name):
        return cls(space, {name: ONE})

    @classmethod
    def zero(cls, space, degree):
        return cls(space, {}, degree)

    def is_zero(self):
        return not self.coeffs

    def items(self):
        return self.coeffs.items()

    def _check(self, other):
        if other.space != self.space:
            raise SectorError("elements live in different spaces")
        if other.degree != self.degree and other.coeffs and self.coeffs:
            raise DegreeError("adding elements of different degrees")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        add_scaled(out, other.coeffs)
        degree = self.degree if self.coeffs else other.degree
        return Element(self.space, out, degree)

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        out = {}
        add_scaled(out, self.coeffs, scalar)
        return Element(self.space, out, self.degree)

    __rmul__ = scaled

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if self.space != other.space:
            return False
        if self.coeffs and other.coeffs and self.degree != other.degree:
            return False
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.degree, tuple(sorted(self.coeffs))))

    def __repr__(self):
        if not self.coeffs:
            return f"0[{self.degree}]"
        return " + ".join(f"({c})*{n}" for n, c in sorted(self.coeffs.items()))
