#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Truncated Series
================

Coefficients in the Artin ring ``A = QQ[hbar]/(hbar^N)``. Elements with zero
constant term form the maximal ideal ``m_A`` in which formal Maurer-Cartan
elements live. ``hbar`` has degree zero, so series coefficients never
contribute to Koszul signs.

Mixed arithmetic between a series and a plain rational goes through
:func:`smul` and :func:`sadd`, which always let the series drive.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["TruncatedSeries", "hbar", "smul", "sadd", "is_zero"]

__doc__ = __doc__.format("\n   ".join(__all__))

from .scalars import QQ, format_scalar, to_scalar


class TruncatedSeries:
    """
    Polynomial in ``hbar`` with rational coefficients, reduced mod ``hbar^order``.

    Parameters
    ----------
    coeffs : sequence
        Coefficients of ``hbar^0, hbar^1, ...``; extra terms are dropped.
    order : int
        Truncation order ``N >= 1``.
    """

    __slots__ = ("_coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 1:
            raise ValueError("truncation order must be at least 1")
        coeffs = [to_scalar(c) for c in list(coeffs)[:order]]
        coeffs += [QQ(0)] * (order - len(coeffs))
        self._coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def constant(cls, value, order):
        return cls([value], order)

    @property
    def coeffs(self):
        return self._coeffs

    def coefficient(self, k):
        """Coefficient of ``hbar^k`` (zero beyond the order)."""
        return self._coeffs[k] if 0 <= k < self.order else QQ(0)

    @property
    def is_nilpotent(self):
        """True when the constant term vanishes."""
        return self._coeffs[0] == 0

    @property
    def valuation(self):
        """Lowest power of ``hbar`` with nonzero coefficient, ``order`` if zero."""
        for k, c in enumerate(self._coeffs):
            if c != 0:
                return k
        return self.order

    def truncate(self, order):
        """Reduce mod ``hbar^order`` (``order`` not above the current one)."""
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return TruncatedSeries(self._coeffs[:order], order)

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(to_scalar(other), self.order)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            [self._coeffs[k] + other._coeffs[k] for k in range(order)], order
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            out = [QQ(0)] * order
            for i, a in enumerate(self._coeffs[:order]):
                if a == 0:
                    continue
                for j in range(order - i):
                    b = other._coeffs[j]
                    if b != 0:
                        out[i + j] += a * b
            return TruncatedSeries(out, order)
        try:
            scalar = to_scalar(other)
        except TypeError:
            return NotImplemented
        return TruncatedSeries([c * scalar for c in self._coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        scalar = to_scalar(other)
        return TruncatedSeries([c / scalar for c in self._coeffs], self.order)

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            order = min(self.order, other.order)
            return self._coeffs[:order] == other._coeffs[:order]
        try:
            other = to_scalar(other)
        except TypeError:
            return NotImplemented
        return self._coeffs[0] == other and all(c == 0 for c in self._coeffs[1:])

    def __hash__(self):
        return hash((self._coeffs, self.order))

    def __bool__(self):
        return any(c != 0 for c in self._coeffs)

    def __repr__(self):
        return f"TruncatedSeries({str(self)!r}, order={self.order})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(format_scalar(c))
            else:
                power = "h" if k == 1 else f"h^{k}"
                terms.append(power if c == 1 else f"{format_scalar(c)}*{power}")
        return " + ".join(terms) if terms else "0"

    def to_strings(self):
        """Coefficient strings, used by the document writer."""
        return [format_scalar(c) for c in self._coeffs]


def hbar(order):
    """The formal parameter ``hbar`` mod ``hbar^order``."""
    return TruncatedSeries([0, 1], order)


def smul(a, b):
    """Product of two coefficients, either of which may be a series."""
    if isinstance(b, TruncatedSeries) and not isinstance(a, TruncatedSeries):
        return b * a
    return a * b


def sadd(a, b):
    """Sum of two coefficients; ``None`` acts as zero."""
    if a is None:
        return b
    if b is None:
        return a
    if isinstance(b, TruncatedSeries) and not isinstance(a, TruncatedSeries):
        return b + a
    return a + b


def is_zero(c):
    """True for a vanishing rational or series coefficient."""
    if isinstance(c, TruncatedSeries):
        return not c
    return c == 0
