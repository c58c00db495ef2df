#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Exact Scalars
=============

The ground field is the rational field ``QQ`` of :mod:`sympy`; its elements
are arbitrary-precision and always reduced. Floats are never accepted.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "QQ",
    "ONE",
    "ZERO",
    "to_scalar",
    "format_scalar",
    "parity_sign",
    "inverse_factorial",
    "is_scalar",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import math
import re

from sympy.polys.domains import QQ

ONE = QQ(1)
ZERO = QQ(0)

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def is_scalar(value):
    """True for elements of the ground domain ``QQ``."""
    return QQ.of_type(value)


def to_scalar(value):
    """
    Convert ``value`` to an exact rational.

    Parameters
    ----------
    value : int or str or QQ element
        Integers, ``QQ`` elements and strings of the form ``"p"`` or
        ``"p/q"``.

    Returns
    -------
    QQ element

    Raises
    ------
    TypeError
        For floats, booleans and other inexact inputs.
    ValueError
        For malformed strings or a zero denominator.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return QQ(value)
    if QQ.of_type(value):
        return value
    if isinstance(value, str):
        match = _RATIONAL.match(value)
        if match is None:
            raise ValueError(f"not an exact rational: {value!r}")
        num, den = match.groups()
        den = int(den) if den is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator in {value!r}")
        return QQ(int(num), den)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_scalar(value):
    """Render a rational as ``"p"`` or ``"p/q"``."""
    value = to_scalar(value)
    num, den = int(value.numerator), int(value.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def parity_sign(exponent):
    """Return ``(-1)**exponent`` as an int."""
    return -1 if exponent % 2 else 1


def inverse_factorial(k):
    """Exact ``1/k!``."""
    return QQ(1, math.factorial(k))
