#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Maurer-Cartan Equations
=======================

Formal elements with coefficients in ``hbar Q[hbar]/(hbar^N)``, the
Maurer-Cartan residuals of an OCHA and order-by-order solving of the
closed equation with obstruction detection.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "FormalElement",
    "symmetric_power",
    "ordered_power",
    "mc_residual",
    "is_mc",
    "solve_mc",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging
import math
from collections import Counter

from ..core.graded import add_scaled
from ..core.scalars import ONE, QQ, to_scalar
from ..core.series import TruncatedSeries, is_zero, smul
from ..errors import DegreeError, ObstructionError, OchaError, SectorError
from ..structures.cohomology import ComplexSplitting

logger = logging.getLogger(__name__)


def _series(value, order):
    if isinstance(value, TruncatedSeries):
        if value.order < order:
            raise ValueError(f"coefficient known to order {value.order}, need {order}")
        return value.truncate(order)
    if isinstance(value, (list, tuple)):
        return TruncatedSeries(value, order)
    return TruncatedSeries.constant(to_scalar(value), order)


class FormalElement:
    """
    Homogeneous element of ``V ⊗ m_A`` with ``m_A = hbar Q[hbar]/(hbar^N)``.

    Parameters
    ----------
    space : GradedSpace
    coeffs : dict
        Basis name to a :class:`~ochax.core.series.TruncatedSeries` or a
        list of its coefficients.
    order : int
        Truncation order ``N``.
    degree : int
    nilpotent : bool
        Require every coefficient to lie in ``m_A``.
    """

    __slots__ = ("space", "coeffs", "order", "degree")

    def __init__(self, space, coeffs=None, order=2, degree=0, nilpotent=True):
        clean = {}
        for name, value in (coeffs or {}).items():
            if name not in space:
                raise SectorError(f"{name!r} is not in the {space.sector} space")
            coef = _series(value, order)
            if not coef:
                continue
            if space.degree(name) != degree:
                raise DegreeError(f"{name} has degree {space.degree(name)}, element degree {degree}")
            if nilpotent and not coef.is_nilpotent:
                raise OchaError(f"coefficient of {name} has a constant term")
            clean[name] = coef
        self.space = space
        self.coeffs = clean
        self.order = int(order)
        self.degree = int(degree)

    @classmethod
    def from_orders(cls, space, orders, order, degree=0):
        """
        Build ``sum_k hbar^k x_k`` from ``{k: {name: scalar}}``.

        Examples
        --------
        >>> V = GradedSpace("closed", (("z", 0),))
        >>> FormalElement.from_orders(V, {1: {"z": 1}}, 3)
        z: h
        """
        coeffs = {}
        for k, vector in orders.items():
            if not 1 <= k < order:
                continue
            for name, value in vector.items():
                coeffs.setdefault(name, [QQ(0)] * order)[k] += to_scalar(value)
        return cls(space, coeffs, order, degree)

    @classmethod
    def zero(cls, space, order, degree=0):
        return cls(space, {}, order, degree)

    def coefficient(self, k):
        """The ``hbar^k`` part as a plain rational vector."""
        return {n: c.coefficient(k) for n, c in self.coeffs.items() if c.coefficient(k) != 0}

    def truncate(self, order):
        return FormalElement(self.space, {n: c.truncate(order) for n, c in self.coeffs.items()},
                             order, self.degree, nilpotent=False)

    def is_zero(self):
        return not self.coeffs

    def map(self, linear, space=None, degree=None):
        """Apply a linear map ``dict -> dict`` hbar-order by hbar-order."""
        orders = {k: linear(self.coefficient(k)) for k in range(1, self.order)}
        out = FormalElement.from_orders(space or self.space, orders, self.order,
                                        self.degree if degree is None else degree)
        return out

    def _check(self, other):
        if other.space != self.space:
            raise SectorError("formal elements live in different spaces")
        if other.coeffs and self.coeffs and other.degree != self.degree:
            raise DegreeError("adding formal elements of different degrees")

    def __add__(self, other):
        self._check(other)
        order = min(self.order, other.order)
        out = {n: c.truncate(order) for n, c in self.coeffs.items()}
        for n, c in other.coeffs.items():
            out[n] = out[n] + c.truncate(order) if n in out else c.truncate(order)
        degree = self.degree if self.coeffs else other.degree
        return FormalElement(self.space, out, order, degree, nilpotent=False)

    def __neg__(self):
        return FormalElement(self.space, {n: -c for n, c in self.coeffs.items()}, self.order,
                             self.degree, nilpotent=False)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, scalar):
        return FormalElement(self.space, {n: c * scalar for n, c in self.coeffs.items()},
                             self.order, self.degree, nilpotent=False)

    def __eq__(self, other):
        if not isinstance(other, FormalElement):
            return NotImplemented
        return self.space == other.space and (self - other).is_zero()

    def __hash__(self):
        return hash((self.degree, self.order, tuple(sorted(self.coeffs))))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{n}: {c}" for n, c in sorted(self.coeffs.items()))


def symmetric_power(space, vector, k):
    """
    ``(1/k!) x^{⊗k}`` for an even ``x`` as canonical closed keys.

    Yields ``(key, coefficient)``; the multinomial count cancels against
    ``k!`` leaving ``1 / prod(multiplicity!)``.
    """
    names = sorted(vector, key=space.sort_key)
    for block in itertools.combinations_with_replacement(names, k):
        weight = math.prod(math.factorial(m) for m in Counter(block).values())
        coef = QQ(1, weight)
        for name in block:
            coef = smul(vector[name], coef)
        if not is_zero(coef):
            yield block, coef


def ordered_power(vector, k):
    """``x^{⊗k}`` as ordered tuples with coefficients."""
    for block in itertools.product(sorted(vector), repeat=k):
        coef = ONE
        for name in block:
            coef = smul(vector[name], coef)
        if not is_zero(coef):
            yield block, coef


def _clip_warning(S, order):
    if S.bound < order - 1:
        logger.warning("arity bound %d is below order-1 = %d; members beyond it are taken as zero",
                       S.bound, order - 1)


def _closed_sum(S, vector, order):
    out = {}
    for k in range(0 if S.weak else 1, min(S.bound, order - 1) + 1):
        for key, coef in symmetric_power(S.closed, vector, k):
            add_scaled(out, S.family.value("closed", key, ()), coef)
    return out


def _open_sum(S, closed_vector, open_vector, order):
    out = {}
    for k in range(0, min(S.bound, order - 1) + 1):
        for l in range(0, min(S.bound - k, order - 1 - k) + 1):
            if k == 0 and l == 0 and not S.weak:
                continue
            for ckey, ccoef in symmetric_power(S.closed, closed_vector, k):
                for okey, ocoef in ordered_power(open_vector, l):
                    add_scaled(out, S.family.value("open", ckey, okey), smul(ocoef, ccoef))
    return out


def _check_degree_zero(*elements):
    for element in elements:
        if element is not None and element.degree != 0:
            raise DegreeError(f"Maurer-Cartan elements have degree 0, got {element.degree}")


def mc_residual(S, closed, opened=None):
    """
    ``(𝔩_*(c̄), 𝔫_*(c̄; ō))`` with ``𝔩_*(c̄) = Σ (1/k!) l_k(c̄, ..., c̄)``.

    Parameters
    ----------
    S : OchaStructure
    closed : FormalElement
        ``c̄`` of degree 0 in ``Hc``.
    opened : FormalElement, optional
        ``ō`` of degree 0 in ``Ho``; the open residual is None without it.

    Returns
    -------
    tuple of FormalElement
        Degree-1 residuals; the second one is None when ``opened`` is.

    Raises
    ------
    DegreeError
        If an argument has nonzero degree.
    """
    _check_degree_zero(closed, opened)
    order = closed.order if opened is None else min(closed.order, opened.order)
    _clip_warning(S, order)
    residual = FormalElement(S.closed, _closed_sum(S, closed.coeffs, order), order, 1,
                             nilpotent=False)
    if opened is None:
        return residual, None
    open_residual = FormalElement(S.open, _open_sum(S, closed.coeffs, opened.coeffs, order),
                                  order, 1, nilpotent=False)
    return residual, open_residual


def is_mc(S, closed, opened=None):
    """Both residuals vanish mod ``hbar^N``."""
    residual, open_residual = mc_residual(S, closed, opened)
    return residual.is_zero() and (open_residual is None or open_residual.is_zero())


def solve_mc(S, seed, order, contraction=None):
    """
    Extend a first-order cocycle to a solution of the closed MC equation.

    At order ``k`` the equation reads ``l_1 θ_k + R_k = 0`` with ``R_k``
    built from lower orders; ``θ_k = -h(R_k)`` whenever ``π(R_k) = 0``.

    Parameters
    ----------
    S : OchaStructure
    seed : dict
        ``θ_1`` as a rational vector of degree 0 with ``l_1 θ_1 = 0``.
    order : int
        Truncation order ``N``.
    contraction : Contraction, optional
        Supplies the closed splitting.

    Raises
    ------
    OchaError
        If the seed is not a cocycle or ``S`` is weak.
    ObstructionError
        If ``π(R_k) != 0``; the error carries the order, the class and the
        partial solution in ``partial``.
    """
    if S.weak:
        raise OchaError("order-by-order solving needs a structure without curvature")
    theta1 = {n: to_scalar(v) for n, v in seed.items() if to_scalar(v) != 0}
    for name in theta1:
        if S.closed.degree(name) != 0:
            raise DegreeError(f"seed letter {name} has degree {S.closed.degree(name)}")
    boundary = {}
    for name, coef in theta1.items():
        add_scaled(boundary, S.family.value("closed", (name,), ()), coef)
    if boundary:
        raise OchaError(f"seed is not an l_1-cocycle: l_1(seed) = {boundary}")
    split = contraction.closed if contraction is not None else ComplexSplitting(S.closed, S.l(1))
    _clip_warning(S, order)
    orders = {1: theta1}
    for k in range(2, order):
        theta = FormalElement.from_orders(S.closed, orders, order)
        residual = FormalElement(S.closed, _closed_sum(S, theta.coeffs, order), order, 1,
                                 nilpotent=False).coefficient(k)
        obstruction = split.project(residual)
        if obstruction:
            logger.info("obstruction at order %d: %s", k, obstruction)
            error = ObstructionError(k, obstruction)
            error.partial = theta
            raise error
        orders[k] = {n: -c for n, c in split.homotopy(residual).items()}
        logger.debug("order %d correction: %s", k, orders[k])
    theta = FormalElement.from_orders(S.closed, orders, order)
    if not mc_residual(S, theta)[0].is_zero():
        raise OchaError("order-by-order solution does not satisfy the MC equation")
    return theta
