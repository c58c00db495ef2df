#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Gauge Equivalence and Transport
===============================

Gauge paths generated by polynomial-in-``t`` elements of degree -1, solved
exactly by formal integration, and the pushforward of Maurer-Cartan
elements and gauge generators along morphisms.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "PathPolynomial",
    "GaugePath",
    "gauge_transform",
    "transport_mc",
    "mc_pushforward_gauge",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging
from dataclasses import dataclass, field

from ..core.graded import add_scaled
from ..core.scalars import QQ, to_scalar
from ..core.series import TruncatedSeries, is_zero, smul
from ..errors import AxiomError, DegreeError, OchaError
from .mc import FormalElement, _check_degree_zero, mc_residual, ordered_power, symmetric_power

logger = logging.getLogger(__name__)


class PathPolynomial:
    """
    Polynomial in ``t`` whose coefficients are truncated ``hbar``-series.

    Parameters
    ----------
    terms : dict
        Power of ``t`` to :class:`~ochax.core.series.TruncatedSeries`.
    order : int
    """

    __slots__ = ("terms", "order")

    def __init__(self, terms, order):
        self.order = order
        self.terms = {}
        for k, c in terms.items():
            c = c if isinstance(c, TruncatedSeries) else TruncatedSeries.constant(to_scalar(c), order)
            if c:
                self.terms[int(k)] = c.truncate(order)

    def _coerce(self, other):
        if isinstance(other, PathPolynomial):
            return other
        if isinstance(other, TruncatedSeries):
            return PathPolynomial({0: other}, self.order)
        return PathPolynomial({0: TruncatedSeries.constant(to_scalar(other), self.order)},
                              self.order)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return PathPolynomial(out, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return PathPolynomial({k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return PathPolynomial(out, min(self.order, other.order))

    __rmul__ = __mul__

    def integrate(self):
        """``∫_0^t``."""
        return PathPolynomial({k + 1: c * QQ(1, k + 1) for k, c in self.terms.items()}, self.order)

    def at(self, t):
        total = TruncatedSeries.constant(0, self.order)
        for k, c in self.terms.items():
            total = total + c * (to_scalar(t) ** k)
        return total

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return not (self - other).terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms)))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return " + ".join(f"({c})*t^{k}" for k, c in sorted(self.terms.items())) or "0"


def _path_vector(generator, order):
    """``{t-power: FormalElement or dict}`` as ``{name: PathPolynomial}``."""
    out = {}
    for k, element in generator.items():
        coeffs = element.coeffs if isinstance(element, FormalElement) else element
        for name, coef in coeffs.items():
            term = PathPolynomial({int(k): coef}, order)
            out[name] = out[name] + term if name in out else term
    return {n: p for n, p in out.items() if p}


def _constant_path(element):
    return {n: PathPolynomial({0: c}, element.order) for n, c in element.coeffs.items()}


def _evaluate_at(space, vector, t, order, degree=0):
    coeffs = {n: p.at(t) for n, p in vector.items()}
    return FormalElement(space, coeffs, order, degree, nilpotent=False)


@dataclass
class GaugePath:
    """
    A solved gauge path.

    Attributes
    ----------
    alpha, beta : dict
        Generators as ``{name: PathPolynomial}`` (closed, open).
    closed, opened : dict
        The paths ``c̄_t`` and ``ō_t`` in the same form.
    """

    structure: object
    order: int
    alpha: dict
    closed: dict
    beta: dict = field(default_factory=dict)
    opened: dict = None

    def at(self, t):
        """The pair ``(c̄_t, ō_t)``; the second entry is None without open data."""
        S = self.structure
        closed = _evaluate_at(S.closed, self.closed, t, self.order)
        if self.opened is None:
            return closed, None
        return closed, _evaluate_at(S.open, self.opened, t, self.order)

    @property
    def endpoint(self):
        return self.at(1)


def _closed_rhs(S, alpha, path, order):
    """``Σ_k (1/k!) l_{1+k}(α(t), c̄_t^{⊗k})``."""
    out = {}
    for k in range(0, min(S.bound - 1, order - 1) + 1):
        for key, coef in symmetric_power(S.closed, path, k):
            for a, acoef in alpha.items():
                value = S.family.value("closed", (a,) + key, ())
                add_scaled(out, value, acoef * coef)
    return out


def _open_rhs(S, alpha, beta, closed, opened, order):
    """
    ``Σ (1/p!) n_{1+p,q}(α, c̄^p; ō^q) + Σ (1/p!) n_{p,q+1+q'}(c̄^p; ō^q, β, ō^q')``.
    """
    out = {}
    for p in range(0, min(S.bound, order - 1) + 1):
        for ckey, ccoef in symmetric_power(S.closed, closed, p):
            for q in range(0, min(S.bound - 1 - p, order - 1) + 1):
                for okey, ocoef in ordered_power(opened, q):
                    for a, acoef in alpha.items():
                        value = S.family.value("open", (a,) + ckey, okey)
                        add_scaled(out, value, acoef * ocoef * ccoef)
                    for cut in range(q + 1):
                        for b, bcoef in beta.items():
                            args = okey[:cut] + (b,) + okey[cut:]
                            value = S.family.value("open", ckey, args)
                            add_scaled(out, value, bcoef * ocoef * ccoef)
    return out


def _integrate(start, rhs, order):
    """Fixed point of ``x_t = start + ∫_0^t rhs(x_s) ds``; terminates by nilpotency."""
    path = dict(start)
    for _ in range(order + 2):
        update = dict(start)
        for name, poly in rhs(path).items():
            poly = poly if isinstance(poly, PathPolynomial) else PathPolynomial({0: poly}, order)
            integral = poly.integrate()
            update[name] = update[name] + integral if name in update else integral
        update = {n: p for n, p in update.items() if p}
        if update == path:
            return path
        path = update
    raise OchaError("gauge iteration did not stabilize")


def _check_generator(space, vector, sector):
    for name in vector:
        if space.degree(name) != -1:
            raise DegreeError(f"{sector} gauge generator letter {name} has degree "
                              f"{space.degree(name)}, expected -1")
    for poly in vector.values():
        for c in poly.terms.values():
            if not c.is_nilpotent:
                raise OchaError("gauge generators must have coefficients in the maximal ideal")


def gauge_transform(S, start, alpha, start_open=None, beta=None, verify=True):
    """
    Flow a Maurer-Cartan element along a polynomial gauge path.

    Solves ``d/dt c̄_t = Σ (1/k!) l_{1+k}(α(t), c̄_t^{⊗k})`` (and the open
    companion equation when ``start_open`` is given) with ``c̄_0 = start``.

    Parameters
    ----------
    S : OchaStructure
    start : FormalElement
    alpha : dict
        ``{t-power: FormalElement or {name: series}}`` of degree -1 in ``Hc``.
    start_open : FormalElement, optional
    beta : dict, optional
        Open generator of degree -1 in ``Ho``.

    Returns
    -------
    GaugePath

    Raises
    ------
    AxiomError
        If the start is not a Maurer-Cartan element.
    DegreeError
        If a generator has the wrong degree.
    """
    _check_degree_zero(start, start_open)
    order = start.order if start_open is None else min(start.order, start_open.order)
    residual, open_residual = mc_residual(S, start, start_open)
    if not residual.is_zero() or (open_residual is not None and not open_residual.is_zero()):
        raise AxiomError("Maurer-Cartan", "the starting point is not a Maurer-Cartan element")
    a = _path_vector(alpha, order)
    b = _path_vector(beta or {}, order)
    _check_generator(S.closed, a, "closed")
    _check_generator(S.open, b, "open")

    closed = _integrate(_constant_path(start), lambda x: _closed_rhs(S, a, x, order), order)
    opened = None
    if start_open is not None:
        opened = _integrate(_constant_path(start_open),
                            lambda y: _open_rhs(S, a, b, closed, y, order), order)
    path = GaugePath(S, order, a, closed, b, opened)
    if verify:
        end_closed, end_open = path.endpoint
        residual, open_residual = mc_residual(S, end_closed, end_open)
        if not residual.is_zero() or (open_residual is not None and not open_residual.is_zero()):
            raise OchaError("gauge endpoint is not a Maurer-Cartan element")
    logger.info("gauge endpoint %s", path.endpoint[0])
    return path


def transport_mc(F, closed, opened=None, verify=True):
    """
    Push ``(c̄, ō)`` forward along a morphism.

    ``c̄' = Σ (1/k!) f_k(c̄^{⊗k})`` and ``ō' = Σ (1/k!) f_{k,l}(c̄^{⊗k}; ō^{⊗l})``.

    Raises
    ------
    OchaError
        For weak morphisms or when the image fails the target equations.
    """
    _check_degree_zero(closed, opened)
    if F.weak:
        raise OchaError("transport along weak morphisms is not supported")
    order = closed.order if opened is None else min(closed.order, opened.order)
    src, tgt = F.source, F.target
    image = {}
    for k in range(1, min(F.bound, order - 1) + 1):
        for key, coef in symmetric_power(src.closed, closed.coeffs, k):
            add_scaled(image, F.family.value("closed", key, ()), coef)
    new_closed = FormalElement(tgt.closed, image, order)
    new_open = None
    if opened is not None:
        image = {}
        for k in range(0, min(F.bound, order - 1) + 1):
            for l in range(0, min(F.bound - k, order - 1 - k) + 1):
                if k == 0 and l == 0:
                    continue
                for ckey, ccoef in symmetric_power(src.closed, closed.coeffs, k):
                    for okey, ocoef in ordered_power(opened.coeffs, l):
                        add_scaled(image, F.family.value("open", ckey, okey), smul(ocoef, ccoef))
        new_open = FormalElement(tgt.open, image, order)
    if verify and not all(
        r is None or r.is_zero() for r in mc_residual(tgt, new_closed, new_open)
    ):
        raise OchaError("transported element is not a Maurer-Cartan element of the target")
    return new_closed, new_open


def mc_pushforward_gauge(F, alpha):
    """
    Image ``f_1(α)`` of a closed gauge generator under a strict morphism.

    Raises
    ------
    OchaError
        If ``F`` has components beyond ``f_1`` and ``f_{0,1}``.
    """
    if any(p + q != 1 or (sector == "open" and p == 1) for sector, p, q in F.family):
        raise OchaError("generator pushforward needs a strict morphism")
    out = {}
    for k, element in alpha.items():
        coeffs = element.coeffs if isinstance(element, FormalElement) else element
        image = {}
        for name, coef in coeffs.items():
            add_scaled(image, F.family.value("closed", (name,), ()), coef)
        out[k] = {n: c for n, c in image.items() if not is_zero(c)}
    return out
