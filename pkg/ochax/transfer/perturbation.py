#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Coalgebra Perturbation
======================

The contraction of coalgebras behind the minimal model: the tensor-trick
homotopy on the mixed coalgebra of ``H``, perturbed by every structure map
except ``l_1`` and ``n_{{0,1}}``. The perturbed ``ĥ`` need not be a
coderivation; only the contraction identities are claimed and checked.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = ["CoalgebraContraction", "contraction_homotopy"]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging
import math
from collections import Counter

from ..coalgebra.lifts import CoalgebraMorphismView, CoderivationView
from ..coalgebra.words import words_up_to
from ..core.family import MapFamily
from ..core.graded import accumulate, add_scaled
from ..core.multimap import canonical_closed
from ..core.scalars import ONE, QQ, parity_sign
from ..core.series import smul
from ..errors import BoundError, OchaError
from ..report import Report
from .hodge import hodge_decompose

logger = logging.getLogger(__name__)

_DIFFERENTIAL = (("closed", 1, 0), ("open", 0, 1))


def _linear(func, combo):
    out = {}
    for word, coef in combo.items():
        for w, c in func(word).items():
            accumulate(out, w, smul(coef, c))
    return out


def _negated(combo):
    return {k: -v for k, v in combo.items()}


def _strict(func, source, target):
    maps = {}
    for sector, key in (("closed", ("closed", 1, 0)), ("open", ("open", 0, 1))):
        table = {}
        for name in source.space(sector).names:
            value = func(sector, {name: ONE})
            if value:
                table[(name,)] = value
        maps[key] = table
    return MapFamily(source, target, 0, maps, prefix=("f", "f"))


class CoalgebraContraction:
    """
    ``(Î, Π̂, Ĥ)`` between the coalgebras of ``S`` and of its cohomology.

    Parameters
    ----------
    S : OchaStructure
    contraction : Contraction
    bound : int
    """

    def __init__(self, S, contraction, bound):
        self.structure = S
        self.contraction = contraction
        self.bound = bound
        self.space = S.space
        self.small = contraction.small
        self.codifferential = CoderivationView(S.family, bound)
        self.perturbation = CoderivationView(
            S.family.restricted(lambda k: k not in _DIFFERENTIAL), bound)
        self._iota = CoalgebraMorphismView(
            _strict(contraction.iota, self.small, self.space), bound)
        self._pi = CoalgebraMorphismView(
            _strict(contraction.pi, self.space, self.small), bound)
        self._depth = 2 * bound + 2

    def _factor(self, sector, letter, position, pivot):
        unit = {letter: ONE}
        C = self.contraction
        if position < pivot:
            return C.iota(sector, C.pi(sector, unit))
        if position == pivot:
            return C.h(sector, unit)
        return unit

    def tensor_homotopy(self, word):
        """
        ``Σ_i (ιπ)^{⊗ i-1} ⊗ h ⊗ 1`` averaged over the closed block.
        """
        closed, opens = word
        n = len(closed)
        space = self.space
        sectors = ["closed"] * n + ["open"] * len(opens)
        out = {}
        for order in sorted(set(itertools.permutations(closed))):
            sign, _ = canonical_closed(space, order)
            if not sign:
                continue
            letters = list(order) + list(opens)
            seen = 0
            for pivot in range(len(letters)):
                factors = [self._factor(sectors[j], letters[j], j, pivot)
                           for j in range(len(letters))]
                scale = sign * parity_sign(seen)
                seen += space.degree(letters[pivot])
                if not all(factors):
                    continue
                for combo in itertools.product(*[list(f.items()) for f in factors]):
                    names = [name for name, _ in combo]
                    csign, key = canonical_closed(space, tuple(names[:n]))
                    if not csign:
                        continue
                    coef = ONE * (scale * csign)
                    for _, c in combo:
                        coef = smul(coef, c)
                    multiplicity = math.prod(math.factorial(k) for k in Counter(key).values())
                    weight = QQ(multiplicity, math.factorial(n))
                    accumulate(out, (key, tuple(names[n:])), coef * weight)
        return out

    def H(self, combo):
        return _linear(self.tensor_homotopy, combo)

    def _neumann(self, first, step):
        total, term = dict(first), first
        for _ in range(self._depth):
            term = step(term)
            if not term:
                return total
            add_scaled(total, term)
        raise OchaError("perturbation series does not terminate")

    def _as_combo(self, word):
        return {word: ONE} if isinstance(word, tuple) else word

    def iota_hat(self, word):
        """``Σ_k (-Hδ)^k Ι``."""
        return self._neumann(self._iota(self._as_combo(word)),
                             lambda t: _negated(self.H(self.perturbation(t))))

    def _series(self, word):
        return self._neumann(self._as_combo(word),
                             lambda t: _negated(self.perturbation(self.H(t))))

    def pi_hat(self, word):
        """``Π Σ_k (-δH)^k``."""
        return self._pi(self._series(word))

    def h_hat(self, word):
        """``H Σ_k (-δH)^k``."""
        return self.H(self._series(word))

    def small_differential(self, word):
        """``Π δ Î``: the transferred codifferential."""
        return self._pi(self.perturbation(self.iota_hat(word)))

    def check(self):
        """
        ``DĤ + ĤD = 1 - ÎΠ̂`` on the big coalgebra and the chain-map
        identities of ``Î`` and ``Π̂``.
        """
        report = Report(f"contraction_homotopy(bound={self.bound})",
                        {"n_max": self.bound, "m_max": self.bound})
        D = self.codifferential
        for word in words_up_to(self.space, self.bound):
            n, m = len(word[0]), len(word[1])
            residual = D(self.h_hat(word))
            add_scaled(residual, _linear(self.h_hat, D(word)))
            add_scaled(residual, {word: ONE}, -1)
            add_scaled(residual, _linear(self.iota_hat, self.pi_hat(word)))
            if residual:
                report.add("homotopy", n, m, word[0] + word[1], residual)
            residual = self.pi_hat(D(word))
            add_scaled(residual, _linear(self.small_differential, self.pi_hat(word)), -1)
            if residual:
                report.add("pi_chain", n, m, word[0] + word[1], residual)
        for word in words_up_to(self.small, self.bound):
            residual = D(self.iota_hat(word))
            add_scaled(residual, _linear(self.iota_hat, self.small_differential(word)), -1)
            if residual:
                report.add("iota_chain", len(word[0]), len(word[1]), word[0] + word[1], residual)
        return report.finish()

    def __repr__(self):
        return f"CoalgebraContraction(bound={self.bound})"


def contraction_homotopy(S, contraction=None, bound=None, result=None):
    """
    Perturbed coalgebra contraction of ``S`` onto its cohomology.

    Parameters
    ----------
    S : OchaStructure
    contraction : Contraction, optional
    bound : int, optional
    result : TransferResult, optional
        Receives the contraction in its ``homotopy`` slot.

    Raises
    ------
    BoundError
        If ``bound`` exceeds the bound of ``S``.
    """
    bound = S.bound if bound is None else int(bound)
    if bound > S.bound:
        raise BoundError(f"coalgebra contraction to length {bound} exceeds the bound {S.bound}")
    if S.weak:
        raise OchaError("the coalgebra contraction needs a structure without curvature")
    if contraction is None:
        contraction = result.contraction if result is not None else hodge_decompose(S)
    out = CoalgebraContraction(S, contraction, bound)
    if result is not None:
        result.homotopy = out
    logger.debug("built %r", out)
    return out
