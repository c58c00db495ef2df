#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Lifts to the Coalgebra
======================

Coderivation and coalgebra-morphism lifts of map families, corolla
extraction, the Gerstenhaber bracket and the square of a coderivation.

Everything is computed on words of length at most the truncation bound;
every identity is graded by arity, so bounded verification is exact arity
by arity.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "CoderivationView",
    "CoalgebraMorphismView",
    "lift_coderivation",
    "lift_morphism",
    "check_coderivation",
    "check_morphism_lift",
    "extract_corollas",
    "square_as_corollas",
    "gerstenhaber_bracket",
    "compose_families",
    "intertwining_residual",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging

from ..core.family import MapFamily
from ..core.graded import accumulate
from ..core.multimap import canonical_closed
from ..core.permutations import reorder_sign, set_partitions, unshuffle_splits
from ..core.scalars import ONE, inverse_factorial, parity_sign
from ..core.series import smul
from ..errors import BoundError, DegreeError
from .words import (
    coproduct,
    coproduct_sum,
    length_one_part,
    word_degree,
    word_length,
    words_up_to,
)

logger = logging.getLogger(__name__)


def _apply_linear(func, combo):
    out = {}
    for word, coef in combo.items():
        for w, c in func(word).items():
            accumulate(out, w, smul(coef, c))
    return out


class CoderivationView:
    """
    The coderivation lift of a homogeneous map family.

    On a word it sums, over the sub-multisets of the closed block chosen by
    unshuffles and the consecutive sub-blocks of the open block, the word
    with that block replaced by the value of the matching family member.
    """

    def __init__(self, family, bound=None):
        self.family = family
        self.space = family.source
        self.degree = family.degree
        self.bound = family.bound if bound is None else int(bound)

    def term_sign(self, exponent):
        return parity_sign(exponent)

    def apply(self, word):
        closed, opens = word
        n, m = len(closed), len(opens)
        space = self.space
        cdeg = [space.closed.degree(c) for c in closed]
        odeg = [space.open.degree(o) for o in opens]
        out = {}
        for (sector, p, q), fmap in self.family.items():
            if sector == "closed":
                if p > n or q > 0:
                    continue
                for chosen, rest in unshuffle_splits(n, (p, n - p)):
                    value = fmap.apply_basis(tuple(closed[i] for i in chosen), ())
                    if not value:
                        continue
                    eps = reorder_sign(chosen + rest, cdeg)
                    rest_letters = tuple(closed[i] for i in rest)
                    for letter, coef in value.items():
                        sign, key = canonical_closed(space, (letter,) + rest_letters)
                        if sign:
                            accumulate(out, (key, opens), coef * (eps * sign))
                continue
            if p > n or q > m:
                continue
            for kept, used in unshuffle_splits(n, (n - p, p)):
                eps = reorder_sign(kept + used, cdeg)
                kept_letters = tuple(closed[i] for i in kept)
                used_letters = tuple(closed[i] for i in used)
                deg_kept = sum(cdeg[i] for i in kept)
                deg_used = sum(cdeg[i] for i in used)
                for i in range(m - q + 1):
                    value = fmap.apply_basis(used_letters, opens[i : i + q])
                    if not value:
                        continue
                    pre = sum(odeg[:i])
                    exponent = fmap.degree * (deg_kept + pre) + pre * deg_used
                    sign = eps * self.term_sign(exponent)
                    for letter, coef in value.items():
                        new = (kept_letters, opens[:i] + (letter,) + opens[i + q :])
                        accumulate(out, new, coef * sign)
        return out

    def __call__(self, combo):
        if isinstance(combo, tuple):
            combo = {combo: ONE}
        return _apply_linear(self.apply, combo)


def lift_coderivation(family, bound=None):
    """
    Lift a map family to a coderivation of the (mixed) tensor coalgebra.

    Raises
    ------
    DegreeError
        If a constant member is present without the weak flag.
    """
    for (sector, p, q), fmap in family.items():
        if p == 0 and q == 0 and not family.weak:
            raise DegreeError(f"constant term {fmap.name} on a non-weak family")
    return CoderivationView(family, bound)


def check_coderivation(D, bound=None):
    """
    ``Δ D = (D ⊗ 1 + 1 ⊗ D) Δ`` on every basis word of length <= bound.
    """
    bound = D.bound if bound is None else bound
    space = D.space
    for word in words_up_to(space, bound, weak=D.family.weak):
        lhs = coproduct_sum(space, D(word))
        rhs = {}
        for (left, right), coef in coproduct(space, word).items():
            for w, c in D(left).items():
                accumulate(rhs, (w, right), smul(coef, c))
            sign = parity_sign(D.degree * word_degree(space, left))
            for w, c in D(right).items():
                accumulate(rhs, (left, w), smul(coef, c) * sign)
        diff = dict(lhs)
        for key, c in rhs.items():
            accumulate(diff, key, -c)
        if diff:
            logger.debug("coderivation law fails on %s", word)
            return False
    return True


def extract_corollas(operator, source, target, degree, bound, weak=False, prefix=("l", "n")):
    """
    Read a coalgebra-level operator back as a map family.

    ``operator`` maps a word to a combination of words; the member of arity
    ``(p, q)`` is the cogenerator (length-one) part of its value on words with
    ``p`` closed and ``q`` open letters.
    """
    tables = {}
    for word in words_up_to(source, bound, weak=weak):
        part = length_one_part(operator(word))
        if not part:
            continue
        n, m = len(word[0]), len(word[1])
        key_in = word[0] + word[1]
        for (sector, letter), coef in part.items():
            table = tables.setdefault((sector, n, m), {})
            accumulate(table.setdefault(key_in, {}), letter, coef)
    return MapFamily(source, target, degree, tables, bound=bound, weak=weak, prefix=prefix)


def square_as_corollas(D, bound=None):
    """
    Corolla components of ``D ∘ D``; all vanish iff the family is a
    (weak) structure up to the bound.
    """
    bound = D.bound if bound is None else bound
    return extract_corollas(
        lambda w: D(D(w)), D.space, D.space, 2 * D.degree, bound, weak=D.family.weak
    )


def gerstenhaber_bracket(f, g, bound=None):
    """
    ``[f, g] = f ∘̂ g - (-1)^{|f||g|} g ∘̂ f`` read off the commutator of lifts.
    """
    bound = bound if bound is not None else max(f.bound, g.bound)
    Df = CoderivationView(f, bound)
    Dg = CoderivationView(g, bound)
    sign = parity_sign(f.degree * g.degree)
    weak = f.weak or g.weak

    def commutator(word):
        out = Df(Dg(word))
        for w, c in Dg(Df(word)).items():
            accumulate(out, w, c * (-sign))
        return out

    return extract_corollas(commutator, f.source, f.source, f.degree + g.degree, bound, weak=weak)


def _compositions(total, parts):
    """Ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for cuts in itertools.combinations_with_replacement(range(total + 1), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


class CoalgebraMorphismView:
    """
    The coalgebra-morphism lift of a degree-0 family.

    The closed block is split into unordered closed-output blocks (each
    partition listed once, blocks ordered by least index) plus the closed
    parts of the ordered open-output blocks; the open block is cut
    consecutively. The sign is the Koszul sign of rearranging the letters.
    Weak constant members enter with ``1/j!`` for ``j`` equal closed constants.
    """

    def __init__(self, family, bound=None):
        self.family = family
        self.source = family.source
        self.target = family.target
        self.bound = family.bound if bound is None else int(bound)

    def apply(self, word):
        closed, opens = word
        n, m = len(closed), len(opens)
        weak = self.family.weak
        letters = closed + opens
        degrees = [self.source.closed.degree(c) for c in closed] + [
            self.source.open.degree(o) for o in opens
        ]
        out = {}
        max_blocks = (n + m) if not weak else self.bound
        closed_constant = self.family.value("closed", (), ()) if weak else {}
        for j in range(0 if m == 0 else 1, max_blocks + 1):
            for qs in _compositions(m, j):
                for ps in itertools.product(range(n + 1), repeat=j):
                    if sum(ps) > n:
                        continue
                    if not weak and any(p == 0 and q == 0 for p, q in zip(ps, qs)):
                        continue
                    r = n - sum(ps)
                    for split in unshuffle_splits(n, (r,) + ps):
                        rest, parts = split[0], split[1:]
                        opos, open_blocks = n, []
                        for part, q in zip(parts, qs):
                            open_blocks.append((part, tuple(range(opos, opos + q))))
                            opos += q
                        for partition in set_partitions(rest):
                            if len(partition) + j > self.bound and weak:
                                continue
                            order = [i for block in partition for i in block]
                            for part, oblock in open_blocks:
                                order.extend(part)
                                order.extend(oblock)
                            sign = reorder_sign(order, degrees)
                            closed_values = [
                                self.family.value("closed", tuple(letters[i] for i in block), ())
                                for block in partition
                            ]
                            open_values = [
                                self.family.value(
                                    "open",
                                    tuple(letters[i] for i in part),
                                    tuple(letters[i] for i in oblock),
                                )
                                for part, oblock in open_blocks
                            ]
                            if any(not v for v in closed_values + open_values):
                                continue
                            extra = len(partition) + j
                            self._emit(out, closed_values, open_values, sign,
                                       closed_constant, extra)
        return out

    def _emit(self, out, closed_values, open_values, sign, constant, used):
        counts = range(max(self.bound - used, 0) + 1) if constant else (0,)
        for k in counts:
            cvals = closed_values + [constant] * k
            scale = inverse_factorial(k)
            for combo in itertools.product(*[list(v.items()) for v in cvals + open_values]):
                coef = ONE * (sign * scale)
                for _, c in combo:
                    coef = smul(coef, c)
                names = [name for name, _ in combo]
                csign, key = canonical_closed(self.target, tuple(names[: len(cvals)]))
                if not csign:
                    continue
                accumulate(out, (key, tuple(names[len(cvals) :])), coef * csign)

    def __call__(self, combo):
        if isinstance(combo, tuple):
            combo = {combo: ONE}
        return _apply_linear(self.apply, combo)


def lift_morphism(family, bound=None):
    """Lift a degree-0 family to a coalgebra morphism."""
    if family.degree != 0:
        raise DegreeError(f"morphism components must have degree 0, got {family.degree}")
    return CoalgebraMorphismView(family, bound)


def check_morphism_lift(F, bound=None):
    """``(F ⊗ F) Δ = Δ F`` on all basis words up to the bound (strict families)."""
    bound = F.bound if bound is None else bound
    for word in words_up_to(F.source, bound, weak=False):
        lhs = coproduct_sum(F.target, F(word))
        rhs = {}
        for (left, right), coef in coproduct(F.source, word).items():
            fl, fr = F(left), F(right)
            for wl, cl in fl.items():
                for wr, cr in fr.items():
                    accumulate(rhs, (wl, wr), smul(smul(coef, cl), cr))
        for key, c in rhs.items():
            accumulate(lhs, key, -c)
        if lhs:
            logger.debug("morphism lift fails on %s", word)
            return False
    return True


def compose_families(g, f, bound=None):
    """Components of ``G ∘ F`` (first ``f``, then ``g``) by corolla extraction."""
    bound = bound if bound is not None else min(f.bound, g.bound)
    F = CoalgebraMorphismView(f, bound)
    G = CoalgebraMorphismView(g, bound)
    weak = f.weak or g.weak
    return extract_corollas(lambda w: G(F(w)), f.source, g.target, 0, bound,
                            weak=weak, prefix=("f", "f"))


def intertwining_residual(f, source_structure, target_structure, bound=None):
    """
    Corollas of ``F ∘ D - D' ∘ F``; they all vanish iff ``f`` is a morphism.
    """
    bound = bound if bound is not None else f.bound
    F = CoalgebraMorphismView(f, bound)
    D = CoderivationView(source_structure, bound)
    Dt = CoderivationView(target_structure, bound)
    weak = f.weak or source_structure.weak or target_structure.weak

    def residual(word):
        out = F(D(word))
        for w, c in Dt(F(word)).items():
            accumulate(out, w, -c)
        return out

    return extract_corollas(residual, f.source, f.target, 1, bound, weak=weak)
