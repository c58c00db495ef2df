#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Coalgebra Words
===============

Words of the mixed coalgebra ``C(Hc) ⊗ T^c(Ho)``. A word is a pair
``(closed, open)`` of letter tuples. The closed block stands for the
symmetrised tensor (sum over all orderings with Koszul signs, no
factorials) and is kept sorted canonically; the open block is ordered.
Plain ``T^c(A)`` words have an empty closed block, ``C(L)`` words an
empty open block.

A linear combination of words is a ``dict`` from word to coefficient.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "EMPTY_WORD",
    "word_length",
    "word_degree",
    "canonical_word",
    "basis_words",
    "words_up_to",
    "coproduct",
    "coproduct_sum",
    "length_one_part",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools

from ..core.graded import accumulate
from ..core.multimap import canonical_closed
from ..core.permutations import reorder_sign, unshuffle_splits
from ..core.scalars import ONE, parity_sign
from ..core.series import smul
from ..errors import BoundError

EMPTY_WORD = ((), ())


def word_length(word):
    return len(word[0]) + len(word[1])


def word_degree(space, word):
    return sum(space.closed.degree(c) for c in word[0]) + sum(
        space.open.degree(o) for o in word[1]
    )


def canonical_word(space, closed, opens):
    """Return ``(sign, word)`` with the closed block sorted; sign 0 if it vanishes."""
    sign, key = canonical_closed(space, tuple(closed))
    return sign, (key, tuple(opens))


def basis_words(space, n, m):
    """All canonical basis words with ``n`` closed and ``m`` open letters."""
    closed_names = sorted(space.closed.names, key=space.closed.sort_key)
    opens = list(itertools.product(space.open.names, repeat=m))
    for block in itertools.combinations_with_replacement(closed_names, n):
        if any(a == b and space.closed.degree(a) % 2 for a, b in zip(block, block[1:])):
            continue
        for o in opens:
            yield (tuple(block), tuple(o))


def words_up_to(space, bound, weak=False):
    """Basis words of total length ``1..bound`` (``0..bound`` when weak)."""
    start = 0 if weak else 1
    for total in range(start, bound + 1):
        for n in range(total + 1):
            m = total - n
            if n and not space.closed.dimension:
                continue
            if m and not space.open.dimension:
                continue
            yield from basis_words(space, n, m)


def coproduct(space, word, bound=None):
    """
    Coproduct of a single word.

    Returns a dict ``{(left, right): coefficient}``. For mixed words the
    split picks an unshuffle of the closed block and a cut of the open block,
    signed by ``(-1)^eps * (-1)^{(deg right closed)(deg left open)}``.
    """
    if bound is not None and word_length(word) > bound:
        raise BoundError(f"word of length {word_length(word)} exceeds bound {bound}")
    closed, opens = word
    n, m = len(closed), len(opens)
    cdeg = [space.closed.degree(c) for c in closed]
    odeg = [space.open.degree(o) for o in opens]
    out = {}
    for p in range(n + 1):
        for left, right in unshuffle_splits(n, (p, n - p)):
            eps = reorder_sign(left + right, cdeg)
            c_left = tuple(closed[i] for i in left)
            c_right = tuple(closed[i] for i in right)
            deg_right = sum(cdeg[i] for i in right)
            for q in range(m + 1):
                eta = deg_right * sum(odeg[:q])
                key = ((c_left, opens[:q]), (c_right, opens[q:]))
                accumulate(out, key, ONE * (eps * parity_sign(eta)))
    return out


def coproduct_sum(space, combo):
    """Coproduct extended linearly to a dict of words."""
    out = {}
    for word, coef in combo.items():
        for pair, c in coproduct(space, word).items():
            accumulate(out, pair, smul(coef, c))
    return out


def length_one_part(combo):
    """
    Project a combination of words onto the cogenerators.

    Returns ``{("closed" | "open", letter): coefficient}``.
    """
    out = {}
    for (closed, opens), coef in combo.items():
        if len(closed) == 1 and not opens:
            accumulate(out, ("closed", closed[0]), coef)
        elif len(opens) == 1 and not closed:
            accumulate(out, ("open", opens[0]), coef)
    return out
