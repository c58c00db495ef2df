#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Permutations and Koszul Signs
=============================

Permutations are 1-indexed image arrays: ``sigma`` sends the word
``(x_1, ..., x_n)`` to ``(x_sigma(1), ..., x_sigma(n))``. The Koszul sign is
the sign picked up by that reordering under ``x⊗y -> (-1)^{{|x||y|}} y⊗x``.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "Permutation",
    "koszul_sign",
    "reorder_sign",
    "unshuffles",
    "unshuffle_splits",
    "set_partitions",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
from dataclasses import dataclass

import numpy as np

from ..errors import ArityError


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}`` stored as its image array."""

    image: tuple

    def __post_init__(self):
        image = tuple(int(i) for i in self.image)
        arr = np.asarray(image, dtype=int)
        if arr.size and not np.array_equal(np.sort(arr), np.arange(1, arr.size + 1)):
            raise ValueError(f"{image} is not a permutation of 1..{arr.size}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    def __len__(self):
        return len(self.image)

    def __call__(self, i):
        return self.image[i - 1]

    def __mul__(self, other):
        """Composition ``(self * other)(i) = self(other(i))``."""
        if len(self) != len(other):
            raise ArityError("composing permutations of different sizes")
        return Permutation(tuple(self(other(i)) for i in range(1, len(self) + 1)))

    def inverse(self):
        inv = [0] * len(self)
        for i, j in enumerate(self.image, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def apply(self, word):
        """The reordered word ``(w_sigma(1), ..., w_sigma(n))``."""
        if len(word) != len(self):
            raise ArityError("word length differs from permutation size")
        return tuple(word[i - 1] for i in self.image)


def reorder_sign(order, degrees):
    """
    Koszul sign of listing items in ``order`` (0-based indices into ``degrees``).

    Returns +1 or -1.
    """
    parity = 0
    for pos, i in enumerate(order):
        if degrees[i] % 2:
            parity += sum(1 for j in order[:pos] if j > i and degrees[j] % 2)
    return -1 if parity % 2 else 1


def koszul_sign(sigma, degrees):
    """
    Koszul sign ``(-1)^{eps(sigma)}`` of reordering a word by ``sigma``.

    Parameters
    ----------
    sigma : Permutation
    degrees : sequence of int
        ``degrees[k-1]`` is the degree of the k-th letter of the original word.

    Returns
    -------
    int
        +1 or -1.

    Examples
    --------
    >>> koszul_sign(Permutation((2, 1)), (1, 1))
    -1
    """
    if len(degrees) != len(sigma):
        raise ArityError(f"{len(degrees)} degrees for a permutation of size {len(sigma)}")
    if len(sigma) < 2:
        return 1
    img = np.asarray(sigma.image, dtype=int) - 1
    deg = np.asarray(degrees, dtype=int)[img] % 2
    inverted = np.triu(img[:, None] > img[None, :], k=1)
    exponent = int(np.sum(inverted * np.outer(deg, deg)))
    return -1 if exponent % 2 else 1


def unshuffle_splits(n, blocks):
    """
    Yield the unshuffles of ``range(n)`` into consecutive blocks of the given sizes.

    Each item is a tuple of index tuples, increasing inside each block, in
    lexicographic order of the concatenated image.
    """
    if sum(blocks) != n:
        raise ArityError(f"block sizes {blocks} do not add up to {n}")

    def _rec(remaining, sizes):
        if not sizes:
            yield ()
            return
        for chosen in itertools.combinations(remaining, sizes[0]):
            rest = tuple(i for i in remaining if i not in chosen)
            for tail in _rec(rest, sizes[1:]):
                yield (chosen,) + tail

    yield from _rec(tuple(range(n)), tuple(blocks))


def unshuffles(blocks):
    """
    All permutations in ``S_{k_1,...,k_i}`` preserving the order inside blocks.

    Examples
    --------
    >>> [p.image for p in unshuffles((1, 1))]
    [(1, 2), (2, 1)]
    """
    if any(k < 0 for k in blocks):
        raise ValueError("block lengths must be non-negative")
    n = sum(blocks)
    out = []
    for split in unshuffle_splits(n, blocks):
        out.append(Permutation(tuple(i + 1 for block in split for i in block)))
    return out


def set_partitions(items):
    """
    Unordered partitions of ``items`` into nonempty blocks.

    Blocks are listed by least element and keep the input order inside, so
    each partition appears exactly once.
    """
    items = tuple(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k in range(len(rest) + 1):
        for companions in itertools.combinations(rest, k):
            remaining = tuple(i for i in rest if i not in companions)
            for tail in set_partitions(remaining):
                yield ((first,) + companions,) + tail
