#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Exact Linear Algebra
====================

Thin helpers over :class:`sympy.polys.matrices.DomainMatrix` on ``QQ``:
row reduction, kernels, complements, inverses and particular solutions.
Vectors are plain lists of ``QQ`` elements; matrices are lists of rows.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "row_reduce",
    "rank",
    "kernel_basis",
    "extend_basis",
    "inverse",
    "solve",
    "mat_vec",
]

__doc__ = __doc__.format("\n   ".join(__all__))

from sympy.polys.matrices import DomainMatrix

from .scalars import QQ


def _dm(rows, ncols):
    return DomainMatrix([[QQ(0) + x for x in row] for row in rows], (len(rows), ncols), QQ)


def row_reduce(rows, ncols):
    """
    Reduced row echelon form.

    Returns
    -------
    rref : list of list
        Nonzero rows only.
    pivots : tuple of int
    """
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = _dm(rows, ncols).rref()
    dense = reduced.to_list()
    return [dense[i] for i in range(len(pivots))], tuple(pivots)


def rank(vectors, ncols):
    return len(row_reduce(vectors, ncols)[1])


def kernel_basis(rows, ncols):
    """Basis of ``{x : A x = 0}`` for ``A`` given by ``rows`` (``ncols`` columns)."""
    reduced, pivots = row_reduce(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        vec = [QQ(0)] * ncols
        vec[f] = QQ(1)
        for row, piv in zip(reduced, pivots):
            vec[piv] = -row[f]
        basis.append(vec)
    return basis


def extend_basis(independent, candidates, ncols):
    """
    Greedily append candidates that raise the rank.

    Returns only the appended vectors, in the order taken.
    """
    current = [list(v) for v in independent]
    r = rank(current, ncols)
    added = []
    for cand in candidates:
        trial = current + [list(cand)]
        r_new = rank(trial, ncols)
        if r_new > r:
            current, r = trial, r_new
            added.append(list(cand))
    return added


def inverse(columns):
    """
    Inverse of the square matrix whose columns are ``columns``.

    Returns the inverse as a list of rows.
    """
    n = len(columns)
    if n == 0:
        return []
    rows = [[columns[j][i] for j in range(n)] for i in range(n)]
    aug = [row + [QQ(1) if i == k else QQ(0) for k in range(n)] for i, row in enumerate(rows)]
    reduced, pivots = row_reduce(aug, 2 * n)
    if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced[:n]]


def mat_vec(rows, vec):
    return [sum((a * b for a, b in zip(row, vec)), QQ(0)) for row in rows]


def solve(rows, rhs, ncols):
    """
    Particular solution of ``A x = b`` with free variables set to zero.

    Pivots are taken at the lowest column index, so the output is
    deterministic. Returns None when the system is inconsistent.
    """
    if not rows:
        return [QQ(0)] * ncols
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = row_reduce(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [QQ(0)] * ncols
    for row, piv in zip(reduced, pivots):
        x[piv] = row[ncols]
    return x
