#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Minimal Models
==============

Homotopy transfer of an OCHA onto its cohomology by sums over trees,
the decomposition into a minimal and a linear contractible part, and the
inverse quasi-isomorphism built from that decomposition.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "TransferResult",
    "Decomposition",
    "transfer_minimal",
    "check_transfer",
    "decompose",
    "quasi_inverse",
    "compare_minimal_models",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import logging
from dataclasses import dataclass
from functools import lru_cache

from ..coalgebra.lifts import CoalgebraMorphismView, CoderivationView
from ..coalgebra.words import basis_words, length_one_part
from ..core.family import MapFamily
from ..core.graded import accumulate, add_scaled
from ..core.linalg import inverse, solve
from ..core.scalars import ONE, QQ
from ..errors import AxiomError, BoundError, OchaError
from ..report import Report
from ..structures.checks import check_ocha
from ..structures.morphisms import check_morphism, check_quasi_isomorphism, compose_morphisms
from ..structures.ocha import OchaMorphism, OchaStructure, direct_sum
from ..trees.represent import evaluate_tree
from ..trees.tree import Tree, enumerate_trees
from .hodge import hodge_decompose

logger = logging.getLogger(__name__)

_NORMALIZED = (
    (("closed", 2, 0), ("l", 2, 0)),
    (("open", 0, 2), ("n", 0, 2)),
    (("open", 1, 0), ("n", 1, 0)),
)


@dataclass
class TransferResult:
    """
    Output of :func:`transfer_minimal`.

    Attributes
    ----------
    structure : OchaStructure
        The minimal structure on the cohomology.
    iota : OchaMorphism
        Quasi-isomorphism extending ``ι``.
    contraction : Contraction
    pi : OchaMorphism or None
        Filled in by :func:`quasi_inverse`.
    homotopy : CoalgebraContraction or None
        Filled in by :func:`~ochax.transfer.perturbation.contraction_homotopy`.
    """

    structure: OchaStructure
    iota: OchaMorphism
    contraction: object
    bound: int
    report: Report = None
    pi: OchaMorphism = None
    homotopy: object = None


@dataclass
class Decomposition:
    """``S ≅ minimal ⊕ contractible`` through ``isomorphism: total -> S``."""

    minimal: OchaStructure
    contractible: OchaStructure
    total: OchaStructure
    isomorphism: OchaMorphism
    transfer: TransferResult


@lru_cache(maxsize=None)
def _stable_trees(p, q, closed_output):
    if closed_output:
        trees = enumerate_trees("L", closed=p) if not q else []
    else:
        trees = enumerate_trees("OC", closed=p, open=q)
    return tuple(T for T in trees if T.vertices)


def _tree_tables(S, C, bound, root):
    """Tree sums over canonical words of ``H̄``, keyed like a map family."""
    small = C.small
    tables = {}
    for total in range(1, bound + 1):
        for p in range(total + 1):
            q = total - p
            if (p and not small.closed.dimension) or (q and not small.open.dimension):
                continue
            for closed_output in (True, False):
                if closed_output and (q or not S.closed.dimension):
                    continue
                if not closed_output and not S.open.dimension:
                    continue
                sector = "closed" if closed_output else "open"
                trees = _stable_trees(p, q, closed_output)
                if not trees:
                    continue
                table = {}
                for closed, opens in basis_words(small, p, q):
                    value = {}
                    for T in trees:
                        add_scaled(value, evaluate_tree(T, S, closed, opens, C.leaf, C.edge,
                                                        root, small))
                    if value:
                        table[closed + opens] = value
                if table:
                    tables[(sector, p, q)] = table
    return tables


def _letter_table(func, space):
    table = {}
    for name in space.names:
        value = func({name: ONE})
        if value:
            table[(name,)] = value
    return table


def transfer_minimal(S, C=None, bound=None, verify=True):
    """
    Transfer ``S`` onto ``H(S, l_1 + n_{0,1})``.

    Every operation is a sum over stable trees with leaves ``ι``, internal
    edges ``-h`` and root ``π``; the root ``-h`` gives the components of
    ``ι̂``.

    Parameters
    ----------
    S : OchaStructure
    C : Contraction, optional
        Defaults to :func:`~ochax.transfer.hodge.hodge_decompose` of ``S``.
    bound : int, optional
        Arity bound, at most ``S.bound``.
    verify : bool
        Validate ``S`` first and assert the postconditions afterwards.

    Raises
    ------
    BoundError
        If ``bound`` exceeds the bound of ``S``.
    AxiomError
        If ``S`` is not a valid OCHA.
    OchaError
        For weak input or a failed postcondition.
    """
    bound = S.bound if bound is None else int(bound)
    if bound > S.bound:
        raise BoundError(f"transfer to arity {bound} needs data to arity {bound}, have {S.bound}")
    if S.weak:
        raise OchaError("homotopy transfer needs a structure without curvature")
    if verify:
        report = check_ocha(S, bound, bound)
        if not report.passed:
            raise AxiomError("OCHA", f"{len(report.violations)} violated relation instances")
    C = hodge_decompose(S) if C is None else C

    small = C.small
    minimal = OchaStructure(small, MapFamily(small, small, 1, _tree_tables(S, C, bound, C.root_pi),
                                             bound=bound), bound)
    maps = _tree_tables(S, C, bound, C.root_h)
    maps[("closed", 1, 0)] = _letter_table(C.closed.include, small.closed)
    maps[("open", 0, 1)] = _letter_table(C.open.include, small.open)
    iota = OchaMorphism(minimal, S, MapFamily(small, S.space, 0, maps, bound=bound,
                                               prefix=("f", "f")), bound)
    result = TransferResult(minimal, iota, C, bound)
    logger.info("transferred %r", minimal)
    if verify:
        result.report = check_transfer(result)
        if not result.report.passed:
            raise OchaError(f"transfer postconditions fail:\n{result.report.to_text()}")
    return result


def check_transfer(result):
    """
    Postconditions of a transfer.

    The minimal structure is valid, ``ι̂`` is a quasi-isomorphism and
    ``l'_2 = π l_2 (ι⊗ι)``, ``n'_{0,2} = π n_{0,2} (ι⊗ι)``,
    ``n'_{1,0} = π n_{1,0} ι`` hold as tables.
    """
    bound = result.bound
    small, S, C = result.structure, result.contraction.structure, result.contraction
    report = Report(f"check_transfer(bound={bound})", {"n_max": bound, "m_max": bound})
    report.extend(check_ocha(small, bound, bound), prefix="minimal:")
    report.fact("minimal", small.is_minimal())
    report.extend(check_morphism(result.iota, bound), prefix="iota:")
    report.fact("quasi_isomorphism", check_quasi_isomorphism(result.iota))
    for key, (kind, p, q) in _NORMALIZED:
        if key[1] + key[2] > bound:
            continue
        corolla = Tree.corolla(kind, p, q)
        for closed, opens in basis_words(small.space, p, q):
            expected = evaluate_tree(corolla, S, closed, opens, C.leaf, None, C.root_pi,
                                     small.space)
            add_scaled(expected, small.family.value(key[0], closed, opens), -1)
            if expected:
                report.add(f"normalization:{corolla.vertex_name()}", p, q, closed + opens,
                           expected)
    return report.finish()


def _contractible_structure(C, bound):
    """``(B ⊕ Y, d)`` with ``d(y_i) = b_i``, named after the splitting."""
    bases, tables = {}, {}
    for sector, split in (("closed", C.closed), ("open", C.open)):
        part = split.contractible_part()
        bases[sector] = tuple((name, deg) for name, deg, _ in part)
        exact = {name for name, _, _ in split.exact}
        table = {}
        for name, _, vec in split.coexact:
            image = split.coordinates(split.differential(vec))
            table[(name,)] = {k: v for k, v in image.items() if k in exact}
        tables[sector] = table
    return OchaStructure.from_tables(
        bases["closed"], bases["open"],
        l={1: tables["closed"]} if tables["closed"] else None,
        n={(0, 1): tables["open"]} if tables["open"] else None,
        bound=bound,
    )


def _linear_tables(C):
    closed = {(n,): dict(v) for n, v in C.closed.representatives.items()}
    opened = {(n,): dict(v) for n, v in C.open.representatives.items()}
    for split, table in ((C.closed, closed), (C.open, opened)):
        for name, _, vec in split.contractible_part():
            table[(name,)] = dict(vec)
    return closed, opened


def _output_sectors(word, target):
    closed, opens = word
    sectors = []
    if not opens and target.closed.dimension:
        sectors.append("closed")
    if target.open.dimension:
        sectors.append("open")
    return sectors


def _solve_arity(n, maps, total, S, minimal_names, bound):
    """Fill the length-``n`` components on words meeting the contractible part."""
    source, target = total.space, S.space
    words = [
        w for p in range(n + 1) for w in basis_words(source, p, n - p)
        if any(x not in minimal_names for x in w[0] + w[1])
    ]
    if not words:
        return
    unknowns = []
    for w in words:
        degree = sum(source.degree(x) for x in w[0] + w[1])
        for sector in _output_sectors(w, target):
            if n == 1 and (sector == "closed") == bool(w[0]):
                continue
            for letter in target.space(sector).names_in_degree(degree):
                unknowns.append((w, sector, letter))
    rows = [(w, sector, letter) for w in words for sector in _output_sectors(w, target)
            for letter in target.space(sector).names]
    if not unknowns:
        return
    col = {u: j for j, u in enumerate(unknowns)}
    row = {r: i for i, r in enumerate(rows)}
    matrix = [[QQ(0)] * len(unknowns) for _ in rows]

    linear = CoderivationView(total.family.restricted(lambda k: k[1] + k[2] == 1), bound)
    unary = S.family.restricted(lambda k: k[1] + k[2] == 1)
    for w in words:
        for image, coef in linear(w).items():
            for sector in _output_sectors(image, target):
                for letter in target.space(sector).names:
                    j = col.get((image, sector, letter))
                    if j is not None:
                        matrix[row[(w, sector, letter)]][j] += coef
    for (w, sector, letter), j in col.items():
        key = ((letter,), ()) if sector == "closed" else ((), (letter,))
        for out_sector in ("closed", "open"):
            for out, coef in unary.value(out_sector, *key).items():
                matrix[row[(w, out_sector, out)]][j] -= coef

    family = MapFamily(source, target, 0, maps, bound=bound, prefix=("f", "f"))
    F = CoalgebraMorphismView(family, bound)
    D, Dt = CoderivationView(total.family, bound), CoderivationView(S.family, bound)
    rhs = [QQ(0)] * len(rows)
    for w in words:
        residual = F(D(w))
        for k, c in Dt(F(w)).items():
            accumulate(residual, k, -c)
        for (sector, letter), coef in length_one_part(residual).items():
            rhs[row[(w, sector, letter)]] -= coef
    x = solve(matrix, rhs, len(unknowns))
    if x is None:
        raise OchaError(f"no isomorphism component at arity {n}")
    for (w, sector, letter), value in zip(unknowns, x):
        if value:
            key = (sector, len(w[0]), len(w[1]))
            entry = maps.setdefault(key, {}).setdefault(w[0] + w[1], {})
            accumulate(entry, letter, value)


def decompose(S, bound=None, result=None):
    """
    ``S`` as the direct sum of its minimal model and ``(B ⊕ Y, d)``.

    The isomorphism is ``ι ⊕ j`` in arity one and ``ι̂`` on words of
    cohomology letters; the remaining components are solved arity by arity
    from the morphism relations, with lowest-index pivots.

    Raises
    ------
    BoundError
        If ``bound`` exceeds the bound of ``S``.
    """
    bound = S.bound if bound is None else int(bound)
    if bound > S.bound:
        raise BoundError(f"decomposition to arity {bound} exceeds the bound {S.bound}")
    result = transfer_minimal(S, bound=bound) if result is None else result
    C = result.contraction
    minimal, contractible = result.structure, _contractible_structure(C, bound)
    total = direct_sum(minimal, contractible)
    total = OchaStructure(total.space, total.family, bound)

    maps = {key: {k: dict(v) for k, v in fmap.table.items()}
            for key, fmap in result.iota.family.items()}
    maps[("closed", 1, 0)], maps[("open", 0, 1)] = _linear_tables(C)
    minimal_names = set(minimal.closed.names) | set(minimal.open.names)
    for n in range(1, bound + 1):
        _solve_arity(n, maps, total, S, minimal_names, bound)
    family = MapFamily(total.space, S.space, 0, maps, bound=bound, prefix=("f", "f"))
    iso = OchaMorphism(total, S, family, bound)
    logger.info("decomposition: minimal %r, contractible dim (%d, %d)", minimal,
                contractible.closed.dimension, contractible.open.dimension)
    return Decomposition(minimal, contractible, total, iso, result)


def _word_basis(space, n):
    return [w for p in range(n + 1) for w in basis_words(space, p, n - p)]


def _inverse_morphism(F, bound):
    """The inverse of a coalgebra isomorphism, arity by arity."""
    source, target = F.source.space, F.target.space
    linear = CoalgebraMorphismView(
        F.family.restricted(lambda k: k[1] + k[2] == 1), bound)
    lifted = CoalgebraMorphismView(F.family, bound)
    maps = {}
    for n in range(1, bound + 1):
        domain, codomain = _word_basis(source, n), _word_basis(target, n)
        index = {w: i for i, w in enumerate(codomain)}
        columns = []
        for w in domain:
            column = [QQ(0)] * len(codomain)
            for image, coef in linear(w).items():
                column[index[image]] += coef
            columns.append(column)
        inv = inverse(columns)
        G = CoalgebraMorphismView(
            MapFamily(target, source, 0, maps, bound=bound, prefix=("f", "f")), bound)
        defects = []
        for w in domain:
            defect = {} if n > 1 else {("closed" if w[0] else "open", (w[0] + w[1])[0]): ONE}
            for k, c in length_one_part(G(lifted(w))).items():
                accumulate(defect, k, -c)
            defects.append(defect)
        for j, v in enumerate(codomain):
            value = {}
            for i, defect in enumerate(defects):
                if inv[i][j]:
                    for k, c in defect.items():
                        accumulate(value, k, c * inv[i][j])
            for (sector, letter), coef in value.items():
                key = (sector, len(v[0]), len(v[1]))
                entry = maps.setdefault(key, {}).setdefault(v[0] + v[1], {})
                accumulate(entry, letter, coef)
    return maps


def quasi_inverse(result, bound=None):
    """
    ``π̂`` with ``π̂ ∘ ι̂ = 1`` for a transfer result.

    The decomposition isomorphism is inverted arity by arity and followed by
    the projection onto the minimal summand.

    Raises
    ------
    OchaError
        If ``result`` does not come from :func:`transfer_minimal`.
    """
    if not isinstance(result, TransferResult):
        raise OchaError("quasi_inverse is constructed only for transfer results")
    bound = result.bound if bound is None else min(int(bound), result.bound)
    S = result.contraction.structure
    decomposition = decompose(S, bound, result)
    inverse_maps = _inverse_morphism(decomposition.isomorphism, bound)
    minimal = result.structure
    keep = set(minimal.closed.names) | set(minimal.open.names)
    maps = {}
    for key, table in inverse_maps.items():
        projected = {}
        for word, vec in table.items():
            vec = {k: v for k, v in vec.items() if k in keep}
            if vec:
                projected[word] = vec
        if projected:
            maps[key] = projected
    family = MapFamily(S.space, minimal.space, 0, maps, bound=bound, prefix=("f", "f"))
    result.pi = OchaMorphism(S, minimal, family, bound)
    return result.pi


def compare_minimal_models(S, bound=None):
    """
    Relate the minimal models of two Hodge decompositions.

    Transfers through the lowest- and highest-pivot splittings and returns
    ``π̂_2 ∘ ι̂_1`` with a report checking that it is a morphism whose
    linear part is invertible.
    """
    bound = S.bound if bound is None else int(bound)
    first = transfer_minimal(S, hodge_decompose(S, "lowest"), bound)
    second = transfer_minimal(S, hodge_decompose(S, "highest"), bound)
    phi = compose_morphisms(quasi_inverse(second), first.iota, bound)
    report = Report(f"compare_minimal_models(bound={bound})", {"n_max": bound, "m_max": bound})
    report.extend(check_morphism(phi, bound))
    report.fact("linear_part_invertible", check_quasi_isomorphism(phi))
    return phi, report.finish()
