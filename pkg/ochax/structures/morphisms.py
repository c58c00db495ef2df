#!/usr/bin/env python
# Copyright (c) 2024-2025, ochax developers.
# Distributed under the MIT License. See LICENSE for more info.

"""
Morphisms
=========

Morphism relations checked directly and through the coalgebra lifts,
composition, quasi-isomorphism detection and the adjoint L∞-map
``ρ : Hc -> Coder(T^c Ho)``.

.. autosummary::
   :nosignatures:
   :toctree: generated/

   {}
"""

__all__ = [
    "check_morphism",
    "compose_morphisms",
    "check_quasi_isomorphism",
    "AdjointMap",
    "adjoint_l_infinity_map",
]

__doc__ = __doc__.format("\n   ".join(__all__))

import itertools
import logging

from ..coalgebra.lifts import compose_families, gerstenhaber_bracket, intertwining_residual
from ..coalgebra.words import basis_words
from ..core.family import MapFamily
from ..core.graded import GradedSpace, OCSpace, accumulate, add_scaled
from ..core.linalg import rank
from ..core.permutations import reorder_sign, set_partitions, unshuffle_splits
from ..core.scalars import ONE, QQ, inverse_factorial
from ..core.series import smul
from ..errors import AxiomError, SectorError
from ..report import Report
from .checks import _closed_relation, _open_relation, check_ocha, relation_cells
from .cohomology import structure_splittings
from .ocha import OchaMorphism

logger = logging.getLogger(__name__)


def _expand(structure, sector, closed_values, open_values):
    """Apply a target member multilinearly to vector arguments."""
    out = {}
    vectors = [list(v.items()) for v in closed_values + open_values]
    split = len(closed_values)
    for combo in itertools.product(*vectors):
        coef = ONE
        for _, c in combo:
            coef = smul(coef, c)
        names = [name for name, _ in combo]
        add_scaled(out, structure.value(sector, tuple(names[:split]), tuple(names[split:])), coef)
    return out


def _target_side(F, closed, opens, sector):
    """``(𝔩' + 𝔫') ∘ 𝔣`` projected on one output letter block."""
    f, target = F.family, F.target.family
    n, m = len(closed), len(opens)
    letters = closed + opens
    degrees = [F.source.closed.degree(c) for c in closed] + [F.source.open.degree(o) for o in opens]
    constant = f.value("closed", (), ()) if f.weak else {}
    bound = F.bound
    out = {}
    if sector == "closed":
        slots = [0]
    else:
        slots = range(1, (n + m if not f.weak else bound) + 1)
    for j in slots:
        for qs in _cuts(m, j):
            for ps in itertools.product(range(n + 1), repeat=j):
                if sum(ps) > n:
                    continue
                if not f.weak and any(p == 0 and q == 0 for p, q in zip(ps, qs)):
                    continue
                for split in unshuffle_splits(n, (n - sum(ps),) + ps):
                    rest, parts = split[0], split[1:]
                    blocks, start = [], n
                    for part, q in zip(parts, qs):
                        blocks.append((part, tuple(range(start, start + q))))
                        start += q
                    for partition in set_partitions(rest):
                        order = [i for block in partition for i in block]
                        for part, oblock in blocks:
                            order += list(part) + list(oblock)
                        sign = reorder_sign(order, degrees)
                        cvals = [f.value("closed", tuple(letters[i] for i in b), ()) for b in partition]
                        ovals = [
                            f.value("open", tuple(letters[i] for i in part), tuple(letters[i] for i in ob))
                            for part, ob in blocks
                        ]
                        if any(not v for v in cvals + ovals):
                            continue
                        extra = range(max(bound - len(partition) - j, 0) + 1) if constant else (0,)
                        for k in extra:
                            value = _expand(target, sector, cvals + [constant] * k, ovals)
                            add_scaled(out, value, inverse_factorial(k) * sign)
    return out


def _cuts(m, j):
    if j == 0:
        if m == 0:
            yield ()
        return
    for cuts in itertools.combinations_with_replacement(range(m + 1), j - 1):
        ends = (0,) + cuts + (m,)
        yield tuple(b - a for a, b in zip(ends, ends[1:]))


def check_morphism(F, bound=None):
    """
    Morphism relations ``𝔣 ∘ (𝔩 + 𝔫) = (𝔩' + 𝔫') ∘ 𝔣`` on every basis word.

    The direct componentwise evaluation is compared with the corollas of
    :func:`~ochax.coalgebra.lifts.intertwining_residual`; the fact
    ``coalgebra_agrees`` records whether both find the same cells.

    Returns
    -------
    Report
        Violations of kinds ``"morphism:closed"`` and ``"morphism:open"``.
    """
    bound = F.bound if bound is None else bound
    weak = F.weak or F.source.weak or F.target.weak
    report = Report(f"check_morphism(bound={bound})", {"n_max": bound, "m_max": bound})
    source = F.source.space
    for total in range(0 if weak else 1, bound + 1):
        for n in range(total + 1):
            m = total - n
            if (n and not source.closed.dimension) or (m and not source.open.dimension):
                continue
            for closed, opens in basis_words(source, n, m):
                if m == 0 and source.closed.dimension:
                    degrees = [source.closed.degree(c) for c in closed]
                    residual = _closed_relation(F.family, F.source.family, closed, degrees)
                    add_scaled(residual, _target_side(F, closed, (), "closed"), -1)
                    if residual:
                        report.add("morphism:closed", n, 0, closed, residual)
                if F.target.open.dimension:
                    residual = _open_relation(F.family, F.source.family, closed, opens)
                    add_scaled(residual, _target_side(F, closed, opens, "open"), -1)
                    if residual:
                        report.add("morphism:open", n, m, closed + opens, residual)
    coalgebra = intertwining_residual(F.family, F.source.family, F.target.family, bound)
    cells = {(k[0], k[1], k[2], key) for k, fmap in coalgebra.items() for key in fmap.table}
    report.fact("coalgebra_agrees", cells == relation_cells(report))
    return report.finish()


def compose_morphisms(G, F, bound=None):
    """
    ``G ∘ F`` through the coalgebra lifts (first ``F``, then ``G``).

    Raises
    ------
    SectorError
        If the target of ``F`` is not the source of ``G``.
    """
    if F.target.space != G.source.space:
        raise SectorError("morphisms are not composable")
    bound = min(F.bound, G.bound) if bound is None else bound
    family = compose_families(G.family, F.family, bound)
    return OchaMorphism(F.source, G.target, family, bound)


def _induced_matrix(f, sector, source_split, target_split):
    reps = source_split.cohomology_space
    rows = []
    for name in reps.names:
        image = {}
        for letter, coef in source_split.representatives[name].items():
            key = ((letter,), ()) if sector == "closed" else ((), (letter,))
            add_scaled(image, f.value(sector, *key), coef)
        rows.append(target_split.project(image))
    return rows


def check_quasi_isomorphism(F):
    """
    Whether ``f_1 + f_{0,1}`` induces an isomorphism on ``H(H, l_1 + n_{0,1})``.
    """
    sources = structure_splittings(F.source)
    targets = structure_splittings(F.target)
    for sector, src, tgt in zip(("closed", "open"), sources, targets):
        if src.betti() != tgt.betti():
            logger.info("%s cohomology dimensions differ: %s vs %s", sector, src.betti(), tgt.betti())
            return False
        images = _induced_matrix(F.family, sector, src, tgt)
        for degree in src.cohomology_space.degrees():
            names = src.cohomology_space.names_in_degree(degree)
            columns = tgt.cohomology_space.names_in_degree(degree)
            matrix = [
                [QQ(0) + images[src.cohomology_space.index(nm)].get(c, 0) for c in columns]
                for nm in names
            ]
            if rank(matrix, len(columns)) != len(names):
                return False
    return True


class AdjointMap:
    """
    ``ρ_p(c_1, ..., c_p) = {n_{p,q}(c_1, ..., c_p; -)}_q`` as map families on ``Ho``.

    Parameters
    ----------
    S : OchaStructure
    """

    def __init__(self, S):
        self.structure = S
        self.open_space = OCSpace(GradedSpace("closed"), S.open)
        self.bound = max(S.bound - 1, 1)
        self.m_family = MapFamily(
            self.open_space, self.open_space, 1,
            {k: f.table for k, f in S.family.items() if k[0] == "open" and k[1] == 0},
            self.bound, S.weak,
        )

    def component(self, closed_letters):
        """``ρ_p`` on basis letters: an A∞-type weak family of degree ``|c|+1``."""
        p = len(closed_letters)
        degree = sum(self.structure.closed.degree(c) for c in closed_letters) + 1
        maps = {}
        for (sector, pp, q), fmap in self.structure.family.items():
            if sector != "open" or pp != p:
                continue
            table = {}
            for _, opens in basis_words(self.open_space, 0, q):
                value = fmap.apply_basis(tuple(closed_letters), opens)
                if value:
                    table[opens] = value
            maps[("open", 0, q)] = table
        return MapFamily(self.open_space, self.open_space, degree, maps, self.bound, weak=True,
                         prefix=("r", "r"))

    def __call__(self, vector, degree):
        """``ρ_1`` extended linearly to a closed vector of the given degree."""
        maps = {}
        for letter, coef in vector.items():
            for key, fmap in self.component((letter,)).items():
                table = maps.setdefault(key, {})
                for k, v in fmap.table.items():
                    add_scaled(table.setdefault(k, {}), v, coef)
        return MapFamily(self.open_space, self.open_space, degree + 1, maps, self.bound,
                         weak=True, prefix=("r", "r"))

    def chain_residual(self, letter):
        """Corollas of ``ρ(l_1 c) + [𝔪, ρ(c)]``."""
        degree = self.structure.closed.degree(letter)
        differential = self.structure.family.value("closed", (letter,), ())
        bracket = gerstenhaber_bracket(self.m_family, self.component((letter,)), self.bound)
        residual = {}
        for key, fmap in bracket.items():
            for k, v in fmap.table.items():
                add_scaled(residual.setdefault(k, {}), v)
        if differential:
            for key, fmap in self(differential, degree + 1).items():
                for k, v in fmap.table.items():
                    add_scaled(residual.setdefault(k, {}), v)
        return {k: v for k, v in residual.items() if v}

    def check(self):
        """``ρ`` is a chain map: ``ρ(l_1 c) = -[𝔪, ρ(c)]`` on every closed letter."""
        report = Report("adjoint_l_infinity_map", {"n_max": 1, "m_max": self.bound})
        for letter in self.structure.closed.names:
            for opens, vec in sorted(self.chain_residual(letter).items()):
                report.add("rho", 1, len(opens), (letter,) + opens, vec)
        return report.finish()

    def exactness_witness(self, splitting, vector, degree):
        """
        For an ``l_1``-exact ``b``, return ``x = h(b)`` with ``l_1 x = b``.

        ``ρ(b)`` then equals ``-[𝔪, ρ(x)]``; the second return value says
        whether that identity holds on every open word within the bound.
        """
        x = splitting.homotopy(vector)
        back = splitting.differential(x)
        add_scaled(back, vector, -1)
        if back:
            raise ValueError("vector is not l_1-exact")
        rho_b = self(vector, degree)
        rho_x = self(x, degree - 1)
        bracket = gerstenhaber_bracket(self.m_family, rho_x, self.bound)
        total = {}
        for family in (rho_b, bracket):
            for fmap in family.values():
                for k, v in fmap.table.items():
                    for letter, c in v.items():
                        accumulate(total, (k, letter), c)
        return x, not total

    def __repr__(self):
        return f"AdjointMap(bound={self.bound})"


def adjoint_l_infinity_map(S, verify=True):
    """
    The adjoint map of an OCHA.

    Raises
    ------
    AxiomError
        If ``S`` is not a valid OCHA within its bound.
    """
    if verify:
        report = check_ocha(S)
        if not report.passed:
            raise AxiomError("AovL", f"{len(report.violations)} violated relation instances")
    return AdjointMap(S)
