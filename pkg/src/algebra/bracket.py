"""Lie bracket of ``L(G, Sigma)`` on its basis and the Jacobi identity check.

Nonzero brackets, with generators ordered as in ``GeneratorTable``::

    [x_i, x_j]      = x_{i,j}                    for every edge {i, j}, i < j
    [x_i, y_k]      = |{i} & sigma_k| x_i
    [x_{i,j}, y_k]  = |{i, j} & sigma_k| x_{i,j}
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import Dict, List, Tuple

from src.algebra.generators import GeneratorTable
from src.graphs.graph import EMPTY_FAMILY, CliqueFamily, Graph

# (a, b) with a < b  ->  {c: coefficient of generator c in [a, b]}
StructureConstants = Dict[Tuple[int, int], Dict[int, int]]
Vector = Dict[int, int]


def structure_constants_for(table: GeneratorTable) -> StructureConstants:
    g, sigma = table.graph, table.sigma
    out: StructureConstants = {}
    for u, v in g.edges:
        e = table.edge(u, v)
        out[(table.vertex(u), table.vertex(v))] = {e: 1}
    for k, clique in enumerate(sigma, start=1):
        y = table.clique(k)
        for v in sorted(clique):
            x = table.vertex(v)
            out[(x, y)] = {x: 1}
        for u, v in g.edges:
            mult = len({u, v} & clique)
            if mult:
                e = table.edge(u, v)
                out[(e, y)] = {e: mult}
    return out


def structure_constants(g: Graph, sigma: CliqueFamily = EMPTY_FAMILY) -> Dict[Tuple[str, str], Dict[str, int]]:
    """Nonzero brackets of ``L(g, sigma)`` keyed by generator labels.

    Example:
        structure_constants(named("complete", 2)) ==
        {('x1', 'x2'): {'x{1,2}': 1}}
    """
    table = GeneratorTable(g, sigma)
    name = [gen.label.rstrip("*") for gen in table.generators]
    return {
        (name[a], name[b]): {name[c]: coef for c, coef in image.items()}
        for (a, b), image in structure_constants_for(table).items()
    }


def bracket(constants: StructureConstants, left: Vector, right: Vector) -> Vector:
    """Bilinear, antisymmetric extension of the basis brackets."""
    out: Vector = defaultdict(int)
    for a, ca in left.items():
        for b, cb in right.items():
            if a == b:
                continue
            key, sign = ((a, b), 1) if a < b else ((b, a), -1)
            for c, coef in constants.get(key, {}).items():
                out[c] += sign * ca * cb * coef
    return {c: v for c, v in out.items() if v}


def jacobi_violations(table: GeneratorTable) -> List[Tuple[int, int, int]]:
    """Generator triples on which the Jacobi identity fails."""
    constants = structure_constants_for(table)
    bad = []
    for a, b, c in combinations(range(len(table)), 3):
        total: Vector = defaultdict(int)
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            for z, coef in bracket(constants, {p: 1}, bracket(constants, {q: 1}, {r: 1})).items():
                total[z] += coef
        if any(total.values()):
            bad.append((a, b, c))
    return bad


def jacobi_check(g: Graph, sigma: CliqueFamily = EMPTY_FAMILY) -> bool:
    """True iff the bracket satisfies Jacobi and ``Q(Q(z*)) = 0`` on every generator.

    ``Q`` squared is a derivation, so vanishing on generators is the same
    statement as Jacobi on the dual side.
    """
    from src.algebra.complex import ExteriorComplex

    table = GeneratorTable(g, sigma)
    if jacobi_violations(table):
        return False
    cx = ExteriorComplex(g, sigma)
    for p in range(len(table)):
        total: Vector = defaultdict(int)
        for gens, coef in cx.apply((p,)).items():
            for out, c in cx.apply(gens).items():
                total[out] += coef * c
        if any(total.values()):
            return False
    return True
