"""Dual generators of the Lie algebras attached to a graph, and monomials in them.

Generator order is fixed: vertex duals ``x_i*`` by vertex, then edge duals
``x_{i,j}*`` in lexicographic edge order, then clique duals ``y_k*`` by
ordinal. A monomial is a strictly increasing tuple of positions in that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Sequence, Tuple

from src.errors import GraphValidationError
from src.graphs.graph import EMPTY_FAMILY, CliqueFamily, Graph, vertices_to_mask


class GeneratorKind(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    CLIQUE = "clique"


# Contribution of each kind to the weight N = p + 2q.
KIND_WEIGHT = {GeneratorKind.VERTEX: 1, GeneratorKind.EDGE: 2, GeneratorKind.CLIQUE: 0}


@dataclass(frozen=True)
class GeneratorIndex:
    """One dual generator: its kind and payload (vertex, edge pair or clique ordinal)."""

    kind: GeneratorKind
    payload: Tuple[int, ...]

    @property
    def label(self) -> str:
        if self.kind == GeneratorKind.VERTEX:
            return f"x{self.payload[0]}*"
        if self.kind == GeneratorKind.EDGE:
            return f"x{{{self.payload[0]},{self.payload[1]}}}*"
        return f"y{self.payload[0]}*"


@dataclass(frozen=True)
class Monomial:
    """Basis element of the exterior complex.

    ``gens`` are generator positions; ``support`` is a vertex bitmask and
    ``weight`` the number N = p + 2q.
    """

    gens: Tuple[int, ...]
    support: int
    weight: int

    @property
    def degree(self) -> int:
        return len(self.gens)


class GeneratorTable:
    """Generator positions, supports and weights for ``L(G, Sigma)``."""

    def __init__(self, g: Graph, sigma: CliqueFamily = EMPTY_FAMILY):
        self.graph = g
        self.sigma = sigma
        self.generators: List[GeneratorIndex] = []
        self.generators += [GeneratorIndex(GeneratorKind.VERTEX, (v,)) for v in g.vertices]
        self.generators += [GeneratorIndex(GeneratorKind.EDGE, e) for e in g.edges]
        self.generators += [
            GeneratorIndex(GeneratorKind.CLIQUE, (k,)) for k in range(1, len(sigma) + 1)
        ]
        self.position: Dict[GeneratorIndex, int] = {gen: p for p, gen in enumerate(self.generators)}
        self.support: List[int] = [
            0 if gen.kind == GeneratorKind.CLIQUE else vertices_to_mask(gen.payload)
            for gen in self.generators
        ]
        self.weight: List[int] = [KIND_WEIGHT[gen.kind] for gen in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def vertex_count(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.size

    @property
    def clique_count(self) -> int:
        return len(self.sigma)

    def vertex(self, v: int) -> int:
        return v - 1

    def edge(self, u: int, v: int) -> int:
        key = GeneratorIndex(GeneratorKind.EDGE, (min(u, v), max(u, v)))
        try:
            return self.position[key]
        except KeyError:
            raise GraphValidationError(f"({u}, {v}) is not an edge") from None

    def clique(self, k: int) -> int:
        """Position of ``y_k*`` (``k`` is 1-based)."""
        if not 1 <= k <= len(self.sigma):
            raise GraphValidationError(f"Clique ordinal {k} outside 1..{len(self.sigma)}")
        return self.graph.n + self.graph.size + k - 1

    def monomial(self, gens: Iterable[int]) -> Monomial:
        """Build a monomial from strictly increasing generator positions."""
        gens = tuple(gens)
        if any(a >= b for a, b in zip(gens, gens[1:])):
            raise ValueError(f"Generator positions must be strictly increasing: {gens}")
        support = 0
        weight = 0
        for p in gens:
            support |= self.support[p]
            weight += self.weight[p]
        return Monomial(gens, support, weight)

    def label(self, m: Monomial) -> str:
        if not m.gens:
            return "1"
        return "".join(self.generators[p].label for p in m.gens)

    def labels(self, monomials: Sequence[Monomial]) -> List[str]:
        return [self.label(m) for m in monomials]
