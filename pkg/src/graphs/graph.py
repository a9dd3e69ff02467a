"""Finite simple graphs, clique families and the basic graph operations.

Vertices are 1-indexed on every public surface. Edges are stored as sorted
pairs ``(i, j)`` with ``i < j`` in lexicographic order; that order is the edge
part of the generator order used by the exterior complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from src.errors import CliqueError, GraphValidationError

Edge = Tuple[int, int]
VertexSet = FrozenSet[int]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices ``1..n``."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"Negative vertex count: {self.n}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise GraphValidationError(f"Self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= self.n:
                    raise GraphValidationError(f"Vertex {w} out of range 1..{self.n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, deduplicating symmetric and repeated pairs."""
        return cls(n=n, edges=tuple((int(u), int(v)) for u, v in edges))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @property
    def generator_count(self) -> int:
        """Dimension of the Dani-Mainkar algebra, |V| + |E|."""
        return self.n + len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    def degree(self, v: int) -> int:
        return bin(self.neighbor_masks[v - 1]).count("1")

    def degrees(self) -> List[int]:
        return [self.degree(v) for v in self.vertices]

    @property
    def _edge_set(self) -> FrozenSet[Edge]:
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    @property
    def neighbor_masks(self) -> Tuple[int, ...]:
        """Per-vertex neighbourhood bitmasks; bit ``k`` is vertex ``k + 1``."""
        cached = self.__dict__.get("_masks_cache")
        if cached is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u - 1] |= 1 << (v - 1)
                masks[v - 1] |= 1 << (u - 1)
            cached = tuple(masks)
            object.__setattr__(self, "_masks_cache", cached)
        return cached

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Relabel the nodes of ``g`` to ``1..n`` in sorted node order."""
        order = {node: k + 1 for k, node in enumerate(sorted(g.nodes()))}
        return cls.from_edges(len(order), ((order[u], order[v]) for u, v in g.edges()))

    def summary(self) -> dict:
        return {"order": self.n, "size": self.size, "degrees": self.degrees()}


@dataclass(frozen=True)
class CliqueFamily:
    """Ordered multiset of cliques defining a Grantcharov-Grantcharov-Iliev extension."""

    cliques: Tuple[VertexSet, ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, *cliques: Iterable[int]) -> "CliqueFamily":
        return cls(tuple(frozenset(int(v) for v in c) for c in cliques))

    def __len__(self) -> int:
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def covered(self) -> VertexSet:
        """Union of all clique vertex sets."""
        out: set = set()
        for c in self.cliques:
            out |= c
        return frozenset(out)

    def validate(self, g: Graph) -> None:
        """Raise ``CliqueError`` unless every member is a clique of ``g``."""
        for k, c in enumerate(self.cliques, start=1):
            if not c:
                raise CliqueError(f"Clique {k} is empty")
            bad = [v for v in c if not 1 <= v <= g.n]
            if bad:
                raise CliqueError(f"Clique {k} has vertices outside 1..{g.n}: {sorted(bad)}")
            if not is_clique(g, c):
                raise CliqueError(f"Clique {k} {sorted(c)} does not induce a complete subgraph")

    def to_lists(self) -> List[List[int]]:
        return [sorted(c) for c in self.cliques]


EMPTY_FAMILY = CliqueFamily()


# =============================================================================
# Named families
# =============================================================================

_FAMILIES = {
    "complete": nx.complete_graph,
    "star": nx.star_graph,
    "path": nx.path_graph,
    "cycle": nx.cycle_graph,
    "empty": nx.empty_graph,
}


def named(family: str, n: int) -> Graph:
    """Return a member of a named family.

    ``star(n)`` has ``n + 1`` vertices with centre 1; every other family has
    ``n`` vertices.

    Raises:
        GraphValidationError: Unknown family, negative ``n`` or a cycle on
            fewer than three vertices.
    """
    builder = _FAMILIES.get(family)
    if builder is None:
        raise GraphValidationError(f"Unknown graph family: {family!r}")
    if n < 0:
        raise GraphValidationError(f"Negative size for {family}: {n}")
    if family == "cycle" and n < 3:
        raise GraphValidationError(f"cycle requires n >= 3, got {n}")
    return Graph.from_networkx(builder(n))


# =============================================================================
# Operations
# =============================================================================

def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of ``g2`` are shifted by ``g1.n``."""
    shifted = ((u + g1.n, v + g1.n) for u, v in g2.edges)
    return Graph.from_edges(g1.n + g2.n, list(g1.edges) + list(shifted))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on ``s``, relabeled to ``1..|s|`` preserving order."""
    chosen = sorted(set(s))
    outside = [v for v in chosen if not 1 <= v <= g.n]
    if outside:
        raise GraphValidationError(f"Vertices {outside} not in graph of order {g.n}")
    relabel = {v: k + 1 for k, v in enumerate(chosen)}
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in relabel and v in relabel]
    return Graph.from_edges(len(chosen), edges)


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(s), 2))


def enumerate_cliques(g: Graph, k: int) -> List[VertexSet]:
    """All ``k``-cliques of ``g`` in lexicographic order."""
    if k < 1:
        raise GraphValidationError(f"Clique size must be >= 1, got {k}")
    return [frozenset(c) for c in combinations(g.vertices, k) if is_clique(g, c)]


def count_triangles(g: Graph) -> int:
    return len(enumerate_cliques(g, 3)) if g.n >= 3 else 0


def vertices_to_mask(s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        mask |= 1 << (v - 1)
    return mask
