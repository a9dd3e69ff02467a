"""Canonical codes for small graphs.

The canonical form is the relabeling that minimizes the graph6 adjacency
bitstring over every vertex order compatible with a colour refinement of the
vertices. The refinement is computed from isomorphism-invariant data only, so
the minimum is still taken over a permutation-invariant set of labelings and
two graphs get equal codes iff they are isomorphic. Codes are graph6 strings of
the canonical form.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, Sequence, Tuple

from src.errors import OrderLimitError
from src.graphs.codec import encode_graph6
from src.graphs.graph import Graph

DEFAULT_MAX_ORDER = 9

CanonicalCode = str


def refine_colors(g: Graph) -> List[int]:
    """Stable colour refinement seeded by vertex degree."""
    masks = g.neighbor_masks
    colors = [bin(m).count("1") for m in masks]
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in range(g.n) if masks[v] >> u & 1)))
            for v in range(g.n)
        ]
        palette = {sig: k for k, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == len(set(colors)):
            return refined
        colors = refined


def _adjacency_key(masks: Sequence[int], order: Sequence[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            key = (key << 1) | (mj >> order[i] & 1)
    return key


def canonical_order(g: Graph) -> Tuple[int, ...]:
    """Vertex order (0-indexed) realizing the canonical form."""
    if g.n <= 1:
        return tuple(range(g.n))
    colors = refine_colors(g)
    cells: Dict[int, List[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    ordered_cells = [cells[c] for c in sorted(cells)]

    masks = g.neighbor_masks
    best_key = None
    best_order: Tuple[int, ...] = ()
    for choice in product(*(permutations(cell) for cell in ordered_cells)):
        order = tuple(v for part in choice for v in part)
        key = _adjacency_key(masks, order)
        if best_key is None or key < best_key:
            best_key = key
            best_order = order
    return best_order


def canonical_form(g: Graph) -> Graph:
    """Relabel ``g`` into its canonical form."""
    order = canonical_order(g)
    position = {v: p + 1 for p, v in enumerate(order)}
    return Graph.from_edges(g.n, ((position[u - 1], position[v - 1]) for u, v in g.edges))


def canonical_code(g: Graph, max_order: int = DEFAULT_MAX_ORDER) -> CanonicalCode:
    """Isomorphism-class key of ``g``.

    Raises:
        OrderLimitError: ``g`` has more than ``max_order`` vertices.
    """
    if g.n > max_order:
        raise OrderLimitError(g.n, max_order)
    return _code_of(g)


@lru_cache(maxsize=65536)
def _code_of(g: Graph) -> CanonicalCode:
    return encode_graph6(canonical_form(g))


@lru_cache(maxsize=None)
def graph_classes(order: int) -> Tuple[Graph, ...]:
    """One canonical representative per isomorphism class on ``order`` vertices.

    Built by adding a vertex with every possible neighbourhood to each class of
    the previous order, then deduplicating by canonical code.
    """
    if order == 0:
        return (Graph(0),)
    seen: Dict[CanonicalCode, Graph] = {}
    for h in graph_classes(order - 1):
        for mask in range(1 << h.n):
            extra = [(v + 1, order) for v in range(h.n) if mask >> v & 1]
            g = Graph.from_edges(order, list(h.edges) + extra)
            code = _code_of(g)
            if code not in seen:
                seen[code] = canonical_form(g)
    return tuple(seen[code] for code in sorted(seen, key=lambda c: (len(seen[c].edges), c)))
