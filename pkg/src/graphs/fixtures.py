"""Worked-example graphs and clique families used across tests and the CLI."""

from __future__ import annotations

from typing import Any, Dict

from src.errors import GraphValidationError
from src.graphs.graph import CliqueFamily, Graph

# Triangle 1-2-3 with a pendant edge 3-4.
PAW = Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)])

# Square 1-2-3-4 with the path 1-5-6 attached at vertex 1.
SQUARE_TAIL = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (5, 6)])

# Three overlapping triangles on 1..5, a bridge through 6, and a triangle 7-8-9.
TRIANGLE_CHAIN = Graph.from_edges(
    9,
    [
        (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5),
        (5, 6), (6, 7), (7, 8), (7, 9), (8, 9),
    ],
)

# On PAW: sigma_1 = sigma_2 = {1,2}, sigma_3 = {1,2,3}.
PAW_CLIQUES = CliqueFamily.of({1, 2}, {1, 2}, {1, 2, 3})

# On TRIANGLE_CHAIN: every vertex except 6 is covered.
CHAIN_CLIQUES = CliqueFamily.of({1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {7, 8, 9})

GRAPHS: Dict[str, Graph] = {
    "paw": PAW,
    "square_tail": SQUARE_TAIL,
    "triangle_chain": TRIANGLE_CHAIN,
}
CLIQUES: Dict[str, CliqueFamily] = {"paw_cliques": PAW_CLIQUES, "chain_cliques": CHAIN_CLIQUES}


def _lookup(table: Dict[str, Any], name: str, kind: str) -> Any:
    try:
        return table[name]
    except KeyError:
        raise GraphValidationError(
            f"Unknown {kind} fixture {name!r}; known: {', '.join(sorted(table))}"
        ) from None


def graph_fixture(name: str) -> Graph:
    return _lookup(GRAPHS, name, "graph")


def clique_fixture(name: str) -> CliqueFamily:
    return _lookup(CLIQUES, name, "clique")
