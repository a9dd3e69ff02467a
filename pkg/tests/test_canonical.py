"""Tests for canonical codes and isomorphism classes."""

from itertools import permutations

import networkx as nx
import pytest

from src.errors import OrderLimitError
from src.graphs.canonical import canonical_code, canonical_form, graph_classes
from src.graphs.fixtures import SQUARE_TAIL
from src.graphs.graph import Graph, named


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, ((perm[u - 1], perm[v - 1]) for u, v in g.edges))


class TestCanonicalCode:
    def test_complete_graphs(self):
        assert canonical_code(named("complete", 2)) == "A_"
        assert canonical_code(named("complete", 3)) == "Bw"

    def test_invariant_under_relabeling(self):
        g = named("path", 4)
        codes = {canonical_code(relabel(g, p)) for p in permutations(range(1, 5))}
        assert len(codes) == 1

    def test_regular_graph_relabelings(self):
        # Colour refinement cannot split a cycle; the search must.
        g = named("cycle", 6)
        codes = {canonical_code(relabel(g, p)) for p in [(2, 4, 6, 1, 3, 5), (6, 5, 4, 3, 2, 1), (1, 3, 5, 2, 4, 6)]}
        assert codes == {canonical_code(g)}

    def test_distinguishes_non_isomorphic(self):
        assert canonical_code(named("path", 4)) != canonical_code(named("star", 3))
        two_triangles = Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert canonical_code(two_triangles) != canonical_code(named("cycle", 6))

    def test_canonical_form_is_isomorphic(self):
        form = canonical_form(SQUARE_TAIL)
        assert nx.is_isomorphic(form.to_networkx(), SQUARE_TAIL.to_networkx())

    def test_order_limit(self):
        with pytest.raises(OrderLimitError) as exc:
            canonical_code(named("empty", 10))
        assert (exc.value.order, exc.value.limit) == (10, 9)
        with pytest.raises(OrderLimitError):
            canonical_code(named("complete", 4), max_order=3)


def test_graph_class_counts():
    assert [len(graph_classes(n)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]

