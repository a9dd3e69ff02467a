"""Graph module.

Graphs, clique families, text codecs, canonical codes and the induced-subgraph
census.
"""

from src.graphs.canonical import (
    DEFAULT_MAX_ORDER,
    CanonicalCode,
    canonical_code,
    canonical_form,
    graph_classes,
)
from src.graphs.census import Census, census, count_induced, family_names
from src.graphs.codec import encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from src.graphs.graph import (
    EMPTY_FAMILY,
    CliqueFamily,
    Graph,
    disjoint_union,
    enumerate_cliques,
    induced_subgraph,
    named,
)
from src.graphs.reduction import ggi_reduce
from src.graphs.sources import parse_clique_spec, parse_graph_spec

__all__ = [
    "DEFAULT_MAX_ORDER",
    "CanonicalCode",
    "canonical_code",
    "canonical_form",
    "graph_classes",
    "Census",
    "census",
    "count_induced",
    "family_names",
    "encode_graph6",
    "format_edge_list",
    "parse_edge_list",
    "parse_graph6",
    "EMPTY_FAMILY",
    "CliqueFamily",
    "Graph",
    "disjoint_union",
    "enumerate_cliques",
    "induced_subgraph",
    "named",
    "ggi_reduce",
    "parse_clique_spec",
    "parse_graph_spec",
]
