"""Graph-spec and clique-spec grammar used by the CLI.

Graph specs::

    name:K5            named family (K complete, S star, P path, C cycle, E empty)
    name:S2+K1         '+'-joined disjoint unions
    g6:D?{             graph6 string
    file:path.el       edge list or graph6, sniffed by content
    fixture:paw        worked-example graph (paw, square_tail, triangle_chain)

Clique specs are a JSON list of vertex lists, given inline (``[[1,2],[2,3]]``),
as a path to a JSON file, or as ``fixture:<name>``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Optional

from src.errors import GraphParseError
from src.graphs.codec import parse_graph6, parse_graph_text
from src.graphs.fixtures import clique_fixture, graph_fixture
from src.graphs.graph import EMPTY_FAMILY, CliqueFamily, Graph, disjoint_union, named
from src.utils.files import read_input_file

FAMILY_LETTERS = {
    "K": "complete",
    "S": "star",
    "P": "path",
    "C": "cycle",
    "E": "empty",
}

_TERM = re.compile(r"^([KSPCE])(\d+)$")


def parse_named(expr: str) -> Graph:
    """Parse ``K5``, ``S2+K1`` and similar family expressions."""
    result: Optional[Graph] = None
    offset = 0
    for term in expr.split("+"):
        match = _TERM.match(term.strip())
        if not match:
            raise GraphParseError(f"Bad family term {term!r}", offset=offset)
        g = named(FAMILY_LETTERS[match.group(1)], int(match.group(2)))
        result = g if result is None else disjoint_union(result, g)
        offset += len(term) + 1
    assert result is not None
    return result


def parse_graph_spec(spec: str) -> Graph:
    """Resolve a ``kind:value`` graph spec."""
    kind, sep, value = spec.partition(":")
    if not sep or not value:
        raise GraphParseError(f"Graph spec must look like 'kind:value', got {spec!r}", offset=0)
    if kind == "name":
        return parse_named(value)
    if kind == "g6":
        return parse_graph6(value)
    if kind == "file":
        return parse_graph_text(_read(value))
    if kind == "fixture":
        return graph_fixture(value)
    raise GraphParseError(f"Unknown graph spec kind {kind!r}", offset=0)


def parse_clique_spec(spec: Optional[str], g: Graph) -> CliqueFamily:
    """Resolve and validate a clique spec against ``g``."""
    if not spec:
        return EMPTY_FAMILY
    if spec.startswith("fixture:"):
        family = clique_fixture(spec.partition(":")[2])
    else:
        text = spec if spec.lstrip().startswith("[") else _read(spec)
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphParseError(f"Invalid clique JSON: {e.msg}", offset=e.pos) from e
        if not isinstance(data, list) or not all(isinstance(c, list) for c in data):
            raise GraphParseError("Clique spec must be a JSON list of vertex lists", offset=0)
        try:
            family = CliqueFamily.of(*data)
        except (TypeError, ValueError) as e:
            raise GraphParseError(f"Non-integer vertex in clique spec: {e}", offset=0) from e
    family.validate(g)
    return family


def _read(path: str) -> str:
    try:
        return read_input_file(Path(path))
    except (OSError, ValueError) as e:
        raise GraphParseError(f"Cannot read {path}: {e}", offset=0) from e
