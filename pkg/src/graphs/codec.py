"""Text codecs for graphs: graph6 and the plain edge-list format.

Edge-list format::

    n 4
    1 2
    1 3
    2 3
    3 4

Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from typing import List, Tuple

import networkx as nx

from src.errors import GraphParseError, GraphValidationError
from src.graphs.graph import Graph

GRAPH6_HEADER = ">>graph6<<"
_G6_MIN = 63
_G6_MAX = 126


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string.

    Bytes are validated here so errors carry a byte offset; decoding itself is
    delegated to networkx.

    Raises:
        GraphParseError: Empty input, a byte outside 63..126, truncated data or
            trailing garbage.
    """
    data = text.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not data:
        raise GraphParseError("Empty graph6 string", offset=base)

    for k, ch in enumerate(data):
        if not _G6_MIN <= ord(ch) <= _G6_MAX:
            raise GraphParseError(f"graph6 byte {ch!r} out of range 63..126", offset=base + k)
    raw = data.encode("ascii")

    if raw[0] != _G6_MAX:
        n = raw[0] - _G6_MIN
        expected = 1 + (n * (n - 1) // 2 + 5) // 6
        if len(raw) < expected:
            raise GraphParseError(
                f"Truncated graph6 data for {n} vertices: expected {expected} bytes, got {len(raw)}",
                offset=base + len(raw),
            )
        if len(raw) > expected:
            raise GraphParseError("Trailing garbage after graph6 data", offset=base + expected)

    try:
        g = nx.from_graph6_bytes(raw)
    except (nx.NetworkXError, ValueError) as e:
        raise GraphParseError(f"Malformed graph6 data: {e}", offset=base) from e
    return Graph.from_networkx(g)


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 without header."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n <count>`` / ``u v`` edge-list format.

    Raises:
        GraphParseError: Missing header, non-integer token or malformed line;
            ``offset`` is the 0-based line number.
    """
    lines: List[Tuple[int, List[str]]] = []
    for lineno, line in enumerate(text.splitlines()):
        stripped = line.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped.split()))
    if not lines:
        raise GraphParseError("Empty edge list", offset=0)

    lineno, header = lines[0]
    if len(header) != 2 or header[0] != "n":
        raise GraphParseError("Edge list must start with 'n <count>'", offset=lineno)
    n = _parse_int(header[1], lineno)
    if n < 0:
        raise GraphParseError(f"Negative vertex count {n}", offset=lineno)

    edges = []
    for lineno, tokens in lines[1:]:
        if len(tokens) != 2:
            raise GraphParseError(f"Expected 'u v', got {' '.join(tokens)!r}", offset=lineno)
        u, v = (_parse_int(t, lineno) for t in tokens)
        if u == v:
            raise GraphParseError(f"Self-loop at vertex {u}", offset=lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphParseError(f"Edge ({u}, {v}) outside 1..{n}", offset=lineno)
        edges.append((u, v))
    try:
        return Graph.from_edges(n, edges)
    except GraphValidationError as e:
        raise GraphParseError(str(e)) from e


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Graph:
    """Sniff edge-list vs graph6 content and parse accordingly."""
    stripped = text.strip()
    if stripped.startswith("n ") or stripped.startswith("n\t") or "\n" in stripped or stripped == "n":
        return parse_edge_list(text)
    return parse_graph6(stripped)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"Non-integer token {token!r}", offset=lineno) from None
