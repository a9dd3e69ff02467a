"""Induced-subgraph census: how often each small graph occurs in ``G``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Mapping, Optional

from src.errors import OrderLimitError
from src.graphs.canonical import DEFAULT_MAX_ORDER, CanonicalCode, _code_of, canonical_code
from src.graphs.graph import Graph, induced_subgraph, named


@dataclass
class Census:
    """Counts of induced subgraphs keyed by canonical code."""

    counts: Dict[CanonicalCode, int] = field(default_factory=dict)
    orders: Dict[CanonicalCode, int] = field(default_factory=dict)
    max_order: int = 0

    def count(self, code: CanonicalCode) -> int:
        return self.counts.get(code, 0)

    def of_order(self, k: int) -> Dict[CanonicalCode, int]:
        return {c: n for c, n in self.counts.items() if self.orders[c] == k}

    def to_report(self, names: Optional[Mapping[CanonicalCode, str]] = None) -> List[Dict[str, Any]]:
        """JSON-ready rows sorted by (order, code)."""
        names = names or {}
        rows = []
        for code in sorted(self.counts, key=lambda c: (self.orders[c], c)):
            row: Dict[str, Any] = {"code": code, "order": self.orders[code], "count": self.counts[code]}
            if code in names:
                row["name"] = names[code]
            rows.append(row)
        return rows


def census(g: Graph, max_order: int, limit: int = DEFAULT_MAX_ORDER) -> Census:
    """Count every induced subgraph of ``g`` on at most ``max_order`` vertices.

    The empty vertex set is included (order 0, count 1).

    Raises:
        OrderLimitError: ``max_order`` exceeds the canonical-code ``limit``.
    """
    if max_order > limit:
        raise OrderLimitError(max_order, limit)
    counts: Counter = Counter()
    orders: Dict[CanonicalCode, int] = {}
    for k in range(min(max_order, g.n) + 1):
        for subset in combinations(g.vertices, k):
            code = _code_of(induced_subgraph(g, subset))
            counts[code] += 1
            orders[code] = k
    return Census(counts=dict(counts), orders=orders, max_order=max_order)


def count_induced(g: Graph, h: Graph, limit: int = DEFAULT_MAX_ORDER) -> int:
    """Number of vertex subsets ``S`` with ``G[S]`` isomorphic to ``h``."""
    target = canonical_code(h, limit)
    if h.n > g.n:
        return 0
    total = 0
    for subset in combinations(g.vertices, h.n):
        sub = induced_subgraph(g, subset)
        if sub.size == h.size and _code_of(sub) == target:
            total += 1
    return total


def family_names(max_order: int) -> Dict[CanonicalCode, str]:
    """Display names for the standard families up to ``max_order`` vertices.

    Paths are named by vertex count (P_n has n vertices). Earlier entries win
    when two families coincide, e.g. K2 over P2 and S1.
    """
    names: Dict[CanonicalCode, str] = {}

    def add(g: Graph, name: str) -> None:
        names.setdefault(_code_of(g), name)

    for n in range(1, max_order + 1):
        add(named("complete", n), f"K{n}")
    for n in range(2, max_order + 1):
        add(named("empty", n), f"{n}K1")
    for n in range(2, max_order + 1):
        add(named("path", n), f"P{n}")
    for n in range(3, max_order + 1):
        add(named("cycle", n), f"C{n}")
    for n in range(2, max_order):
        add(named("star", n), f"S{n}")
    return names
