"""The 23 graphs with nonvanishing third essential cohomology.

Shipped as ``data/beta3.json`` (edge lists, names, values); canonical codes
are derived when the table is loaded. Values are the ones the exhaustive
sweep over 1..5 vertices computes. Where a previously tabulated value
disagrees, the entry keeps it under ``tabulated`` so the sweep can report the
difference.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Optional, Tuple

from src.errors import InvariantViolation
from src.graphs.canonical import CanonicalCode, canonical_code
from src.graphs.graph import Edge, Graph

DATA_FILE = Path(__file__).parent / "data" / "beta3.json"

BETA3_VALUES: Tuple[int, ...] = (
    1, 1, 2, 4, 9, 1, 1, 5, 2, 2, 3, 8, 14, 1, 1, 1, 1, 1, 2, 2, 3, 4, 6,
)


@dataclass(frozen=True)
class Beta3Entry:
    name: str
    alias: Optional[str]
    graph: Graph
    beta3: int
    code: CanonicalCode
    tabulated: Optional[int] = None

    @property
    def display(self) -> str:
        return f"{self.name} ({self.alias})" if self.alias else self.name


@dataclass(frozen=True)
class Beta3Table:
    entries: Tuple[Beta3Entry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def weights(self) -> Dict[CanonicalCode, int]:
        return {e.code: e.beta3 for e in self.entries}

    def names(self) -> Dict[CanonicalCode, str]:
        return {e.code: e.display for e in self.entries}

    def values(self) -> Tuple[int, ...]:
        return tuple(e.beta3 for e in self.entries)

    def tabulated_differences(self) -> Dict[CanonicalCode, Tuple[int, int]]:
        """``code -> (beta3, tabulated)`` for entries whose tabulated value differs."""
        return {
            e.code: (e.beta3, e.tabulated)
            for e in self.entries
            if e.tabulated is not None and e.tabulated != e.beta3
        }


def _entry(raw: dict) -> Beta3Entry:
    edges: Tuple[Edge, ...] = tuple((int(u), int(v)) for u, v in raw["edges"])
    g = Graph.from_edges(int(raw["order"]), edges)
    return Beta3Entry(
        name=raw["name"],
        alias=raw.get("alias"),
        graph=g,
        beta3=int(raw["beta3"]),
        code=canonical_code(g),
        tabulated=None if raw.get("tabulated") is None else int(raw["tabulated"]),
    )


@lru_cache(maxsize=None)
def load_beta3_table(path: Path = DATA_FILE) -> Beta3Table:
    """Load and sanity-check the golden table.

    Raises:
        InvariantViolation: Wrong values or two entries of the same class.
    """
    with open(path, encoding="utf-8") as f:
        table = Beta3Table(tuple(_entry(raw) for raw in json.load(f)))
    if table.values() != BETA3_VALUES:
        raise InvariantViolation(f"beta3 table values {table.values()} differ from {BETA3_VALUES}")
    if len(table.weights()) != len(table):
        raise InvariantViolation("beta3 table lists an isomorphism class twice")
    return table
