"""
JSON report documents.

Every command produces one ``ReportDocument``; in JSON mode it is written to
stdout as a single line, so the output of several invocations concatenates
into valid JSON Lines.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from src.graphs.codec import encode_graph6
from src.graphs.graph import CliqueFamily, Graph

REPORT_SCHEMA = "liegraph.report/1"
GRAPH6_MAX_ORDER = 62


def graph_summary(g: Graph) -> Dict[str, Any]:
    """Order, size, degree sequence and, for small graphs, the graph6 code."""
    summary: Dict[str, Any] = g.summary()
    summary["edges"] = [list(e) for e in g.edges]
    if g.n <= GRAPH6_MAX_ORDER:
        summary["graph6"] = encode_graph6(g)
    return summary


@dataclass
class ReportDocument:
    """Result of one CLI invocation."""
    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)
    graph: Optional[Dict[str, Any]] = None
    cliques: Optional[List[List[int]]] = None
    results: Dict[str, Any] = field(default_factory=dict)
    timing_ms: int = 0
    cache: Dict[str, int] = field(default_factory=dict)
    blocks: Dict[str, int] = field(default_factory=dict)
    schema: str = field(default=REPORT_SCHEMA, init=False)

    @classmethod
    def for_graph(
        cls,
        command: str,
        arguments: Dict[str, Any],
        g: Graph,
        sigma: Optional[CliqueFamily] = None,
    ) -> "ReportDocument":
        return cls(
            command=command,
            arguments=arguments,
            graph=graph_summary(g),
            cliques=sigma.to_lists() if sigma is not None and len(sigma) else None,
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def emit_report(report: ReportDocument) -> None:
    """
    Emit a report as one JSON line on stdout.

    Args:
        report: Report to emit
    """
    try:
        line = json.dumps(report.to_dict(), ensure_ascii=False)
    except (TypeError, ValueError) as e:
        # Fallback: emit an error document
        line = json.dumps({"schema": REPORT_SCHEMA, "command": report.command, "error": f"Failed to serialize report: {e}"})
    print(line, flush=True)
