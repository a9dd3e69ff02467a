"""Output processor for liegraph - JSON reports or rich tables."""

from __future__ import annotations

import sys
from typing import Any, Dict, List, Optional, TextIO

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from src.config.models import LieGraphConfig, OutputFormat
from src.output.report import ReportDocument, emit_report


class OutputProcessor:
    """Routes a finished report to stdout in the configured format."""

    def __init__(
        self,
        config: LieGraphConfig,
        stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None,
    ):
        """Initialize the output processor.

        Args:
            config: liegraph configuration
            stdout: Result stream (defaults to the current ``sys.stdout``)
            stderr: Status stream (defaults to the current ``sys.stderr``)
        """
        self.config = config
        self.json_mode = config.output.format == OutputFormat.JSON
        colors = config.output.colors
        # Results go to stdout, status lines to stderr.
        self.console = Console(
            file=stdout or sys.stdout,
            no_color=not colors,
            highlight=False,
            soft_wrap=True,
        )
        self.status = Console(file=stderr or sys.stderr, no_color=not colors, highlight=False)

    def emit(self, report: ReportDocument) -> None:
        if self.json_mode:
            emit_report(report)
        else:
            self._emit_human(report)

    # -------------------------------------------------------------------------
    # Human-readable rendering
    # -------------------------------------------------------------------------

    def _emit_human(self, report: ReportDocument) -> None:
        if report.graph is not None:
            g = report.graph
            line = f"[bold]{report.command}[/bold]  n={g['order']} |E|={g['size']}"
            if "graph6" in g:
                line += escape(f"  graph6={g['graph6']}")
            if report.cliques:
                line += escape(f"  cliques={report.cliques}")
            self.console.print(line)

        renderer = getattr(self, f"_render_{report.command}", None)
        if renderer is not None:
            renderer(report.results)
        else:
            self._render_mapping(report.results)

        footer = f"[dim]{report.timing_ms} ms"
        if report.blocks:
            footer += f", {report.blocks.get('blocks', 0)} blocks (largest {report.blocks.get('largest_block', 0)})"
        if report.cache:
            footer += f", cache {report.cache.get('hits', 0)} hits / {report.cache.get('misses', 0)} misses"
        self.status.print(footer + "[/dim]")

    def _degree_table(self, title: str, values: List[Optional[int]], label: str) -> Table:
        table = Table(title=title)
        table.add_column("degree", justify="right")
        table.add_column(label, justify="right")
        for d, v in enumerate(values):
            if v is not None:
                table.add_row(str(d), str(v))
        return table

    def _render_betti(self, results: Dict[str, Any]) -> None:
        title = f"Betti numbers ({results.get('method', 'direct')})"
        self.console.print(self._degree_table(title, results["betti"], "b"))

    def _render_essential(self, results: Dict[str, Any]) -> None:
        self.console.print(self._degree_table("Essential Betti numbers", results["essential"], "beta"))
        bigraded = results.get("bigraded")
        if bigraded:
            table = Table(title="Bigraded essential Betti numbers")
            for column in ("n", "r", "beta"):
                table.add_column(column, justify="right")
            for n, r, v in bigraded:
                table.add_row(str(n), str(r), str(v))
            self.console.print(table)

    def _render_census(self, results: Dict[str, Any]) -> None:
        table = Table(title=f"Induced subgraphs (order <= {results['max_order']})")
        for column in ("order", "name", "code", "count"):
            table.add_column(column, justify="right" if column in ("order", "count") else "left")
        for row in results["census"]:
            table.add_row(str(row["order"]), row.get("name", ""), escape(row["code"]), str(row["count"]))
        self.console.print(table)

    def _render_verify(self, results: Dict[str, Any]) -> None:
        table = Table(title=f"Verification (seed {results.get('seed')})")
        for column in ("suite", "status", "checks", "ms"):
            table.add_column(column)
        for suite in results["suites"]:
            status = "[green]PASS[/green]" if suite["passed"] else "[red]FAIL[/red]"
            table.add_row(suite["name"], status, str(suite["checks"]), str(suite["duration_ms"]))
        self.console.print(table)
        for suite in results["suites"]:
            for failure in suite["failures"]:
                self.console.print(f"[red]{escape(suite['name'])}: {escape(failure)}[/red]")
            for note in suite["details"].get("tabulated_differences", []):
                self.console.print(f"[yellow]{escape(suite['name'])}: {escape(note)}[/yellow]")

    def _render_mapping(self, results: Dict[str, Any]) -> None:
        for key, value in results.items():
            self.console.print(escape(f"{key}: {value}"))
