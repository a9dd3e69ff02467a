"""Main CLI entry point for liegraph."""

from __future__ import annotations

import json
import time
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Tuple

import typer
from rich.console import Console

from src import __version__
from src.cohomology.cache import TableCache, resolve_cache_dir
from src.cohomology.engine import CohomologyEngine
from src.config.loader import find_config_file, load_config
from src.config.models import LieGraphConfig, OutputFormat, Strategy
from src.errors import InvariantViolation, LieGraphError
from src.formulas.beta3 import load_beta3_table
from src.graphs.census import census, family_names
from src.graphs.graph import Graph
from src.graphs.sources import parse_clique_spec, parse_graph_spec
from src.output.render import OutputProcessor
from src.output.report import ReportDocument
from src.utils.log import set_verbose
from src.verify.suites import SuiteContext, run_suite, suite_names

app = typer.Typer(
    name="liegraph",
    help="Exact cohomology of Lie algebras built from graphs",
    add_completion=False,
)

console = Console(stderr=True)

EXIT_INVARIANT = 1
EXIT_USAGE = 2


class BettiMethod(str, Enum):
    DIRECT = "direct"
    DECOMPOSITION = "decomposition"
    REDUCED = "reduced"


class Session:
    """Config, engine and output for one command."""

    def __init__(self, config: LieGraphConfig):
        self.config = config
        self.cache = TableCache(
            resolve_cache_dir(config.cache.directory),
            enabled=config.cache.enabled,
        )
        self.engine = CohomologyEngine.from_config(config, cache=self.cache)
        self.output = OutputProcessor(config)
        self.start = time.time()

    def finish(self, report: ReportDocument) -> None:
        report.timing_ms = int((time.time() - self.start) * 1000)
        report.cache = self.cache.stats.to_dict()
        report.blocks = self.engine.stats.to_dict()
        self.output.emit(report)


def version_callback(value: bool):
    if value:
        console.print(f"liegraph v{__version__}")
        raise typer.Exit()


def _fail(message: str, code: int = EXIT_USAGE) -> typer.Exit:
    console.print(f"[red]Error: {message}[/red]")
    return typer.Exit(code)


def _exit_code(error: LieGraphError) -> int:
    return EXIT_INVARIANT if isinstance(error, InvariantViolation) else EXIT_USAGE


def _open_session(
    config_file: Optional[Path],
    verbose: bool,
    no_cache: bool,
    output_format: Optional[OutputFormat],
    overrides: Optional[Dict[str, Any]] = None,
) -> Session:
    """Load configuration, apply flag overrides and build the engine."""
    config_path = config_file or find_config_file()
    merged: Dict[str, Any] = dict(overrides or {})
    if verbose:
        merged["output.verbose"] = True
    if no_cache:
        merged["cache.enabled"] = False
    if output_format is not None:
        merged["output.format"] = output_format.value
    try:
        config = load_config(config_path, merged)
    except LieGraphError as e:
        raise _fail(f"loading configuration: {e}") from e
    set_verbose(config.output.verbose)
    return Session(config)


@app.callback()
def main(
    version: bool = typer.Option(
        None,
        "--version",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
):
    """liegraph - Betti numbers of Dani-Mainkar and GGI Lie algebras."""
    pass


# =============================================================================
# betti
# =============================================================================

@app.command("betti")
def betti_command(
    graph: str = typer.Option(..., "--graph", "-g", help="Graph spec: name:K5, g6:<code>, file:<path>"),
    cliques: Optional[str] = typer.Option(None, "--cliques", help="Clique family: JSON list, file or fixture:<name>"),
    degree: Optional[int] = typer.Option(None, "--degree", "-d", help="Single degree"),
    all_degrees: bool = typer.Option(False, "--all", help="Every degree (default)"),
    method: BettiMethod = typer.Option(BettiMethod.DIRECT, "--method", "-m", help="How b_k is computed"),
    strategy: Optional[Strategy] = typer.Option(None, "--strategy", help="Rank assembly strategy"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Rank worker processes"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Output format"),
    config_file: Optional[Path] = typer.Option(None, "--config", "-c", help="Path to config file"),
    no_cache: bool = typer.Option(False, "--no-cache", help="Disable the essential-table cache"),
    verbose: bool = typer.Option(False, "--verbose", help="Log progress to stderr"),
):
    """Betti numbers of L(G) or L(G, Sigma)."""
    if degree is not None and all_degrees:
        raise _fail("--degree and --all are mutually exclusive")
    overrides = {"engine.strategy": strategy.value if strategy else None, "engine.workers": workers}
    session = _open_session(config_file, verbose, no_cache, output_format, overrides)

    try:
        g = parse_graph_spec(graph)
        sigma = parse_clique_spec(cliques, g)
        if method == BettiMethod.REDUCED and not len(sigma):
            raise _fail("--method reduced needs a non-empty --cliques family")
        if method == BettiMethod.DECOMPOSITION and len(sigma):
            raise _fail("--method decomposition applies to L(G) only; drop --cliques")

        top = g.generator_count + len(sigma)
        degrees = None if degree is None else [degree]
        if degree is not None and not 0 <= degree <= top:
            raise _fail(f"degree {degree} outside 0..{top}")

        results: Dict[str, Any] = {"method": method.value, "dimension": top}
        if method == BettiMethod.DIRECT:
            table = session.engine.betti(g, sigma, degrees)
            values = table.to_list()
        elif method == BettiMethod.REDUCED:
            values = session.engine.ggi_betti_reduced(g, sigma).to_list()
            if degree is not None:
                values = [v if d == degree else None for d, v in enumerate(values)]
        else:
            values, terms = _decomposition(session.engine, g, degrees or range(top + 1))
            if degree is not None:
                results["terms"] = terms[degree]
        results["betti"] = values
        if degree is None:
            results["total"] = sum(values)
        results["rank_method"] = session.engine.method_label
    except LieGraphError as e:
        raise _fail(str(e), _exit_code(e)) from e

    report = ReportDocument.for_graph(
        "betti",
        {"graph": graph, "cliques": cliques, "degree": degree, "method": method.value},
        g,
        sigma,
    )
    report.results = results
    session.finish(report)


def _decomposition(
    engine: CohomologyEngine, g: Graph, degrees: Iterable[int]
) -> Tuple[List[Optional[int]], Dict[int, List[Dict[str, Any]]]]:
    top = g.generator_count
    values: List[Optional[int]] = [None] * (top + 1)
    terms: Dict[int, List[Dict[str, Any]]] = {}
    for d in degrees:
        result = engine.decomposition(g, d)
        values[d] = result.value
        terms[d] = [{"code": c, "count": n, "beta": b} for c, n, b in result.terms]
    return values, terms


# =============================================================================
# essential
# =============================================================================

@app.command("essential")
def essential_command(
    graph: str = typer.Option(..., "--graph", "-g", help="Graph spec"),
    degree: Optional[int] = typer.Option(None, "--degree", "-d", help="Single degree"),
    bigraded: bool = typer.Option(False, "--bigraded", help="Include beta_{n,r}"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Output format"),
    config_file: Optional[Path] = typer.Option(None, "--config", "-c", help="Path to config file"),
    no_cache: bool = typer.Option(False, "--no-cache", help="Disable the essential-table cache"),
    verbose: bool = typer.Option(False, "--verbose", help="Log progress to stderr"),
):
    """Essential Betti numbers (monomials supported on every vertex)."""
    session = _open_session(config_file, verbose, no_cache, output_format)
    try:
        g = parse_graph_spec(graph)
        table = session.engine.essential_betti(g, None if degree is None else [degree])
        if not table.consistent():
            raise InvariantViolation("bigraded essential numbers do not sum to the essential table")
    except LieGraphError as e:
        raise _fail(str(e), _exit_code(e)) from e

    results: Dict[str, Any] = {"essential": list(table.dims)}
    if bigraded:
        results["bigraded"] = [[n, r, v] for (n, r), v in sorted(table.bigraded.items())]
    report = ReportDocument.for_graph(
        "essential", {"graph": graph, "degree": degree, "bigraded": bigraded}, g
    )
    report.results = results
    session.finish(report)


# =============================================================================
# census
# =============================================================================

@app.command("census")
def census_command(
    graph: str = typer.Option(..., "--graph", "-g", help="Graph spec"),
    max_order: int = typer.Option(4, "--max-order", "-k", help="Largest induced subgraph order"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Output format"),
    config_file: Optional[Path] = typer.Option(None, "--config", "-c", help="Path to config file"),
    verbose: bool = typer.Option(False, "--verbose", help="Log progress to stderr"),
):
    """Count induced subgraphs by isomorphism class."""
    session = _open_session(config_file, verbose, True, output_format)
    try:
        g = parse_graph_spec(graph)
        counts = census(g, max_order, session.config.canonical.max_order)
        names = family_names(max_order)
        for code, name in load_beta3_table().names().items():
            names.setdefault(code, name)
    except LieGraphError as e:
        raise _fail(str(e), _exit_code(e)) from e

    rows = counts.to_report(names)
    report = ReportDocument.for_graph("census", {"graph": graph, "max_order": max_order}, g)
    report.results = {"max_order": max_order, "classes": len(rows), "census": rows}
    session.finish(report)


# =============================================================================
# verify
# =============================================================================

@app.command("verify")
def verify_command(
    suite: str = typer.Option("all", "--suite", "-s", help="Suite name or 'all'"),
    max_vertices: Optional[int] = typer.Option(None, "--max-vertices", help="Largest graph order to sweep"),
    seed: int = typer.Option(0, "--seed", help="Seed for randomized suites"),
    trials: int = typer.Option(50, "--trials", help="Random samples per randomized suite"),
    output_format: Optional[OutputFormat] = typer.Option(None, "--format", "-f", help="Output format"),
    config_file: Optional[Path] = typer.Option(None, "--config", "-c", help="Path to config file"),
    no_cache: bool = typer.Option(False, "--no-cache", help="Disable the essential-table cache"),
    verbose: bool = typer.Option(False, "--verbose", help="Log progress to stderr"),
):
    """Run property suites; exit 0 iff every check passes."""
    names = suite_names() if suite == "all" else (suite,)
    unknown = [n for n in names if n not in suite_names()]
    if unknown:
        raise _fail(f"Unknown suite {unknown[0]!r}; expected one of: all, {', '.join(suite_names())}")
    if max_vertices is not None and max_vertices < 1:
        raise _fail("--max-vertices must be >= 1")

    session = _open_session(config_file, verbose, no_cache, output_format)
    console.print(f"[dim]seed={seed}[/dim]")
    ctx = SuiteContext(session.engine, max_vertices=max_vertices, seed=seed, trials=trials)
    try:
        outcomes = [run_suite(name, ctx) for name in names]
    except LieGraphError as e:
        raise _fail(str(e), _exit_code(e)) from e

    report = ReportDocument(
        command="verify",
        arguments={"suite": suite, "max_vertices": max_vertices, "seed": seed, "trials": trials},
    )
    report.results = {
        "seed": seed,
        "passed": all(o.passed for o in outcomes),
        "suites": [o.to_dict() for o in outcomes],
    }
    session.finish(report)
    if not report.results["passed"]:
        raise typer.Exit(EXIT_INVARIANT)


# =============================================================================
# config
# =============================================================================

@app.command("config")
def show_config(
    config_file: Optional[Path] = typer.Option(None, "--config", "-c", help="Path to config file"),
):
    """Show current configuration."""
    path = config_file or find_config_file()
    if path:
        console.print(f"Loading config from: {path}")
    else:
        console.print("No config file found, using defaults")
    try:
        config = load_config(path)
    except LieGraphError as e:
        raise _fail(str(e)) from e
    print(json.dumps(config.to_dict(), indent=2), flush=True)


if __name__ == "__main__":
    app()
