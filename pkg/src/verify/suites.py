"""Verification suites: the rank engine against closed forms and structural laws.

Each suite is registered under a name and returns a ``SuiteResult``. Random
suites draw from ``random.Random(seed)`` only, so a seed reproduces a run.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from src.algebra.bracket import jacobi_check
from src.algebra.complex import ExteriorComplex
from src.cohomology.engine import CohomologyEngine
from src.cohomology.tables import kunneth
from src.formulas.beta3 import load_beta3_table
from src.formulas.closed_forms import (
    b1_formula,
    b2_census_formula,
    b2_formula,
    b3_complete,
    b3_formula,
    binom,
    ggi_b1_formula,
    ggi_b2_formula,
    star_betti,
    star_bigraded,
    star_essential,
    star_total,
)
from src.graphs.canonical import canonical_code, graph_classes
from src.graphs.fixtures import CHAIN_CLIQUES, SQUARE_TAIL, TRIANGLE_CHAIN
from src.graphs.graph import CliqueFamily, Graph, disjoint_union, enumerate_cliques, named
from src.utils.log import log

MAX_FAILURES_REPORTED = 20


def _log(msg: str) -> None:
    log("verify", msg)


@dataclass
class SuiteContext:
    """Inputs shared by every suite."""
    engine: CohomologyEngine
    max_vertices: Optional[int] = None
    seed: int = 0
    trials: int = 50

    def vertices(self, default: int) -> int:
        return default if self.max_vertices is None else self.max_vertices


@dataclass
class SuiteResult:
    """Outcome of one suite."""
    name: str
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    duration_ms: int = 0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition and len(self.failures) < MAX_FAILURES_REPORTED:
            self.failures.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
            "seed": self.seed,
            "duration_ms": self.duration_ms,
            "details": self.details,
        }


SuiteFn = Callable[[SuiteContext, SuiteResult], None]
SUITES: Dict[str, SuiteFn] = {}


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn
    return register


def run_suite(name: str, ctx: SuiteContext) -> SuiteResult:
    """Run one registered suite.

    Raises:
        KeyError: Unknown suite name.
    """
    fn = SUITES[name]
    result = SuiteResult(name=name, seed=ctx.seed)
    start = time.time()
    _log(f"suite {name} (max_vertices={ctx.max_vertices}, seed={ctx.seed})")
    fn(ctx, result)
    result.duration_ms = int((time.time() - start) * 1000)
    _log(f"suite {name}: {result.checks} checks, {len(result.failures)} failures")
    return result


# =============================================================================
# Helpers
# =============================================================================

def classes_up_to(order: int, start: int = 0) -> List[Graph]:
    return [g for n in range(start, order + 1) for g in graph_classes(n)]


def random_graph(rng: random.Random, max_vertices: int) -> Graph:
    n = rng.randint(1, max_vertices)
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    return Graph.from_edges(n, [p for p in pairs if rng.random() < 0.5])


def random_cliques(rng: random.Random, g: Graph, max_size: int) -> CliqueFamily:
    """Up to ``max_size`` cliques of ``g``, repetition allowed."""
    pool = [c for k in range(1, g.n + 1) for c in enumerate_cliques(g, k)]
    count = rng.randint(0, max_size) if pool else 0
    return CliqueFamily(tuple(rng.choice(pool) for _ in range(count)))


def _name(g: Graph) -> str:
    return f"n={g.n} edges={list(g.edges)}"


# =============================================================================
# Suites
# =============================================================================

@suite("b2")
def suite_b2(ctx: SuiteContext, result: SuiteResult) -> None:
    """b1 and b2 closed forms against the engine on every class."""
    graphs = classes_up_to(ctx.vertices(6))
    result.details["graphs"] = len(graphs)
    for g in graphs:
        table = ctx.engine.betti(g, degrees=[1, 2])
        result.check(table[1] == b1_formula(g), f"b1 {_name(g)}: {table[1]} != {b1_formula(g)}")
        result.check(table[2] == b2_formula(g), f"b2 {_name(g)}: {table[2]} != {b2_formula(g)}")
        result.check(
            b2_census_formula(g) == b2_formula(g),
            f"b2 census form {_name(g)}: {b2_census_formula(g)} != {b2_formula(g)}",
        )


@suite("b3")
def suite_b3(ctx: SuiteContext, result: SuiteResult) -> None:
    """b3 by rank, by decomposition and by the beta3 table."""
    monolithic = ctx.engine.betti(SQUARE_TAIL, degrees=[3], strategy="monolithic")[3]
    decomposed = ctx.engine.betti_via_decomposition(SQUARE_TAIL, 3)
    formula = b3_formula(SQUARE_TAIL)
    result.details["square_tail"] = {
        "monolithic": monolithic,
        "decomposition": decomposed,
        "formula": formula,
    }
    result.check(
        monolithic == decomposed == formula == 74,
        f"square_tail b3: {monolithic}, {decomposed}, {formula}",
    )

    top = min(ctx.vertices(5), 5)
    for n in range(1, top + 1):
        value = ctx.engine.betti(named("complete", n), degrees=[3])[3]
        result.check(value == b3_complete(n), f"b3(K{n}) = {value}, expected {b3_complete(n)}")
    for g in classes_up_to(top):
        value = ctx.engine.betti(g, degrees=[3])[3]
        result.check(value == b3_formula(g), f"b3 {_name(g)}: {value} != {b3_formula(g)}")


@suite("star")
def suite_star(ctx: SuiteContext, result: SuiteResult) -> None:
    """Star-graph Betti, essential and bigraded formulas."""
    top = max(ctx.vertices(6) - 1, 1)
    for n in range(1, top + 1):
        s = named("star", n)
        table = ctx.engine.betti(s)
        for k in range(len(table)):
            result.check(table[k] == star_betti(n, k), f"b{k}(S{n}) = {table[k]} != {star_betti(n, k)}")
        result.check(table.total() == star_total(n), f"t(S{n}) = {table.total()} != {star_total(n)}")
        essential = ctx.engine.essential_betti(s)
        for k in range(len(essential)):
            result.check(
                essential[k] == star_essential(n, k),
                f"beta{k}(S{n}) = {essential[k]} != {star_essential(n, k)}",
            )
        for r in range(0, n + 1):
            value = essential.beta(n, r)
            result.check(
                value == star_bigraded(n, r),
                f"beta_{{{n},{r}}}(S{n}) = {value} != {star_bigraded(n, r)}",
            )
    for n in range(1, 11):
        total = sum(star_betti(n, k) for k in range(2 * n + 2))
        result.check(total == star_total(n), f"sum_k b_k(S{n}) = {total} != {star_total(n)}")


@suite("ggi")
def suite_ggi(ctx: SuiteContext, result: SuiteResult) -> None:
    """Direct Betti numbers of solvable extensions against the reduction."""
    rng = random.Random(ctx.seed)
    reduced = ctx.engine.ggi_betti_reduced(TRIANGLE_CHAIN, CHAIN_CLIQUES)
    expected = [binom(5, n) for n in range(len(reduced))]
    result.check(list(reduced) == expected, f"triangle_chain/chain_cliques reduced: {list(reduced)}")

    limit = min(ctx.vertices(5), 5)
    for trial in range(ctx.trials):
        g = random_graph(rng, limit)
        sigma = random_cliques(rng, g, 3)
        direct = ctx.engine.betti(g, sigma)
        via = ctx.engine.ggi_betti_reduced(g, sigma)
        label = f"trial {trial}: {_name(g)} sigma={sigma.to_lists()}"
        result.check(list(direct) == list(via), f"{label}: {list(direct)} != {list(via)}")
        result.check(direct[1] == ggi_b1_formula(g, sigma), f"{label}: b1 formula")
        result.check(direct[2] == ggi_b2_formula(g, sigma), f"{label}: b2 formula")
        result.check(direct.euler_characteristic() == 0, f"{label}: Euler characteristic")
    result.details["trials"] = ctx.trials


@suite("duality")
def suite_duality(ctx: SuiteContext, result: SuiteResult) -> None:
    """Poincare duality and vanishing Euler characteristic."""
    for g in classes_up_to(ctx.vertices(4), start=1):
        table = ctx.engine.betti(g)
        result.check(table.is_palindromic(), f"{_name(g)} not palindromic: {list(table)}")
        result.check(table.euler_characteristic() == 0, f"{_name(g)} Euler characteristic")
        result.check(table[0] == 1, f"{_name(g)} b0 = {table[0]}")


@suite("decomposition")
def suite_decomposition(ctx: SuiteContext, result: SuiteResult) -> None:
    """Census-weighted essential sums against direct Betti numbers."""
    engine = ctx.engine
    for g in classes_up_to(ctx.vertices(5)):
        table = engine.betti(g)
        for d in range(len(table)):
            if min(2 * d - 1, g.n) > engine.max_order:
                continue
            via = engine.decomposition(g, d)
            result.check(via.value == table[d], f"{_name(g)} degree {d}: {via.value} != {table[d]}")
            result.check(via.bigraded_total == via.value, f"{_name(g)} degree {d}: bigraded sum")


@suite("figure3")
def suite_beta3_classes(ctx: SuiteContext, result: SuiteResult) -> None:
    """Rediscover the classes with nonvanishing beta3 on 1..5 vertices."""
    table = load_beta3_table()
    expected = table.weights()
    names = table.names()
    found: Dict[str, int] = {}
    graphs = classes_up_to(5, start=1)
    for g in graphs:
        value = ctx.engine.essential_betti(g, [3])[3]
        if value:
            found[canonical_code(g)] = value
    result.details["classes"] = len(graphs)
    result.details["nonzero"] = len(found)
    result.check(len(found) == len(expected), f"{len(found)} nonzero classes, expected {len(expected)}")
    for code, value in found.items():
        result.check(code in expected, f"unexpected class {code} with beta3 = {value}")
    for code, value in expected.items():
        result.check(found.get(code) == value, f"{names[code]}: found {found.get(code)}, expected {value}")

    # Reported, not failed: the frozen values above are what the sweep computes.
    differences = [
        f"{names[code]}: computed {value}, tabulated {tabulated}"
        for code, (value, tabulated) in table.tabulated_differences().items()
    ]
    for line in differences:
        _log(f"tabulated beta3 differs, {line}")
    result.details["tabulated_differences"] = differences


@suite("structure")
def suite_structure(ctx: SuiteContext, result: SuiteResult) -> None:
    """Q^2 = 0, Jacobi, Kunneth, essential vanishing and bigraded sums."""
    rng = random.Random(ctx.seed)
    limit = min(ctx.vertices(4), 5)
    for g in classes_up_to(limit, start=1):
        sigma = random_cliques(rng, g, 2)
        cx = ExteriorComplex(g, sigma)
        result.check(not cx.square_zero_failures(), f"Q^2 != 0 on {_name(g)} sigma={sigma.to_lists()}")
        result.check(jacobi_check(g, sigma), f"Jacobi fails on {_name(g)} sigma={sigma.to_lists()}")
        essential = ctx.engine.essential_betti(g)
        result.check(essential.consistent(), f"{_name(g)}: bigraded rows do not sum to beta")
        for i in range(len(essential)):
            if g.n > 2 * i - 1:
                result.check(essential[i] == 0, f"{_name(g)}: beta{i} = {essential[i]} below the bound")
    for _ in range(max(ctx.trials // 5, 1)):
        g1, g2 = random_graph(rng, 3), random_graph(rng, 2)
        union = disjoint_union(g1, g2)
        lhs = list(ctx.engine.betti(union))
        rhs = list(kunneth(ctx.engine.betti(g1), ctx.engine.betti(g2)))
        result.check(lhs == rhs, f"Kunneth fails for {_name(g1)} + {_name(g2)}")


@suite("blockwise")
def suite_blockwise(ctx: SuiteContext, result: SuiteResult) -> None:
    """Blockwise Betti tables against the monolithic computation."""
    rng = random.Random(ctx.seed)
    for _ in range(20):
        g = random_graph(rng, min(ctx.vertices(5), 5))
        blockwise = list(ctx.engine.betti(g, strategy="blockwise"))
        monolithic = list(ctx.engine.betti(g, strategy="monolithic"))
        result.check(blockwise == monolithic, f"{_name(g)}: {blockwise} != {monolithic}")


def suite_names() -> Tuple[str, ...]:
    return tuple(SUITES)
