"""Betti numbers of ``L(G)`` and ``L(G, Sigma)`` from exact ranks of ``Q``.

``b_d = dim C^d - rank Q_d - rank Q_{d-1}``. The blockwise strategy sums this
over the ``(support, weight)`` blocks that ``Q`` preserves; the monolithic
strategy ranks the full matrices and exists to cross-check it.
"""

from __future__ import annotations

import concurrent.futures
from dataclasses import asdict, dataclass, field
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Tuple

from src.algebra.complex import BlockKey, ExteriorComplex
from src.algebra.generators import Monomial
from src.cohomology.cache import TableCache
from src.graphs.reduction import ggi_reduce
from src.cohomology.tables import POINT, BettiTable, EssentialTable
from src.errors import ConfigError, OrderLimitError
from src.formulas.closed_forms import binom, ggi_bn_formula
from src.graphs.canonical import DEFAULT_MAX_ORDER, CanonicalCode, canonical_code
from src.graphs.census import census
from src.graphs.codec import parse_graph6
from src.graphs.graph import EMPTY_FAMILY, CliqueFamily, Graph
from src.linalg.rank import DEFAULT_PRIME, RankMethod, compute_rank
from src.linalg.sparse import SparseIntMatrix
from src.utils.log import log

if TYPE_CHECKING:
    from src.config.models import LieGraphConfig

STRATEGIES = ("blockwise", "monolithic")
ESSENTIAL_KIND = "essential"


def _log(msg: str) -> None:
    log("engine", msg)


def _rank_job(job: Tuple[SparseIntMatrix, str, int]) -> Tuple[int, int]:
    m, method, prime = job
    result = compute_rank(m, method, prime)
    return result.rank, result.peeled


@dataclass
class BlockStats:
    """How the work was split: rank calls, largest matrix side and peeling."""
    blocks: int = 0
    largest_block: int = 0
    peeled: int = 0
    rank_calls: int = 0

    def record(self, m: SparseIntMatrix) -> None:
        self.blocks += 1
        self.largest_block = max(self.largest_block, m.rows, m.cols)

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass
class DecompositionResult:
    """Census-weighted evaluation of ``b_d`` as a sum of essential Betti numbers."""
    degree: int
    value: int
    # (code, induced count, beta_d) for every class that contributes.
    terms: List[Tuple[CanonicalCode, int, int]] = field(default_factory=list)
    # r -> sum over classes of count * beta_{d,r}
    bigraded: Dict[int, int] = field(default_factory=dict)

    @property
    def bigraded_total(self) -> int:
        return sum(self.bigraded.values())


class CohomologyEngine:
    """Rank-based cohomology with memoized essential tables.

    Example:
        engine = CohomologyEngine()
        engine.betti(named("complete", 2)).to_list()   # [1, 2, 2, 1]
    """

    def __init__(
        self,
        strategy: str = "blockwise",
        workers: int = 1,
        rank_method: str = "exact",
        prime: int = DEFAULT_PRIME,
        max_order: int = DEFAULT_MAX_ORDER,
        cache: Optional[TableCache] = None,
    ):
        if strategy not in STRATEGIES:
            raise ConfigError(f"Unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        if workers < 1:
            raise ConfigError(f"workers must be >= 1, got {workers}")
        self.strategy = strategy
        self.workers = workers
        self.rank_method = rank_method
        self.prime = prime
        self.max_order = max_order
        self.cache = cache
        self.stats = BlockStats()
        self._memo: Dict[Tuple[CanonicalCode, Optional[int]], EssentialTable] = {}

    @classmethod
    def from_config(cls, config: "LieGraphConfig", cache: Optional[TableCache] = None) -> "CohomologyEngine":
        return cls(
            strategy=config.engine.strategy.value,
            workers=config.engine.workers,
            rank_method=config.linalg.method.value,
            prime=config.linalg.prime,
            max_order=config.canonical.max_order,
            cache=cache,
        )

    @property
    def method_label(self) -> str:
        if self.rank_method == "modular":
            return RankMethod.MODULAR.value
        return RankMethod.EXACT.value

    @property
    def cache_kind(self) -> str:
        """Cache namespace; modular tables live apart from exact ones, one per prime."""
        if self.rank_method == "modular":
            return f"{ESSENTIAL_KIND}@mod{self.prime}"
        return ESSENTIAL_KIND

    # -------------------------------------------------------------------------
    # Rank plumbing
    # -------------------------------------------------------------------------

    def _ranks(self, matrices: List[SparseIntMatrix]) -> List[int]:
        """Ranks in input order; trivial matrices never reach the rank kernel."""
        out = [0] * len(matrices)
        jobs = []
        for k, m in enumerate(matrices):
            if m.is_zero():
                continue
            self.stats.record(m)
            jobs.append((k, (m, self.rank_method, self.prime)))
        self.stats.rank_calls += len(jobs)

        if self.workers > 1 and len(jobs) > 1:
            with concurrent.futures.ProcessPoolExecutor(max_workers=self.workers) as pool:
                ranks = list(pool.map(_rank_job, [job for _, job in jobs], chunksize=16))
        else:
            ranks = [_rank_job(job) for _, job in jobs]
        for (k, _), (r, peeled) in zip(jobs, ranks):
            out[k] = r
            self.stats.peeled += peeled
        return out

    def _block_ranks(
        self,
        cx: ExteriorComplex,
        rank_degrees: Iterable[int],
        support: Optional[int] = None,
        basis_cache: Optional[Dict[int, Dict[BlockKey, List[Monomial]]]] = None,
    ) -> Dict[Tuple[int, BlockKey], int]:
        """``rank Q_d`` on each ``(support, weight)`` block, for the requested ``d``.

        Bases built along the way are left in ``basis_cache`` for the caller.
        """
        rank_degrees = sorted(set(rank_degrees))
        if basis_cache is None:
            basis_cache = {}

        def blocks(d: int) -> Dict[BlockKey, List[Monomial]]:
            if d not in basis_cache:
                basis_cache[d] = cx.blocks(d, support)
            return basis_cache[d]

        keys: List[Tuple[int, BlockKey]] = []
        matrices: List[SparseIntMatrix] = []
        for d in rank_degrees:
            source, target = blocks(d), blocks(d + 1)
            for key, monomials in source.items():
                if key in target:
                    keys.append((d, key))
                    matrices.append(cx.matrix(monomials, target[key]))
        return dict(zip(keys, self._ranks(matrices)))

    # -------------------------------------------------------------------------
    # Betti numbers
    # -------------------------------------------------------------------------

    def betti(
        self,
        g: Graph,
        sigma: CliqueFamily = EMPTY_FAMILY,
        degrees: Optional[Iterable[int]] = None,
        strategy: Optional[str] = None,
    ) -> BettiTable:
        """Betti table of ``L(g, sigma)``.

        Args:
            g: The graph
            sigma: Clique family (empty for the nilpotent algebra)
            degrees: Only compute these degrees; the rest are left as None
            strategy: Override the engine strategy for this call
        """
        strategy = strategy or self.strategy
        if strategy not in STRATEGIES:
            raise ConfigError(f"Unknown strategy {strategy!r}; expected one of {STRATEGIES}")
        sigma.validate(g)
        cx = ExteriorComplex(g, sigma)
        top = cx.dimension
        wanted = list(range(top + 1)) if degrees is None else sorted(
            {d for d in degrees if 0 <= d <= top}
        )
        rank_degrees = {d for w in wanted for d in (w - 1, w) if 0 <= d < top}
        _log(f"betti n={g.n} |E|={g.size} s={len(sigma)} dim={top} degrees={wanted} ({strategy})")

        if strategy == "monolithic":
            ordered = sorted(rank_degrees)
            matrices = [cx.differential(d) for d in ordered]
            rank = dict(zip(ordered, self._ranks(matrices)))
        else:
            rank = _per_degree(self._block_ranks(cx, rank_degrees))

        dims: List[Optional[int]] = [None] * (top + 1)
        for w in wanted:
            dims[w] = binom(top, w) - rank.get(w, 0) - rank.get(w - 1, 0)
        return BettiTable.of(dims)

    # -------------------------------------------------------------------------
    # Essential cohomology
    # -------------------------------------------------------------------------

    def essential_betti(self, g: Graph, degrees: Optional[Iterable[int]] = None) -> EssentialTable:
        """Essential table of ``g`` with its bigraded refinement.

        Full tables are memoized and persisted by canonical code; partial
        tables (``degrees`` given) are memoized per degree.
        """
        if g.n == 0:
            return POINT
        code = canonical_code(g, self.max_order) if g.n <= self.max_order else None
        top = g.generator_count
        wanted = list(range(top + 1)) if degrees is None else sorted(
            {d for d in degrees if 0 <= d <= top}
        )

        if code is not None:
            full = self._lookup(code)
            if full is not None:
                return full if degrees is None else _restrict(full, wanted)
            if degrees is not None:
                parts = [self._memo.get((code, d)) for d in wanted]
                if all(p is not None for p in parts):
                    return _merge(top, parts)  # type: ignore[arg-type]

        table = self._compute_essential(g, wanted)
        if code is not None:
            if degrees is None:
                self._memo[(code, None)] = table
                if self.cache is not None:
                    self.cache.put(code, self.cache_kind, table.to_dict())
            else:
                for d in wanted:
                    self._memo[(code, d)] = _restrict(table, [d])
        return table

    def _lookup(self, code: CanonicalCode) -> Optional[EssentialTable]:
        table = self._memo.get((code, None))
        if table is None and self.cache is not None:
            stored = self.cache.get(code, self.cache_kind)
            if stored is not None:
                table = EssentialTable.from_dict(stored)
                self._memo[(code, None)] = table
        return table

    def _compute_essential(self, g: Graph, wanted: List[int]) -> EssentialTable:
        cx = ExteriorComplex(g)
        full = (1 << g.n) - 1
        top = cx.dimension
        # A degree-d monomial touches at most 2d vertices.
        live = [d for d in wanted if g.n <= 2 * d]
        rank_degrees = {d for w in live for d in (w - 1, w) if 0 <= d < top}
        bases: Dict[int, Dict[BlockKey, List[Monomial]]] = {}
        ranks = self._block_ranks(cx, rank_degrees, support=full, basis_cache=bases)

        dims: List[Optional[int]] = [None] * (top + 1)
        bigraded: Dict[Tuple[int, int], int] = {}
        for d in wanted:
            dims[d] = 0
        for d in live:
            if d not in bases:
                bases[d] = cx.blocks(d, full)
            for (_, weight), monomials in bases[d].items():
                key = (full, weight)
                value = len(monomials) - ranks.get((d, key), 0) - ranks.get((d - 1, key), 0)
                if value:
                    bigraded[(d, weight - d)] = value
                    dims[d] += value  # type: ignore[operator]
        return EssentialTable(dims=tuple(dims), bigraded=bigraded)

    # -------------------------------------------------------------------------
    # Decomposition over induced subgraphs
    # -------------------------------------------------------------------------

    def decomposition(self, g: Graph, degree: int) -> DecompositionResult:
        """``b_degree`` as a census-weighted sum of essential Betti numbers.

        Raises:
            OrderLimitError: The census would need classes beyond ``max_order``.
        """
        order = 0 if degree <= 0 else min(2 * degree - 1, g.n)
        if order > self.max_order:
            raise OrderLimitError(order, self.max_order)
        result = DecompositionResult(degree=degree, value=0)
        counts = census(g, order, self.max_order)
        for code in sorted(counts.counts, key=lambda c: (counts.orders[c], c)):
            h = parse_graph6(code)
            table = self.essential_betti(h, [degree])
            beta = table[degree]
            if not beta:
                continue
            count = counts.count(code)
            result.terms.append((code, count, beta))
            result.value += count * beta
            for r, v in table.row(degree).items():
                result.bigraded[r] = result.bigraded.get(r, 0) + count * v
        return result

    def betti_via_decomposition(self, g: Graph, degree: int, bigraded: bool = False) -> int:
        """``b_degree(g)`` from the census; ``bigraded`` sums ``beta_{d,r}`` instead of ``beta_d``."""
        result = self.decomposition(g, degree)
        return result.bigraded_total if bigraded else result.value

    # -------------------------------------------------------------------------
    # Solvable extensions
    # -------------------------------------------------------------------------

    def ggi_betti_reduced(self, g: Graph, sigma: CliqueFamily) -> BettiTable:
        """Betti table of ``L(g, sigma)`` through ``G~ + |Sigma| K1``."""
        reduced, s = ggi_reduce(g, sigma)
        b_tilde = list(self.betti(reduced))
        top = g.generator_count + s
        return BettiTable.of(ggi_bn_formula(b_tilde, s, n) for n in range(top + 1))


def _per_degree(block_ranks: Dict[Tuple[int, BlockKey], int]) -> Dict[int, int]:
    """Collapse per-block ranks to per-degree ranks."""
    out: Dict[int, int] = {}
    for (d, _), r in block_ranks.items():
        out[d] = out.get(d, 0) + r
    return out


def _restrict(table: EssentialTable, degrees: List[int]) -> EssentialTable:
    keep = set(degrees)
    dims = tuple(v if d in keep else None for d, v in enumerate(table.dims))
    return EssentialTable(
        dims=dims, bigraded={k: v for k, v in table.bigraded.items() if k[0] in keep}
    )


def _merge(top: int, parts: List[EssentialTable]) -> EssentialTable:
    dims: List[Optional[int]] = [None] * (top + 1)
    bigraded: Dict[Tuple[int, int], int] = {}
    for part in parts:
        for d, v in enumerate(part.dims):
            if v is not None:
                dims[d] = v
        bigraded.update(part.bigraded)
    return EssentialTable(dims=tuple(dims), bigraded=bigraded)
