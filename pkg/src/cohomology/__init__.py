"""Cohomology module - Betti tables, essential cohomology and their cache."""

from src.cohomology.cache import CacheStats, TableCache, resolve_cache_dir
from src.cohomology.engine import BlockStats, CohomologyEngine, DecompositionResult
from src.cohomology.tables import (
    POINT,
    BettiTable,
    EssentialTable,
    kunneth,
    kunneth_essential,
)
from src.graphs.reduction import ggi_reduce

__all__ = [
    "CacheStats",
    "TableCache",
    "resolve_cache_dir",
    "BlockStats",
    "CohomologyEngine",
    "DecompositionResult",
    "POINT",
    "BettiTable",
    "EssentialTable",
    "kunneth",
    "kunneth_essential",
    "ggi_reduce",
]
