"""Exact linear algebra - sparse integer matrices and their rank."""

from src.linalg.rank import (
    DEFAULT_PRIME,
    RankMethod,
    RankResult,
    compute_rank,
    peel,
    rank_exact,
    rank_modular,
)
from src.linalg.sparse import SparseIntMatrix, dump_matrix, load_matrix

__all__ = [
    "DEFAULT_PRIME",
    "RankMethod",
    "RankResult",
    "compute_rank",
    "peel",
    "rank_exact",
    "rank_modular",
    "SparseIntMatrix",
    "dump_matrix",
    "load_matrix",
]
