"""Exact rank of sparse integer matrices.

Pipeline: structural peeling (zero rows and columns vanish, every singleton row
or column is a pivot worth one unit of rank) followed by fraction-free sparse
elimination of the remaining core with sympy's ``DomainMatrix.rref_den``.
Differential matrices are extremely sparse, so the core is usually tiny.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from sympy import isprime
from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from src.linalg.sparse import SparseIntMatrix

DEFAULT_PRIME = 2_147_483_647  # 2**31 - 1
MIN_PRIME = 1 << 30


class RankMethod(str, Enum):
    EXACT = "exact-fraction-free"
    MODULAR = "modular-probabilistic"


@dataclass(frozen=True)
class RankResult:
    """Rank plus how it was obtained."""

    rank: int
    method: RankMethod
    modulus: Optional[int] = None
    peeled: int = 0
    core_rows: int = 0
    core_cols: int = 0


Rows = Dict[int, Dict[int, int]]


def peel(rows: Rows) -> Tuple[int, Rows]:
    """Strip singleton rows and columns from a row-major sparse pattern.

    Returns the rank contributed by the peeled pivots and the remaining core.
    A singleton column ``c`` with its entry in row ``r`` can clear row ``r`` in
    every other column without touching anything else, so
    ``rank(A) = 1 + rank(A without row r and column c)``; rows likewise.
    """
    rows = {r: dict(cs) for r, cs in rows.items() if cs}
    cols: Rows = defaultdict(dict)
    for r, cs in rows.items():
        for c, v in cs.items():
            cols[c][r] = v

    queue: List[Tuple[str, int]] = [("r", r) for r, cs in rows.items() if len(cs) == 1]
    queue += [("c", c) for c, rs in cols.items() if len(rs) == 1]
    rank = 0

    def drop(table: Rows, key: int, other: int, kind: str) -> None:
        entries = table[key]
        del entries[other]
        if not entries:
            del table[key]
        elif len(entries) == 1:
            queue.append((kind, key))

    while queue:
        kind, k = queue.pop()
        if kind == "r":
            if k not in rows or len(rows[k]) != 1:
                continue
            r, c = k, next(iter(rows[k]))
        else:
            if k not in cols or len(cols[k]) != 1:
                continue
            r, c = next(iter(cols[k])), k
        rank += 1
        for c2 in list(rows[r]):
            if c2 != c:
                drop(cols, c2, r, "c")
        for r2 in list(cols[c]):
            if r2 != r:
                drop(rows, r2, c, "r")
        del rows[r]
        del cols[c]
    return rank, rows


def _core_matrix(core: Rows, domain) -> DomainMatrix:
    col_ids = sorted({c for cs in core.values() for c in cs})
    col_pos = {c: j for j, c in enumerate(col_ids)}
    rep = {
        i: {col_pos[c]: domain.convert(v) for c, v in core[r].items()}
        for i, r in enumerate(sorted(core))
    }
    return DomainMatrix(rep, (len(core), len(col_ids)), domain)


def rank_exact(m: SparseIntMatrix) -> RankResult:
    """Rank over the rationals, exact and deterministic."""
    peeled, core = peel(m.to_rows())
    if not core:
        return RankResult(rank=peeled, method=RankMethod.EXACT, peeled=peeled)
    dm = _core_matrix(core, ZZ)
    _, _, pivots = dm.rref_den()
    return RankResult(
        rank=peeled + len(pivots),
        method=RankMethod.EXACT,
        peeled=peeled,
        core_rows=dm.shape[0],
        core_cols=dm.shape[1],
    )


def rank_modular(m: SparseIntMatrix, p: int = DEFAULT_PRIME) -> RankResult:
    """Rank over GF(p); never exceeds the rational rank.

    Raises:
        ValueError: ``p`` is not a prime above 2**30.
    """
    if p <= MIN_PRIME or not isprime(p):
        raise ValueError(f"Modulus must be a prime > 2**30, got {p}")
    reduced: Rows = defaultdict(dict)
    for r, c, v in m.entries:
        if v % p:
            reduced[r][c] = v % p
    peeled, core = peel(reduced)
    if not core:
        return RankResult(rank=peeled, method=RankMethod.MODULAR, modulus=p, peeled=peeled)
    dm = _core_matrix(core, GF(p))
    _, pivots = dm.rref()
    return RankResult(
        rank=peeled + len(pivots),
        method=RankMethod.MODULAR,
        modulus=p,
        peeled=peeled,
        core_rows=dm.shape[0],
        core_cols=dm.shape[1],
    )


def compute_rank(m: SparseIntMatrix, method: str = "exact", prime: int = DEFAULT_PRIME) -> RankResult:
    """Dispatch on the configured method; ``modular`` must be opted into."""
    if method == "modular":
        return rank_modular(m, prime)
    return rank_exact(m)
