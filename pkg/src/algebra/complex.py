"""Chevalley-Eilenberg complex of ``L(G)`` and ``L(G, Sigma)``.

The differential ``Q`` is dual to the bracket::

    Q(x_{i,j}*) = x_i* x_j* + sum_k |{i,j} & sigma_k| x_{i,j}* y_k*
    Q(x_i*)     = sum_k |{i} & sigma_k| x_i* y_k*
    Q(y_k*)     = 0

and is extended to monomials by the graded Leibniz rule. ``Q`` preserves the
vertex support ``S`` and the weight ``N`` of a monomial, so every differential
splits into ``(S, N)`` blocks.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from src.algebra.bracket import structure_constants_for
from src.algebra.generators import GeneratorTable, Monomial
from src.errors import InvariantViolation
from src.graphs.graph import EMPTY_FAMILY, CliqueFamily, Graph, vertices_to_mask
from src.linalg.sparse import SparseIntMatrix

BlockKey = Tuple[int, int]  # (support mask, weight)


class ExteriorComplex:
    """Monomial bases and differential matrices for one ``(G, Sigma)``."""

    def __init__(self, g: Graph, sigma: CliqueFamily = EMPTY_FAMILY):
        self.graph = g
        self.sigma = sigma
        self.table = GeneratorTable(g, sigma)
        # Q(z*) as a list of (coefficient, a, b) with a < b.
        self._images: List[List[Tuple[int, int, int]]] = [[] for _ in range(len(self.table))]
        for (a, b), image in structure_constants_for(self.table).items():
            for z, coef in image.items():
                self._images[z].append((coef, a, b))
        for terms in self._images:
            terms.sort(key=lambda t: (t[1], t[2]))

    @property
    def dimension(self) -> int:
        """Dimension of the Lie algebra, i.e. the number of generators."""
        return len(self.table)

    def apply(self, gens: Tuple[int, ...]) -> Dict[Tuple[int, ...], int]:
        """``Q`` of a sorted monomial as ``{sorted monomial: coefficient}``."""
        out: Dict[Tuple[int, ...], int] = defaultdict(int)
        for j, gen in enumerate(gens):
            images = self._images[gen]
            if not images:
                continue
            rest = gens[:j] + gens[j + 1:]
            present = set(rest)
            for coef, a, b in images:
                if a in present or b in present:
                    continue
                pa = bisect_left(rest, a)
                pb = bisect_left(rest, b)
                # (-1)^j from Leibniz, times the parity of sorting a and b into place.
                sign = -1 if (j + pa + pb) % 2 else 1
                out[rest[:pa] + (a,) + rest[pa:pb] + (b,) + rest[pb:]] += sign * coef
        return {k: v for k, v in out.items() if v}

    # =========================================================================
    # Bases
    # =========================================================================

    def basis(
        self, degree: int, support: Optional[int] = None, weight: Optional[int] = None
    ) -> List[Monomial]:
        """Monomials of ``degree`` in lexicographic order, optionally filtered.

        Args:
            degree: Exterior degree.
            support: Vertex bitmask the monomial support must equal exactly.
            weight: Required weight ``N``.
        """
        size = len(self.table)
        if degree < 0 or degree > size:
            return []
        if support is None:
            candidates = range(size)
        else:
            candidates = [p for p in range(size) if not self.table.support[p] & ~support]
        out = []
        for combo in combinations(candidates, degree):
            m = self.table.monomial(combo)
            if support is not None and m.support != support:
                continue
            if weight is not None and m.weight != weight:
                continue
            out.append(m)
        return out

    def blocks(self, degree: int, support: Optional[int] = None) -> Dict[BlockKey, List[Monomial]]:
        """Basis of ``degree`` grouped by ``(support, weight)``, keys sorted."""
        grouped: Dict[BlockKey, List[Monomial]] = defaultdict(list)
        for m in self.basis(degree, support):
            grouped[(m.support, m.weight)].append(m)
        return {key: grouped[key] for key in sorted(grouped)}

    # =========================================================================
    # Differentials
    # =========================================================================

    def matrix(self, source: List[Monomial], target: List[Monomial]) -> SparseIntMatrix:
        """Matrix of ``Q`` from ``source`` (columns) to ``target`` (rows).

        Raises:
            InvariantViolation: ``Q`` of a source monomial leaves ``target``.
        """
        row_of = {m.gens: r for r, m in enumerate(target)}
        entries = []
        for col, m in enumerate(source):
            for gens, coef in self.apply(m.gens).items():
                row = row_of.get(gens)
                if row is None:
                    raise InvariantViolation(
                        f"Q maps {self.table.label(m)} outside the target basis"
                    )
                entries.append((row, col, coef))
        return SparseIntMatrix.from_entries(len(target), len(source), entries)

    def differential(
        self, degree: int, support: Optional[int] = None, weight: Optional[int] = None
    ) -> SparseIntMatrix:
        """``Q: C^degree -> C^(degree+1)`` restricted to the given filter."""
        return self.matrix(
            self.basis(degree, support, weight), self.basis(degree + 1, support, weight)
        )

    def square_zero_failures(self) -> List[Tuple[int, BlockKey]]:
        """``(degree, block)`` pairs where ``Q`` composed with itself is nonzero."""
        failures = []
        for degree in range(len(self.table) - 1):
            for key, source in self.blocks(degree).items():
                middle = self.basis(degree + 1, *key)
                target = self.basis(degree + 2, *key)
                first = self.matrix(source, middle)
                second = self.matrix(middle, target)
                if not second.matmul(first).is_zero():
                    failures.append((degree, key))
        return failures


def _filter_mask(support: Optional[Iterable[int]]) -> Optional[int]:
    return None if support is None else vertices_to_mask(support)


def enumerate_basis(
    g: Graph,
    sigma: CliqueFamily,
    degree: int,
    support: Optional[Iterable[int]] = None,
    weight: Optional[int] = None,
) -> List[Monomial]:
    """Degree-``degree`` monomials of ``C(G, Sigma)`` with support exactly ``support``."""
    return ExteriorComplex(g, sigma).basis(degree, _filter_mask(support), weight)


def differential_matrix(
    g: Graph,
    sigma: CliqueFamily,
    degree: int,
    support: Optional[Iterable[int]] = None,
    weight: Optional[int] = None,
) -> SparseIntMatrix:
    return ExteriorComplex(g, sigma).differential(degree, _filter_mask(support), weight)
