"""Closed-form Betti numbers, independent of the rank engine.

Binomials follow the zero convention: ``C(n, k) = 0`` unless ``0 <= k <= n``.
"""

from __future__ import annotations

from math import comb
from typing import Callable, Optional, Sequence

from src.errors import InvariantViolation
from src.formulas.beta3 import Beta3Table, load_beta3_table
from src.graphs.census import census, count_induced
from src.graphs.graph import CliqueFamily, Graph, count_triangles, named
from src.graphs.reduction import ggi_reduce


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


# =============================================================================
# Dani-Mainkar algebras
# =============================================================================

def b1_formula(g: Graph) -> int:
    return g.n


def b2_formula(g: Graph) -> int:
    """``C(|V|, 2) + (1/2) sum_i deg(i)^2 - #triangles``."""
    squares = sum(d * d for d in g.degrees())
    return binom(g.n, 2) + squares // 2 - count_triangles(g)


def b2_census_formula(g: Graph) -> int:
    """``|2K1| + 2|K2| + |P3| + 2|K3|`` over induced subgraphs."""
    non_edges = binom(g.n, 2) - g.size
    return (
        non_edges
        + 2 * g.size
        + count_induced(g, named("path", 3))
        + 2 * count_induced(g, named("complete", 3))
    )


def b3_formula(g: Graph, table: Optional[Beta3Table] = None) -> int:
    """Weighted count of the induced copies of the 23 graphs in the beta3 table."""
    table = table or load_beta3_table()
    counts = census(g, min(5, g.n))
    return sum(weight * counts.count(code) for code, weight in table.weights().items())


def b3_complete(n: int) -> int:
    """``b_3(K_n)`` from the census form, checked against its quintic expansion.

    Raises:
        InvariantViolation: The two forms disagree.
    """
    census_form = binom(n, 2) + 9 * binom(n, 3) + 14 * binom(n, 4) + 6 * binom(n, 5)
    quintic = 3 * n**5 + 5 * n**4 - 15 * n**3 - 5 * n**2 + 12 * n
    if n >= 1 and quintic != 60 * census_form:
        raise InvariantViolation(f"b3(K_{n}): {census_form} vs quintic {quintic}/60")
    return census_form


def complete_essential(i: int, n: int, betti_of: Callable[[int, int], int]) -> int:
    """``beta_i(K_n)`` by inverting ``b_i(K_n) = sum_r C(n, r) beta_i(K_r)``.

    Args:
        i: Degree
        n: Order of the complete graph
        betti_of: ``betti_of(i, r)`` returns ``b_i(K_r)``
    """
    return sum((-1) ** (n - r) * binom(n, r) * betti_of(i, r) for r in range(n + 1))


# =============================================================================
# Star graphs
# =============================================================================

def star_betti(n: int, k: int) -> int:
    return binom(n + 1, (k + 1) // 2) * binom(n, k // 2)


def star_essential(n: int, k: int) -> int:
    """``beta_k(S_n)``, concentrated in degrees ``n..2n+1``."""
    if k < n or k > 2 * n + 1:
        return 0
    if k == n:
        return binom(n, n // 2) - 1
    a = 2 * n - k
    return binom(a, a // 2) * binom(n, a) + binom(a + 1, (a + 1) // 2) * binom(n, a + 1)


def star_total(n: int) -> int:
    """Total Betti mass ``2 C(2n+1, n)``."""
    return 2 * binom(2 * n + 1, n)


def star_bigraded(n: int, r: int) -> int:
    """``beta_{n,r}(S_n) = C(n, r) - C(n, r-1)`` for ``1 <= r <= n/2``, else 0."""
    if r < 1 or 2 * r > n:
        return 0
    return binom(n, r) - binom(n, r - 1)


# =============================================================================
# Solvable extensions
# =============================================================================

def ggi_bn_formula(b_tilde: Sequence[int], s: int, n: int) -> int:
    """``b_n(G, Sigma) = sum_l b_l(G~) C(s, n - l)``."""
    return sum(b * binom(s, n - l) for l, b in enumerate(b_tilde) if l <= n)


def ggi_b1_formula(g: Graph, sigma: CliqueFamily) -> int:
    reduced, s = ggi_reduce(g, sigma)
    return b1_formula(reduced) + s


def ggi_b2_formula(g: Graph, sigma: CliqueFamily) -> int:
    reduced, s = ggi_reduce(g, sigma)
    return b2_formula(reduced) + b1_formula(reduced) * s + binom(s, 2)


def ggi_b3_formula(g: Graph, sigma: CliqueFamily) -> int:
    reduced, s = ggi_reduce(g, sigma)
    return (
        b3_formula(reduced)
        + b2_formula(reduced) * s
        + b1_formula(reduced) * binom(s, 2)
        + binom(s, 3)
    )
