"""Reduction of a solvable extension ``L(G, Sigma)`` to a nilpotent one.

``L(G, Sigma)`` has the cohomology of ``L(G~ + |Sigma| K1)``, where ``G~`` is
induced on the vertices no clique of ``Sigma`` touches.
"""

from __future__ import annotations

from typing import Tuple

from src.graphs.graph import CliqueFamily, Graph, induced_subgraph


def ggi_reduce(g: Graph, sigma: CliqueFamily) -> Tuple[Graph, int]:
    """Return ``(G~, |Sigma|)``.

    Raises:
        CliqueError: A member of ``sigma`` is not a clique of ``g``.
    """
    sigma.validate(g)
    covered = sigma.covered()
    return induced_subgraph(g, [v for v in g.vertices if v not in covered]), len(sigma)
