"""
liegraph - exact cohomology of Lie algebras built from graphs.

Betti numbers of the two-step nilpotent Dani-Mainkar algebra L(G) and of its
solvable extensions L(G, Sigma) by clique families, computed by exact rank
over the integers, plus the induced-subgraph decomposition into essential
cohomology and closed forms for the standard families.

Usage:
    from src import CohomologyEngine, named

    CohomologyEngine().betti(named("complete", 2)).to_list()   # [1, 2, 2, 1]
"""

__version__ = "0.3.0"

from src.cohomology.engine import CohomologyEngine
from src.config.defaults import CONFIG
from src.graphs.graph import CliqueFamily, Graph, named

__all__ = [
    "CONFIG",
    "CliqueFamily",
    "CohomologyEngine",
    "Graph",
    "named",
    "__version__",
]
