"""Closed-form Betti numbers and the golden beta3 table."""

from src.formulas.beta3 import BETA3_VALUES, Beta3Entry, Beta3Table, load_beta3_table
from src.formulas.closed_forms import (
    b1_formula,
    b2_census_formula,
    b2_formula,
    b3_complete,
    b3_formula,
    binom,
    complete_essential,
    ggi_b1_formula,
    ggi_b2_formula,
    ggi_b3_formula,
    ggi_bn_formula,
    star_betti,
    star_bigraded,
    star_essential,
    star_total,
)

__all__ = [
    "BETA3_VALUES",
    "Beta3Entry",
    "Beta3Table",
    "load_beta3_table",
    "b1_formula",
    "b2_census_formula",
    "b2_formula",
    "b3_complete",
    "b3_formula",
    "binom",
    "complete_essential",
    "ggi_b1_formula",
    "ggi_b2_formula",
    "ggi_b3_formula",
    "ggi_bn_formula",
    "star_betti",
    "star_bigraded",
    "star_essential",
    "star_total",
]
