"""Algebra module - generators, brackets and the exterior complex."""

from src.algebra.bracket import bracket, jacobi_check, structure_constants
from src.algebra.complex import (
    BlockKey,
    ExteriorComplex,
    differential_matrix,
    enumerate_basis,
)
from src.algebra.generators import GeneratorIndex, GeneratorKind, GeneratorTable, Monomial

__all__ = [
    "bracket",
    "jacobi_check",
    "structure_constants",
    "BlockKey",
    "ExteriorComplex",
    "differential_matrix",
    "enumerate_basis",
    "GeneratorIndex",
    "GeneratorKind",
    "GeneratorTable",
    "Monomial",
]
