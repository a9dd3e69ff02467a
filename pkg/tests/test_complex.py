"""Tests for generators, brackets and the exterior complex."""

from math import comb

import pytest

from src.algebra.bracket import bracket, jacobi_check, structure_constants, structure_constants_for
from src.algebra.complex import ExteriorComplex, differential_matrix, enumerate_basis
from src.algebra.generators import GeneratorTable
from src.errors import GraphValidationError, InvariantViolation
from src.graphs.fixtures import PAW_CLIQUES, PAW
from src.graphs.graph import EMPTY_FAMILY, CliqueFamily, named


class TestGeneratorTable:
    def test_order_and_labels(self):
        table = GeneratorTable(PAW, PAW_CLIQUES)
        labels = [gen.label for gen in table.generators]
        assert labels == [
            "x1*", "x2*", "x3*", "x4*",
            "x{1,2}*", "x{1,3}*", "x{2,3}*", "x{3,4}*",
            "y1*", "y2*", "y3*",
        ]
        assert (table.vertex_count, table.edge_count, table.clique_count) == (4, 4, 3)

    def test_lookups(self):
        table = GeneratorTable(PAW, PAW_CLIQUES)
        assert table.vertex(3) == 2
        assert table.edge(4, 3) == 7
        assert table.clique(1) == 8
        with pytest.raises(GraphValidationError):
            table.edge(1, 4)
        with pytest.raises(GraphValidationError):
            table.clique(4)

    def test_monomial_support_and_weight(self):
        table = GeneratorTable(PAW, PAW_CLIQUES)
        m = table.monomial([0, 7, 8])
        assert m.support == 0b1101
        assert m.weight == 3
        assert m.degree == 3
        assert table.label(m) == "x1*x{3,4}*y1*"
        assert table.label(table.monomial([])) == "1"

    def test_monomial_requires_increasing_positions(self):
        with pytest.raises(ValueError):
            GeneratorTable(PAW).monomial([2, 1])


class TestBracket:
    def test_heisenberg(self):
        assert structure_constants(named("complete", 2)) == {("x1", "x2"): {"x{1,2}": 1}}

    def test_one_dimensional_extension(self):
        sigma = CliqueFamily.of({1})
        assert structure_constants(named("complete", 1), sigma) == {("x1", "y1"): {"x1": 1}}

    def test_clique_weights(self):
        constants = structure_constants(PAW, PAW_CLIQUES)
        assert constants[("x{1,2}", "y3")] == {"x{1,2}": 2}
        assert constants[("x{1,2}", "y1")] == {"x{1,2}": 2}
        assert constants[("x{3,4}", "y3")] == {"x{3,4}": 1}
        assert ("x{3,4}", "y1") not in constants
        assert ("x4", "y3") not in constants

    def test_antisymmetry(self):
        constants = structure_constants_for(GeneratorTable(PAW, PAW_CLIQUES))
        assert bracket(constants, {0: 1}, {1: 1}) == {4: 1}
        assert bracket(constants, {1: 1}, {0: 1}) == {4: -1}
        assert bracket(constants, {0: 1}, {0: 1}) == {}

    def test_bilinearity(self):
        constants = structure_constants_for(GeneratorTable(PAW))
        # [x1 + x3, 2 x2] = 2 x12 - 2 x23
        assert bracket(constants, {0: 1, 2: 1}, {1: 2}) == {4: 2, 6: -2}

    @pytest.mark.parametrize(
        "g, sigma",
        [
            (named("complete", 4), EMPTY_FAMILY),
            (PAW, PAW_CLIQUES),
            (named("complete", 3), CliqueFamily.of({1, 2, 3}, {2, 3})),
        ],
    )
    def test_jacobi(self, g, sigma):
        assert jacobi_check(g, sigma)


class TestExteriorComplex:
    def test_q_on_generators(self):
        cx = ExteriorComplex(named("complete", 2))
        assert cx.apply((2,)) == {(0, 1): 1}
        assert cx.apply((0,)) == {}
        assert cx.apply((0, 2)) == {}

    def test_leibniz_sign(self):
        cx = ExteriorComplex(named("complete", 3))
        # Q(x3* x12*) = -x3* x1* x2* = -x1* x2* x3*
        assert cx.apply((2, 3)) == {(0, 1, 2): -1}

    def test_extension_terms(self):
        cx = ExteriorComplex(named("complete", 2), CliqueFamily.of({1, 2}))
        # Q(x12*) = x1* x2* + 2 x12* y1*
        assert cx.apply((2,)) == {(0, 1): 1, (2, 3): 2}
        assert cx.apply((3,)) == {}

    def test_basis_with_exact_support(self):
        table = GeneratorTable(PAW)
        basis = enumerate_basis(PAW, EMPTY_FAMILY, 2, support=[1, 3, 4])
        assert set(table.labels(basis)) == {"x1*x{3,4}*", "x4*x{1,3}*", "x{1,3}*x{3,4}*"}

    def test_basis_weight_filter(self):
        basis = enumerate_basis(PAW, EMPTY_FAMILY, 2, support=[1, 3, 4], weight=3)
        assert len(basis) == 2

    def test_blocks_partition_the_basis(self):
        cx = ExteriorComplex(PAW, PAW_CLIQUES)
        for degree in range(cx.dimension + 1):
            blocks = cx.blocks(degree)
            assert list(blocks) == sorted(blocks)
            assert sum(len(b) for b in blocks.values()) == comb(cx.dimension, degree)

    def test_differential_matrix(self):
        m = differential_matrix(named("complete", 2), EMPTY_FAMILY, 1)
        assert m.shape == (3, 3)
        assert m.entries == ((0, 2, 1),)
        assert differential_matrix(named("complete", 2), EMPTY_FAMILY, 0).is_zero()

    def test_matrix_rejects_foreign_target(self):
        cx = ExteriorComplex(named("complete", 2))
        source = cx.basis(1)
        with pytest.raises(InvariantViolation):
            cx.matrix(source, [])

    @pytest.mark.parametrize(
        "g, sigma",
        [
            (named("complete", 4), EMPTY_FAMILY),
            (PAW, PAW_CLIQUES),
            (named("star", 3), CliqueFamily.of({1, 2})),
        ],
    )
    def test_square_zero(self, g, sigma):
        assert ExteriorComplex(g, sigma).square_zero_failures() == []
