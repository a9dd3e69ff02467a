"""Tests for the closed-form Betti numbers and the beta3 table."""

import pytest

from src.errors import CliqueError
from src.formulas.beta3 import BETA3_VALUES, load_beta3_table
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
from src.graphs.canonical import canonical_code
from src.graphs.fixtures import PAW_CLIQUES, CHAIN_CLIQUES, PAW, SQUARE_TAIL, TRIANGLE_CHAIN
from src.graphs.graph import CliqueFamily, Graph, named


def test_binom_zero_convention():
    assert binom(5, 2) == 10
    assert binom(3, 4) == 0
    assert binom(3, -1) == 0
    assert binom(-1, 0) == 0
    assert binom(0, 0) == 1


class TestLowDegrees:
    def test_b1(self):
        assert b1_formula(SQUARE_TAIL) == 6

    def test_b2(self):
        assert b2_formula(named("complete", 2)) == 2
        assert b2_formula(named("complete", 3)) == 8
        assert b2_formula(SQUARE_TAIL) == 28

    def test_b2_census_form(self):
        for g in (PAW, SQUARE_TAIL, named("complete", 4), named("cycle", 5)):
            assert b2_census_formula(g) == b2_formula(g)

    def test_b3_square_tail(self):
        assert b3_formula(SQUARE_TAIL) == 74

    def test_b3_complete(self):
        assert [b3_complete(n) for n in range(1, 6)] == [0, 1, 12, 56, 176]
        assert b3_formula(named("complete", 4)) == 56
        assert b3_formula(named("complete", 5)) == 176

    def test_complete_essential(self):
        assert complete_essential(3, 3, lambda i, r: b3_complete(r)) == 9
        assert complete_essential(3, 4, lambda i, r: b3_complete(r)) == 14
        assert complete_essential(3, 5, lambda i, r: b3_complete(r)) == 6


class TestStars:
    def test_betti(self):
        assert [star_betti(3, k) for k in range(8)] == [1, 4, 12, 18, 18, 12, 4, 1]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_total(self, n):
        assert sum(star_betti(n, k) for k in range(2 * n + 2)) == star_total(n)

    def test_total_values(self):
        assert star_total(3) == 70

    def test_essential(self):
        assert [star_essential(1, k) for k in range(4)] == [0, 0, 2, 1]
        assert [star_essential(2, k) for k in range(6)] == [0, 0, 1, 4, 3, 1]
        assert star_essential(3, 3) == 2
        assert star_essential(3, 8) == 0

    def test_bigraded(self):
        assert star_bigraded(2, 1) == 1
        assert [star_bigraded(4, r) for r in range(5)] == [0, 3, 2, 0, 0]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_bigraded_sums_to_middle_degree(self, n):
        assert sum(star_bigraded(n, r) for r in range(n + 1)) == star_essential(n, n)


class TestSolvableExtensions:
    def test_bn_formula(self):
        assert [ggi_bn_formula([1, 1], 4, n) for n in range(7)] == [1, 5, 10, 10, 5, 1, 0]

    def test_triangle_chain(self):
        assert ggi_b1_formula(TRIANGLE_CHAIN, CHAIN_CLIQUES) == 5
        assert ggi_b2_formula(TRIANGLE_CHAIN, CHAIN_CLIQUES) == 10
        assert ggi_b3_formula(TRIANGLE_CHAIN, CHAIN_CLIQUES) == 10

    def test_paw(self):
        assert ggi_b1_formula(PAW, PAW_CLIQUES) == 4
        assert ggi_b2_formula(PAW, PAW_CLIQUES) == 6

    def test_rejects_non_clique(self):
        with pytest.raises(CliqueError):
            ggi_b1_formula(PAW, CliqueFamily.of({2, 4}))


class TestBeta3Table:
    def test_values(self):
        table = load_beta3_table()
        assert len(table) == 23
        assert table.values() == BETA3_VALUES

    def test_named_entries(self):
        weights = load_beta3_table().weights()
        assert weights[canonical_code(named("complete", 2))] == 1
        assert weights[canonical_code(named("star", 3))] == 2
        assert weights[canonical_code(named("complete", 4))] == 14
        assert weights[canonical_code(named("complete", 5))] == 6

    def test_display_names(self):
        names = load_beta3_table().names()
        assert names[canonical_code(named("cycle", 5))] == "G16 (C5)"

    def test_tabulated_differences(self):
        table = load_beta3_table()
        paw = canonical_code(PAW)
        diamond = canonical_code(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]))
        assert table.tabulated_differences() == {
            paw: (3, 6),
            diamond: (8, 14),
            canonical_code(named("complete", 4)): (14, 26),
        }

    def test_quintic_matches_census_form(self):
        for n in range(1, 12):
            assert 60 * b3_complete(n) == 3 * n**5 + 5 * n**4 - 15 * n**3 - 5 * n**2 + 12 * n
