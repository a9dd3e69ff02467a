"""Tests for the cohomology engine."""

from math import comb

import pytest

from src.cohomology.cache import TableCache
from src.cohomology.engine import CohomologyEngine
from src.cohomology.tables import POINT, kunneth
from src.errors import CliqueError, ConfigError, OrderLimitError
from src.formulas.closed_forms import b2_formula, b3_formula, star_betti, star_essential
from src.graphs.fixtures import PAW_CLIQUES, CHAIN_CLIQUES, PAW, SQUARE_TAIL, TRIANGLE_CHAIN
from src.graphs.graph import CliqueFamily, Graph, disjoint_union, named


class TestBetti:
    @pytest.mark.parametrize(
        "g, expected",
        [
            (Graph(0), [1]),
            (named("complete", 1), [1, 1]),
            (named("complete", 2), [1, 2, 2, 1]),
            (named("complete", 3), [1, 3, 8, 12, 8, 3, 1]),
            (named("empty", 3), [1, 3, 3, 1]),
        ],
    )
    def test_known_tables(self, engine, g, expected):
        assert list(engine.betti(g)) == expected

    def test_star(self, engine):
        table = engine.betti(named("star", 3))
        assert list(table) == [star_betti(3, k) for k in range(8)]
        assert list(table) == [1, 4, 12, 18, 18, 12, 4, 1]
        assert table.total() == 70

    def test_partial_degrees(self, engine, k3):
        table = engine.betti(k3, degrees=[2])
        assert table.to_list() == [None, None, 8, None, None, None, None]

    def test_degrees_out_of_range_are_ignored(self, engine, k2):
        assert engine.betti(k2, degrees=[1, 9]).to_list() == [None, 2, None, None]

    def test_strategies_agree(self, engine):
        blockwise = engine.betti(PAW, strategy="blockwise")
        monolithic = engine.betti(PAW, strategy="monolithic")
        assert list(blockwise) == list(monolithic)
        assert blockwise.is_palindromic()
        assert blockwise[2] == b2_formula(PAW)

    def test_blockwise_records_block_statistics(self, k3):
        engine = CohomologyEngine(cache=TableCache(enabled=False))
        engine.betti(k3)
        stats = engine.stats.to_dict()
        assert stats["blocks"] > 0
        assert stats["largest_block"] <= comb(6, 3)

    def test_modular_rank_method(self, k3):
        engine = CohomologyEngine(rank_method="modular", cache=TableCache(enabled=False))
        assert list(engine.betti(k3)) == [1, 3, 8, 12, 8, 3, 1]
        assert engine.method_label == "modular-probabilistic"

    def test_worker_pool(self):
        engine = CohomologyEngine(workers=2, cache=TableCache(enabled=False))
        assert list(engine.betti(named("path", 4))) == list(
            CohomologyEngine(cache=TableCache(enabled=False)).betti(named("path", 4))
        )

    def test_kunneth(self, engine, k2):
        union = disjoint_union(k2, named("path", 3))
        assert list(engine.betti(union)) == list(kunneth(engine.betti(k2), engine.betti(named("path", 3))))

    @pytest.mark.parametrize("kwargs", [{"strategy": "sparse"}, {"workers": 0}])
    def test_invalid_settings(self, kwargs):
        with pytest.raises(ConfigError):
            CohomologyEngine(**kwargs)

    def test_invalid_strategy_override(self, engine, k2):
        with pytest.raises(ConfigError):
            engine.betti(k2, strategy="sparse")


class TestSolvableExtensions:
    def test_one_dimensional_extension(self, engine):
        sigma = CliqueFamily.of({1})
        assert list(engine.betti(named("complete", 1), sigma)) == [1, 1, 0]
        assert list(engine.ggi_betti_reduced(named("complete", 1), sigma)) == [1, 1, 0]

    def test_direct_matches_reduction(self, engine):
        direct = engine.betti(PAW, PAW_CLIQUES)
        assert list(direct) == list(engine.ggi_betti_reduced(PAW, PAW_CLIQUES))
        assert list(direct) == [comb(4, n) for n in range(12)]

    def test_reduction_on_triangle_chain(self, engine):
        table = engine.ggi_betti_reduced(TRIANGLE_CHAIN, CHAIN_CLIQUES)
        assert len(table) == 26
        assert list(table) == [comb(5, n) for n in range(26)]

    def test_invalid_clique(self, engine):
        with pytest.raises(CliqueError):
            engine.betti(PAW, CliqueFamily.of({1, 4}))


class TestEssential:
    def test_point(self, engine):
        assert engine.essential_betti(Graph(0)) is POINT

    def test_k2(self, engine, k2):
        table = engine.essential_betti(k2)
        assert table.dims == (0, 0, 2, 1)
        assert table.bigraded == {(2, 1): 2, (3, 1): 1}

    def test_isolated_vertices(self, engine):
        assert engine.essential_betti(named("complete", 1)).dims == (0, 1)
        assert engine.essential_betti(named("empty", 3)).dims == (0, 0, 0, 1)

    def test_path_on_three_vertices(self, engine):
        table = engine.essential_betti(named("path", 3))
        assert list(table) == [0, 0, 1, 4, 3, 1]
        assert list(table) == [star_essential(2, k) for k in range(6)]
        assert table.beta(2, 1) == 1

    def test_complete_graphs(self, engine, k3):
        assert engine.essential_betti(k3)[2] == 2
        assert engine.essential_betti(named("complete", 2))[2] == 2

    def test_star_s3(self, engine):
        table = engine.essential_betti(named("star", 3))
        assert table[3] == 2
        assert table.consistent()

    def test_partial_degrees(self, engine, k3):
        partial = engine.essential_betti(k3, [3])
        assert partial.dims == (None, None, None, 9, None, None, None)
        assert engine.essential_betti(k3)[3] == 9

    def test_vanishing_below_the_bound(self, engine):
        assert engine.essential_betti(named("path", 4), [1])[1] == 0

    @pytest.mark.parametrize(
        "edges, beta3",
        [
            ([(1, 2), (2, 3), (1, 3), (3, 4)], 3),
            ([(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)], 8),
            ([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], 14),
        ],
    )
    def test_degree_three_on_graphs_with_triangles(self, engine, edges, beta3):
        g = Graph.from_edges(4, edges)
        assert engine.essential_betti(g, [3])[3] == beta3
        assert engine.betti(g, degrees=[3])[3] == b3_formula(g)

    def test_persisted_between_engines(self, tmp_path, k3):
        first = CohomologyEngine(cache=TableCache(tmp_path))
        table = first.essential_betti(k3)
        assert first.cache.stats.writes == 1

        second = CohomologyEngine(cache=TableCache(tmp_path))
        assert second.essential_betti(k3).dims == table.dims
        assert second.cache.stats.hits == 1

    def test_modular_tables_are_not_served_to_exact_engines(self, tmp_path, k3):
        modular = CohomologyEngine(rank_method="modular", cache=TableCache(tmp_path))
        modular.essential_betti(k3)
        assert modular.cache.stats.writes == 1

        exact = CohomologyEngine(cache=TableCache(tmp_path))
        assert exact.essential_betti(k3)[3] == 9
        assert (exact.cache.stats.hits, exact.cache.stats.misses, exact.cache.stats.writes) == (0, 1, 1)

        again = CohomologyEngine(rank_method="modular", cache=TableCache(tmp_path))
        again.essential_betti(k3)
        assert again.cache.stats.hits == 1


class TestDecomposition:
    def test_matches_betti_on_k3(self, engine, k3):
        table = engine.betti(k3)
        for d in range(len(table)):
            assert engine.betti_via_decomposition(k3, d) == table[d]

    def test_square_tail_degree_two(self, engine):
        result = engine.decomposition(SQUARE_TAIL, 2)
        assert result.value == 28
        assert result.bigraded_total == 28
        assert sum(count * beta for _, count, beta in result.terms) == 28

    def test_degree_zero(self, engine):
        assert engine.betti_via_decomposition(SQUARE_TAIL, 0) == 1

    def test_order_limit(self):
        engine = CohomologyEngine(max_order=3, cache=TableCache(enabled=False))
        with pytest.raises(OrderLimitError):
            engine.decomposition(SQUARE_TAIL, 3)

    @pytest.mark.slow
    def test_square_tail_degree_three(self, engine):
        assert engine.betti_via_decomposition(SQUARE_TAIL, 3) == 74
        assert engine.betti_via_decomposition(SQUARE_TAIL, 3, bigraded=True) == 74
        assert engine.betti(SQUARE_TAIL, degrees=[3], strategy="monolithic")[3] == 74
