"""Tests for sparse integer matrices and exact rank."""

import random

import pytest

from src.linalg.rank import (
    DEFAULT_PRIME,
    RankMethod,
    compute_rank,
    peel,
    rank_exact,
    rank_modular,
)
from src.linalg.sparse import SparseIntMatrix, dump_matrix, load_matrix


class TestSparseIntMatrix:
    def test_duplicates_summed_and_zeros_dropped(self):
        m = SparseIntMatrix.from_entries(2, 2, [(0, 0, 1), (0, 0, -1), (1, 1, 2), (1, 1, 3)])
        assert m.entries == ((1, 1, 5),)
        assert m.nnz == 1

    def test_out_of_range_entry(self):
        with pytest.raises(ValueError):
            SparseIntMatrix.from_entries(2, 2, [(2, 0, 1)])

    def test_dense_roundtrip(self):
        dense = [[0, 2, 0], [1, 0, -3]]
        assert SparseIntMatrix.from_dense(dense).to_dense() == dense

    def test_transpose(self):
        m = SparseIntMatrix.from_dense([[1, 2, 3]])
        assert m.transpose().to_dense() == [[1], [2], [3]]

    def test_matmul(self):
        a = SparseIntMatrix.from_dense([[1, 2], [0, 1]])
        b = SparseIntMatrix.from_dense([[0, 1], [1, 0]])
        assert a.matmul(b).to_dense() == [[2, 1], [1, 0]]
        assert a.matmul(SparseIntMatrix.identity(2)) == a
        with pytest.raises(ValueError):
            a.matmul(SparseIntMatrix.zeros(3, 1))

    def test_block_diagonal(self):
        m = SparseIntMatrix.identity(1).block_diagonal(SparseIntMatrix.from_dense([[2, 3]]))
        assert m.to_dense() == [[1, 0, 0], [0, 2, 3]]

    def test_permute(self):
        m = SparseIntMatrix.from_dense([[1, 0], [0, 2]])
        assert m.permute([1, 0], [0, 1]).to_dense() == [[0, 2], [1, 0]]

    def test_dump_format(self):
        m = SparseIntMatrix.from_dense([[0, 5], [-1, 0]])
        assert dump_matrix(m) == "2 2 2\n1 2 5\n2 1 -1\n"
        assert load_matrix(dump_matrix(m)) == m

    def test_load_rejects_wrong_count(self):
        with pytest.raises(ValueError):
            load_matrix("2 2 3\n1 1 1\n")


class TestPeel:
    def test_triangular_matrix_peels_completely(self):
        rank, core = peel({0: {0: 1}, 1: {0: 4, 1: 1}, 2: {0: 1, 1: 1, 2: 7}})
        assert rank == 3
        assert core == {}

    def test_dense_core_survives(self):
        rows = {0: {0: 1, 1: 1}, 1: {0: 1, 1: 1}}
        rank, core = peel(rows)
        assert rank == 0
        assert core == rows

    def test_zero_rows_dropped(self):
        rank, core = peel({0: {}, 1: {3: 2}})
        assert (rank, core) == (1, {})


class TestRank:
    @pytest.mark.parametrize(
        "dense, expected",
        [
            ([[1, 2], [2, 4]], 1),
            ([[1, 1], [1, 1]], 1),
            ([[2, 4], [1, 3]], 2),
            ([[1, 1, 0], [0, 1, 1], [1, 0, -1]], 2),
            ([[0, 0], [0, 0]], 0),
            ([[10**30, 1], [1, 0]], 2),
            ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], 2),
        ],
    )
    def test_exact(self, dense, expected):
        result = rank_exact(SparseIntMatrix.from_dense(dense))
        assert result.rank == expected
        assert result.method == RankMethod.EXACT

    def test_identity(self):
        result = rank_exact(SparseIntMatrix.identity(50))
        assert result.rank == 50
        assert result.peeled == 50
        assert result.core_rows == 0

    def test_empty_matrix(self):
        assert rank_exact(SparseIntMatrix.zeros(0, 4)).rank == 0

    def test_modular_agrees_on_small_entries(self):
        m = SparseIntMatrix.from_dense([[1, 2, 3], [4, 5, 6], [7, 8, 9], [1, 0, 1]])
        result = rank_modular(m)
        assert result.rank == rank_exact(m).rank == 3
        assert result.modulus == DEFAULT_PRIME
        assert result.method == RankMethod.MODULAR

    def test_modular_can_only_drop_rank(self):
        m = SparseIntMatrix.from_dense([[DEFAULT_PRIME, 0], [0, 1]])
        assert rank_modular(m).rank == 1
        assert rank_exact(m).rank == 2

    @pytest.mark.parametrize("p", [7, 2**31])
    def test_modular_rejects_bad_modulus(self, p):
        with pytest.raises(ValueError):
            rank_modular(SparseIntMatrix.identity(2), p)

    def test_dispatch(self):
        m = SparseIntMatrix.from_dense([[1, 1], [1, 1]])
        assert compute_rank(m).method == RankMethod.EXACT
        assert compute_rank(m, "modular").method == RankMethod.MODULAR


def _random_matrix(rng, rows, cols, inner):
    """A product of two random integer matrices, so rank is usually ``min(rows, cols, inner)``."""
    left = SparseIntMatrix.from_dense([[rng.randint(-3, 3) for _ in range(inner)] for _ in range(rows)])
    right = SparseIntMatrix.from_dense([[rng.randint(-3, 3) for _ in range(cols)] for _ in range(inner)])
    return left.matmul(right)


@pytest.mark.parametrize("seed", range(8))
class TestRankInvariance:
    def test_transpose(self, seed):
        m = _random_matrix(random.Random(seed), 7, 5, 3 + seed % 4)
        assert rank_exact(m).rank == rank_exact(m.transpose()).rank

    def test_row_and_column_permutations(self, seed):
        rng = random.Random(seed)
        m = _random_matrix(rng, 6, 8, 2 + seed % 5)
        rows, cols = list(range(6)), list(range(8))
        rng.shuffle(rows)
        rng.shuffle(cols)
        assert rank_exact(m.permute(rows, cols)).rank == rank_exact(m).rank

    def test_block_diagonal_adds(self, seed):
        rng = random.Random(seed)
        a = _random_matrix(rng, 4, 5, 1 + seed % 4)
        b = _random_matrix(rng, 6, 3, 1 + seed % 3)
        assert rank_exact(a.block_diagonal(b)).rank == rank_exact(a).rank + rank_exact(b).rank
        assert rank_modular(a.block_diagonal(b)).rank == rank_modular(a).rank + rank_modular(b).rank
