"""Sparse integer matrices in coordinate form.

Dump format (1-indexed, sorted by row then column)::

    rows cols nnz
    r c v
    ...
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Sequence, Tuple

Entry = Tuple[int, int, int]


@dataclass(frozen=True)
class SparseIntMatrix:
    """Integer matrix with nonzero entries ``(row, col, value)``, 0-indexed."""

    rows: int
    cols: int
    entries: Tuple[Entry, ...] = field(default_factory=tuple)

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Iterable[Entry]) -> "SparseIntMatrix":
        """Sum duplicate coordinates, drop zeros and sort."""
        acc: Dict[Tuple[int, int], int] = defaultdict(int)
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"Entry ({r}, {c}) outside {rows}x{cols}")
            acc[(r, c)] += v
        cleaned = tuple(sorted((r, c, v) for (r, c), v in acc.items() if v))
        return cls(rows, cols, cleaned)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "SparseIntMatrix":
        return cls(rows, cols, ())

    @classmethod
    def identity(cls, k: int) -> "SparseIntMatrix":
        return cls(k, k, tuple((i, i, 1) for i in range(k)))

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls.from_entries(
            rows, cols, ((r, c, v) for r, row in enumerate(data) for c, v in enumerate(row))
        )

    @property
    def nnz(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not self.entries

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix.from_entries(self.cols, self.rows, ((c, r, v) for r, c, v in self.entries))

    def permute(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SparseIntMatrix":
        """Move row ``r`` to ``row_perm[r]`` and column ``c`` to ``col_perm[c]``."""
        return SparseIntMatrix.from_entries(
            self.rows, self.cols, ((row_perm[r], col_perm[c], v) for r, c, v in self.entries)
        )

    def to_rows(self) -> Dict[int, Dict[int, int]]:
        out: Dict[int, Dict[int, int]] = defaultdict(dict)
        for r, c, v in self.entries:
            out[r][c] = v
        return dict(out)

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for r, c, v in self.entries:
            dense[r][c] = v
        return dense

    def matmul(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        """Product ``self @ other``."""
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.shape} @ {other.shape}")
        right = other.to_rows()
        acc: Dict[Tuple[int, int], int] = defaultdict(int)
        for r, k, v in self.entries:
            for c, w in right.get(k, {}).items():
                acc[(r, c)] += v * w
        return SparseIntMatrix.from_entries(
            self.rows, other.cols, ((r, c, v) for (r, c), v in acc.items())
        )

    def block_diagonal(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        shifted = ((r + self.rows, c + self.cols, v) for r, c, v in other.entries)
        return SparseIntMatrix(
            self.rows + other.rows,
            self.cols + other.cols,
            self.entries + tuple(shifted),
        )


def dump_matrix(m: SparseIntMatrix) -> str:
    lines = [f"{m.rows} {m.cols} {m.nnz}"]
    lines.extend(f"{r + 1} {c + 1} {v}" for r, c, v in m.entries)
    return "\n".join(lines) + "\n"


def load_matrix(text: str) -> SparseIntMatrix:
    """Inverse of ``dump_matrix``."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3:
        raise ValueError("Matrix dump must start with 'rows cols nnz'")
    rows, cols, nnz = (int(t) for t in lines[0])
    if len(lines) - 1 != nnz:
        raise ValueError(f"Header declares {nnz} entries, found {len(lines) - 1}")
    entries = [(int(r) - 1, int(c) - 1, int(v)) for r, c, v in lines[1:]]
    return SparseIntMatrix.from_entries(rows, cols, entries)
