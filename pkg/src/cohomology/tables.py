"""Betti and essential Betti tables, and the Kunneth product on them."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union


@dataclass(frozen=True)
class BettiTable:
    """``dims[d]`` is ``b_d``; ``None`` marks a degree that was not computed."""

    dims: Tuple[Optional[int], ...]

    @classmethod
    def of(cls, values: Iterable[Optional[int]]) -> "BettiTable":
        return cls(tuple(values))

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return (self[d] for d in range(len(self.dims)))

    def __getitem__(self, degree: int) -> int:
        if degree < 0 or degree >= len(self.dims):
            return 0
        value = self.dims[degree]
        if value is None:
            raise KeyError(f"Degree {degree} was not computed")
        return value

    @property
    def complete(self) -> bool:
        return all(v is not None for v in self.dims)

    @property
    def computed(self) -> List[int]:
        return [d for d, v in enumerate(self.dims) if v is not None]

    def to_list(self) -> List[Optional[int]]:
        return list(self.dims)

    def total(self) -> int:
        return sum(self[d] for d in range(len(self.dims)))

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * self[d] for d in range(len(self.dims)))

    def is_palindromic(self) -> bool:
        values = [self[d] for d in range(len(self.dims))]
        return values == values[::-1]


@dataclass
class EssentialTable:
    """Essential Betti numbers ``beta_n`` and their refinement ``beta_{n,r}``.

    ``bigraded`` only holds nonzero entries; ``r = N - n`` with ``N`` the weight.
    """

    dims: Tuple[Optional[int], ...]
    bigraded: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, degree: int) -> int:
        if degree < 0 or degree >= len(self.dims):
            return 0
        value = self.dims[degree]
        if value is None:
            raise KeyError(f"Degree {degree} was not computed")
        return value

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return (self[d] for d in range(len(self.dims)))

    def beta(self, n: int, r: int) -> int:
        return self.bigraded.get((n, r), 0)

    def row(self, n: int) -> Dict[int, int]:
        """``{r: beta_{n,r}}`` for degree ``n``."""
        return {r: v for (m, r), v in sorted(self.bigraded.items()) if m == n}

    def consistent(self) -> bool:
        """Every computed ``beta_n`` equals the sum of its bigraded row."""
        return all(
            v is None or v == sum(self.row(n).values()) for n, v in enumerate(self.dims)
        )

    def to_dict(self) -> Dict[str, object]:
        return {
            "dims": list(self.dims),
            "bigraded": [[n, r, v] for (n, r), v in sorted(self.bigraded.items())],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "EssentialTable":
        return cls(
            dims=tuple(data["dims"]),  # type: ignore[arg-type]
            bigraded={(n, r): v for n, r, v in data.get("bigraded", [])},  # type: ignore[union-attr]
        )


# Unit of the Kunneth product: the 0-vertex graph.
POINT = EssentialTable(dims=(1,), bigraded={(0, 0): 1})


TableLike = Union[BettiTable, Sequence[int]]


def _values(t: TableLike) -> List[int]:
    if isinstance(t, BettiTable):
        return [t[d] for d in range(len(t))]
    return list(t)


def convolve(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def kunneth(b1: TableLike, b2: TableLike) -> BettiTable:
    """Betti table of a direct sum: ``out[i] = sum_{j+k=i} b1[j] * b2[k]``."""
    return BettiTable.of(convolve(_values(b1), _values(b2)))


def kunneth_essential(e1: EssentialTable, e2: EssentialTable) -> EssentialTable:
    """Essential table of a disjoint union of graphs, bigrading included."""
    dims = convolve([e1[d] for d in range(len(e1))], [e2[d] for d in range(len(e2))])
    bigraded: Dict[Tuple[int, int], int] = {}
    for (n1, r1), v1 in e1.bigraded.items():
        for (n2, r2), v2 in e2.bigraded.items():
            key = (n1 + n2, r1 + r2)
            bigraded[key] = bigraded.get(key, 0) + v1 * v2
    return EssentialTable(dims=tuple(dims), bigraded={k: v for k, v in bigraded.items() if v})
