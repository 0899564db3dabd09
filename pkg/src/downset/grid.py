from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterator, Sequence

from .field import PrimeField


@dataclass(frozen=True)
class Grid:
    """A product set S_1 x ... x S_m of distinct field elements.

    Points are enumerated in odometer order: the last coordinate moves
    fastest and each S_i is walked in its given list order. Every word
    table in the package is a flat list in this order.
    """

    field: PrimeField
    sets: tuple[tuple[int, ...], ...]

    def __init__(self, field: PrimeField, sets: Sequence[Sequence[int]]):
        normalized = tuple(tuple(a % field.p for a in s) for s in sets)
        if not normalized:
            raise ValueError("grid needs at least one coordinate set")
        for i, s in enumerate(normalized):
            if not s:
                raise ValueError(f"S_{i + 1} is empty")
            if len(set(s)) != len(s):
                raise ValueError(f"S_{i + 1} has repeated elements (after reduction mod {field.p})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "sets", normalized)

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.sets)

    @property
    def size(self) -> int:
        return prod(self.sizes)

    def points(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*self.sets)

    def index_of(self, point: Sequence[int]) -> int:
        if len(point) != self.m:
            raise ValueError(f"point has {len(point)} coordinates, grid has {self.m}")
        idx = 0
        for s, a in zip(self.sets, point):
            idx = idx * len(s) + s.index(a % self.field.p)
        return idx

    def prefix(self) -> Grid:
        """The grid S_1 x ... x S_{m-1} obtained by dropping the last coordinate."""
        if self.m < 2:
            raise ValueError("a one-dimensional grid has no prefix grid")
        return Grid(self.field, self.sets[:-1])

    def columns(self, word: Sequence) -> list[list]:
        """Split a flat word into its X_m-columns, one per prefix point, in prefix order."""
        k = len(self.sets[-1])
        return [list(word[j:j + k]) for j in range(0, len(word), k)]
