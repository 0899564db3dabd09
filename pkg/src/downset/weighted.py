from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

ZERO = Fraction(0)
HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeightedWord:
    """Per-position (value, weight) pairs; weight 0 is a hard symbol, 1 a full erasure."""

    values: tuple[int, ...]
    weights: tuple[Fraction, ...]

    def __init__(self, values: Sequence[int], weights: Sequence | None = None):
        values = tuple(values)
        if weights is None:
            weights = (ZERO,) * len(values)
        weights = tuple(Fraction(u) for u in weights)
        if len(weights) != len(values):
            raise ValueError(f"{len(values)} values but {len(weights)} weights")
        for u in weights:
            if not 0 <= u <= 1:
                raise ValueError(f"weight {u} outside [0, 1]")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return len(self.values)

    def restrict(self, positions: Sequence[int]) -> WeightedWord:
        return WeightedWord([self.values[j] for j in positions], [self.weights[j] for j in positions])


def weighted_distance(w: WeightedWord, g: Sequence[int]) -> Fraction:
    """Agreements cost u/2, disagreements 1 - u/2; equals Hamming distance when u == 0."""
    if len(g) != len(w.values):
        raise ValueError(f"word lengths differ: {len(w.values)} vs {len(g)}")
    total = ZERO
    for f, u, y in zip(w.values, w.weights, g):
        total += u / 2 if f == y else 1 - u / 2
    return total
