"""Downsets, downset codes C(S, D), and their distance structure."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Iterable, Mapping, Sequence

from .field import PrimeField
from .grid import Grid
from .poly import Exponent, MultivariatePoly, evaluate_on_grid, grid_interpolate


def is_downset(nvars: int, members: Iterable[Sequence[int]]) -> bool:
    """True iff decrementing any positive coordinate of a member lands in the set."""
    members = {tuple(a) for a in members}
    for a in members:
        if len(a) != nvars or any(x < 0 for x in a):
            return False
        for i, x in enumerate(a):
            if x and a[:i] + (x - 1,) + a[i + 1:] not in members:
                return False
    return True


def _lower_closure(generators: Iterable[Sequence[int]]) -> set[Exponent]:
    out: set[Exponent] = set()
    for g in generators:
        out.update(itertools.product(*(range(a + 1) for a in g)))
    return out


def _maximal(members: set[Exponent]) -> tuple[Exponent, ...]:
    maxes = []
    for a in members:
        # a is maximal iff no single-coordinate increment stays in the set
        if not any(a[:i] + (x + 1,) + a[i + 1:] in members for i, x in enumerate(a)):
            maxes.append(a)
    return tuple(sorted(maxes))


class Downset:
    """A nonempty finite set of exponent vectors closed under taking factors."""

    __slots__ = ("nvars", "members", "_maximal")

    def __init__(self, nvars: int, members: Iterable[Sequence[int]]):
        members = frozenset(tuple(a) for a in members)
        if nvars < 1:
            raise ValueError("a downset needs at least one variable")
        if not members:
            raise ValueError("empty downset (the zero code) is not supported")
        if not is_downset(nvars, members):
            raise ValueError("not a downset: member set is not closed under taking factors")
        self.nvars = nvars
        self.members = members
        self._maximal = _maximal(set(members))

    @classmethod
    def from_generators(cls, nvars: int, generators: Iterable[Sequence[int]]) -> Downset:
        generators = [tuple(g) for g in generators]
        if not generators:
            raise ValueError("need at least one generator")
        for g in generators:
            if len(g) != nvars:
                raise ValueError(f"generator {g} does not have {nvars} entries")
            if any(a < 0 for a in g):
                raise ValueError(f"negative exponent in generator {g}")
        return cls(nvars, _lower_closure(generators))

    @classmethod
    def total_degree(cls, nvars: int, d: int, box: Sequence[int] | None = None) -> Downset:
        """Monomials of total degree <= d, optionally clipped to exponents below ``box``."""
        if d < 0:
            raise ValueError("degree bound must be nonnegative")
        limits = box if box is not None else [d + 1] * nvars
        return cls(nvars, (a for a in itertools.product(*(range(min(k, d + 1)) for k in limits))
                           if sum(a) <= d))

    @classmethod
    def individual_degrees(cls, bounds: Sequence[int]) -> Downset:
        return cls.from_generators(len(bounds), [tuple(bounds)])

    @classmethod
    def box(cls, sizes: Sequence[int]) -> Downset:
        """The full box M = {0..k_1-1} x ... x {0..k_m-1}."""
        return cls.individual_degrees([k - 1 for k in sizes])

    @property
    def maximal(self) -> tuple[Exponent, ...]:
        return self._maximal

    def __contains__(self, a) -> bool:
        return tuple(a) in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other):
        if not isinstance(other, Downset):
            return NotImplemented
        return self.nvars == other.nvars and self.members == other.members

    def __hash__(self):
        return hash((self.nvars, self.members))

    def __repr__(self):
        return f"Downset(nvars={self.nvars}, generators={list(self._maximal)})"

    def max_degree(self, axis: int = -1) -> int:
        return max(a[axis] for a in self.members)

    def slices(self) -> tuple[int, list[Downset]]:
        """Split on the last variable: (d, [D_0, ..., D_d]) with D_i = {b : (b, i) in D}."""
        if self.nvars < 2:
            raise ValueError("slicing needs at least two variables")
        d = self.max_degree(-1)
        parts: list[set[Exponent]] = [set() for _ in range(d + 1)]
        for a in self.members:
            parts[a[-1]].add(a[:-1])
        return d, [Downset(self.nvars - 1, s) for s in parts]


def downset_from_generators(nvars: int, generators: Iterable[Sequence[int]]) -> Downset:
    return Downset.from_generators(nvars, generators)


def deg_m_and_slices(downset: Downset) -> tuple[int, list[Downset]]:
    return downset.slices()


def nabla_size(alpha: Sequence[int], sizes: Sequence[int]) -> int:
    """|{b in M : alpha <= b}| = prod (k_i - alpha_i)."""
    if len(alpha) != len(sizes):
        raise ValueError("exponent and grid dimensions differ")
    for a, k in zip(alpha, sizes):
        if not 0 <= a < k:
            raise ValueError(f"exponent {tuple(alpha)} lies outside the box for sizes {tuple(sizes)}")
    return prod(k - a for a, k in zip(alpha, sizes))


@dataclass(frozen=True)
class CodeSpec:
    grid: Grid
    downset: Downset

    def __post_init__(self):
        if self.downset.nvars != self.grid.m:
            raise ValueError(
                f"downset has {self.downset.nvars} variables but the grid is {self.grid.m}-dimensional"
            )
        sizes = self.grid.sizes
        for a in self.downset.maximal:
            if any(x >= k for x, k in zip(a, sizes)):
                raise ValueError(f"monomial {a} has an individual degree >= |S_i| for grid sizes {sizes}")

    @property
    def field(self) -> PrimeField:
        return self.grid.field

    @property
    def m(self) -> int:
        return self.grid.m

    @property
    def length(self) -> int:
        return self.grid.size

    @property
    def dimension(self) -> int:
        return len(self.downset)

    def min_distance(self) -> int:
        return min_distance(self)

    def prefix(self, downset: Downset) -> CodeSpec:
        return CodeSpec(self.grid.prefix(), downset)


def min_distance_witness(spec: CodeSpec) -> tuple[int, Exponent]:
    """(mu, alpha): the minimum distance and the first maximal alpha attaining it."""
    sizes = spec.grid.sizes
    return min(((nabla_size(a, sizes), a) for a in spec.downset.maximal))


def min_distance(spec: CodeSpec) -> int:
    return min_distance_witness(spec)[0]


def encode(spec: CodeSpec, coefficients: Mapping[Sequence[int], int] | MultivariatePoly) -> list[int]:
    if isinstance(coefficients, MultivariatePoly):
        P = coefficients
    else:
        P = MultivariatePoly(spec.field, spec.m, {tuple(e): c for e, c in coefficients.items()})
    for e in P.terms:
        if e not in spec.downset:
            raise ValueError(f"monomial {e} is not in the downset")
    return evaluate_on_grid(P, spec.grid)


def min_weight_witness(spec: CodeSpec, alpha: Sequence[int]) -> MultivariatePoly:
    """prod_i prod_{j < alpha_i} (X_i - a^i_j): supported on exactly |nabla(alpha)| points."""
    alpha = tuple(alpha)
    if alpha not in spec.downset:
        raise ValueError(f"{alpha} is not in the downset")
    field = spec.field
    m = spec.m
    P = MultivariatePoly.monomial(field, (0,) * m)
    for i, (s, a) in enumerate(zip(spec.grid.sets, alpha)):
        for root in s[:a]:
            e = tuple(1 if t == i else 0 for t in range(m))
            factor = MultivariatePoly(field, m, {e: 1, (0,) * m: -root})
            P = P * factor
    return P


def is_codeword(spec: CodeSpec, word: Sequence[int]) -> bool:
    P = grid_interpolate(spec.grid, word)
    return all(e in spec.downset for e in P.terms)
