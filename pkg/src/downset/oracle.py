"""Brute-force oracles and channel simulation for small codes.

The oracles enumerate every codeword from the monomial basis evaluated
pointwise; they share nothing with the tensor interpolation or decoding
paths they are used to check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence

import numpy as np

from .codes import CodeSpec, Downset, min_distance
from .poly import MultivariatePoly
from .weighted import WeightedWord

ENUMERATION_LIMIT = 1 << 24
_CHUNK = 1 << 15


class EnumerationTooLarge(ValueError):
    pass


def codeword_count(spec: CodeSpec) -> int:
    return spec.field.p ** len(spec.downset)


def monomial_basis(spec: CodeSpec) -> tuple[list[tuple[int, ...]], np.ndarray]:
    """Sorted downset and the |D| x |S| matrix of monomial evaluations."""
    p = spec.field.p
    monos = sorted(spec.downset.members)
    points = list(spec.grid.points())
    rows = []
    for e in monos:
        row = []
        for pt in points:
            v = 1
            for x, a in zip(pt, e):
                v = v * pow(x, a, p) % p
            row.append(v)
        rows.append(row)
    return monos, np.array(rows, dtype=np.int64)


def enumerate_codewords(spec: CodeSpec, limit: int = ENUMERATION_LIMIT
                        ) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Yield (coefficient digits, codewords) in chunks covering all of C(S, D)."""
    total = codeword_count(spec)
    if total > limit:
        raise EnumerationTooLarge(f"{total} codewords exceeds the enumeration limit {limit}")
    p = spec.field.p
    monos, basis = monomial_basis(spec)
    place = p ** np.arange(len(monos), dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        digits = (idx[:, None] // place[None, :]) % p
        yield digits, (digits @ basis) % p


@dataclass(frozen=True)
class NearestResult:
    codeword: MultivariatePoly
    distance: Fraction
    unique: bool
    within_radius: int


def _integer_costs(w: WeightedWord) -> tuple[int, np.ndarray, np.ndarray]:
    """Scale L and per-position costs so that 2*L*distance is an integer sum."""
    scale = lcm(*(u.denominator for u in w.weights)) if len(w) else 1
    agree = [int(u * scale) for u in w.weights]
    disagree = [2 * scale - a for a in agree]
    dtype = np.int64 if 2 * scale * max(len(w), 1) < (1 << 62) else object
    return scale, np.array(agree, dtype=dtype), np.array(disagree, dtype=dtype)


def brute_force_nearest(spec: CodeSpec, w: WeightedWord,
                        limit: int = ENUMERATION_LIMIT) -> NearestResult:
    """Exhaustive weighted-nearest codeword search.

    ``unique`` is False only when two or more codewords lie strictly inside
    mu/2; ``within_radius`` counts them.
    """
    if len(w) != spec.length:
        raise ValueError(f"word has {len(w)} entries, grid has {spec.length} points")
    monos = sorted(spec.downset.members)
    scale, agree, disagree = _integer_costs(w)
    received = np.array(w.values, dtype=np.int64) % spec.field.p
    threshold = min_distance(spec) * scale  # dist < mu/2  <=>  2*L*dist < mu*L
    best, best_digits, inside = None, None, 0
    for digits, words in enumerate_codewords(spec, limit):
        d2 = np.where(words == received[None, :], agree[None, :], disagree[None, :]).sum(axis=1)
        inside += int((d2 < threshold).sum())
        j = int(np.argmin(d2))
        if best is None or d2[j] < best:
            best, best_digits = d2[j], digits[j]
    poly = MultivariatePoly(spec.field, spec.m,
                            {e: int(c) for e, c in zip(monos, best_digits)})
    return NearestResult(poly, Fraction(int(best), 2 * scale), inside <= 1, inside)


def brute_force_min_distance(spec: CodeSpec, limit: int = ENUMERATION_LIMIT) -> int:
    best = None
    for digits, words in enumerate_codewords(spec, limit):
        nonzero = digits.any(axis=1)
        if not nonzero.any():
            continue
        weights = np.count_nonzero(words[nonzero], axis=1)
        w = int(weights.min())
        best = w if best is None else min(best, w)
    if best is None:
        raise ValueError("code has no nonzero codeword")
    return best


def corrupt(word: Sequence[int], e: int, rng: random.Random, p: int) -> list[int]:
    """Change exactly e positions, each to a uniformly random different value."""
    if not 0 <= e <= len(word):
        raise ValueError(f"cannot corrupt {e} of {len(word)} positions")
    out = list(word)
    for j in rng.sample(range(len(word)), e):
        out[j] = (out[j] + 1 + rng.randrange(p - 1)) % p
    return out


def random_downset(sizes: Sequence[int], target: int, rng: random.Random) -> Downset:
    """Random downset inside the box with target <= |D| <= 2*target.

    Box points are sampled and their closures merged while the size bound
    allows; when a closure would overshoot, a single outer corner is added
    instead. If the whole box is smaller than ``target`` the box is returned.
    """
    if target < 1:
        raise ValueError("target size must be at least 1")
    m = len(sizes)
    members: set[tuple[int, ...]] = {(0,) * m}
    box = 1
    for k in sizes:
        box *= k
    goal = min(target, box)
    while len(members) < goal:
        pt = tuple(rng.randrange(k) for k in sizes)
        closure = _closure_of(pt) - members
        if closure and len(members) + len(closure) <= 2 * target:
            members |= closure
            continue
        corners = _outer_corners(members, sizes)
        members.add(corners[rng.randrange(len(corners))])
    return Downset(m, members)


def _closure_of(pt: tuple[int, ...]) -> set[tuple[int, ...]]:
    return set(itertools.product(*(range(a + 1) for a in pt)))


def _outer_corners(members: set[tuple[int, ...]], sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Box points outside the set whose every immediate factor is inside (sorted)."""
    cands = set()
    for a in members:
        for i, k in enumerate(sizes):
            if a[i] + 1 < k:
                b = a[:i] + (a[i] + 1,) + a[i + 1:]
                if b not in members and all(
                    b[:t] + (b[t] - 1,) + b[t + 1:] in members for t in range(len(b)) if b[t]
                ):
                    cands.add(b)
    return sorted(cands)
