"""Weighted unique decoding of Reed-Solomon codes on an arbitrary evaluation set.

Errors-and-erasures decoding uses rational interpolation (solve
N(x_j) = y_j E(x_j) for N, E). The weighted decoder runs it as a GMD
schedule over prefix erasures of the least reliable positions and accepts
the first candidate whose exact weighted distance is below half the
minimum distance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .field import PrimeField
from .poly import UnivariatePoly
from .weighted import WeightedWord, weighted_distance


def nullspace_vector(rows: list[list[int]], ncols: int, p: int) -> list[int] | None:
    """Some nonzero solution of rows @ v == 0 (mod p), or None if only v = 0 solves it."""
    mat = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c] % p), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [a * inv % p for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    v = [0] * ncols
    v[free] = 1
    for i, c in enumerate(pivots):
        v[c] = -mat[i][free] % p
    return v


def errors_erasures_decode(field: PrimeField, points: Sequence[int], values: Sequence[int],
                           erasures: Iterable[int], d: int) -> UnivariatePoly | None:
    """Decode a degree-<=d RS word with erasures.

    Returns the polynomial that disagrees with the non-erased positions in at
    most floor((n' - d - 1) / 2) places, or None if there is none.
    """
    p = field.p
    pts = [x % p for x in points]
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    if len(values) != len(pts):
        raise ValueError(f"{len(pts)} points but {len(values)} values")
    erased = set(erasures)
    keep = [j for j in range(len(pts)) if j not in erased]
    n_keep = len(keep)
    if d < 0 or d >= n_keep:
        raise ValueError(f"degree bound {d} needs at least {d + 1} non-erased positions, have {n_keep}")
    xs = [pts[j] for j in keep]
    ys = [values[j] % p for j in keep]
    e = (n_keep - d - 1) // 2
    n_num = e + d + 1
    n_err = e + 1
    rows = []
    for x, y in zip(xs, ys):
        powers = [pow(x, j, p) for j in range(n_num)]
        rows.append(powers + [-y * powers[j] % p for j in range(n_err)])
    sol = nullspace_vector(rows, n_num + n_err, p)
    if sol is None:
        return None
    num = UnivariatePoly(field, sol[:n_num])
    loc = UnivariatePoly(field, sol[n_num:])
    if loc.is_zero():
        return None
    g, rem = divmod(num, loc)
    if not rem.is_zero() or g.degree > d:
        return None
    if sum(g(x) != y for x, y in zip(xs, ys)) > e:
        return None
    return g


def gmd_decode(field: PrimeField, points: Sequence[int], d: int,
                w: WeightedWord) -> tuple[UnivariatePoly, Fraction] | None:
    n = len(points)
    mu = n - d
    radius = Fraction(mu, 2)
    # heaviest (least reliable) first; sorted() is stable so ties keep index order
    order = sorted(range(n), key=lambda j: w.weights[j], reverse=True)
    tried: set[tuple[int, ...]] = set()
    hard = not any(w.weights)
    for s in range(min(n - d - 1, mu - 1) + 1):
        # with no soft information only s = 0 can reach Hamming distance < mu/2
        if s and hard:
            break
        g = errors_erasures_decode(field, points, w.values, order[:s], d)
        if g is None or g.coeffs in tried:
            continue
        tried.add(g.coeffs)
        dist = weighted_distance(w, [g(x) for x in points])
        if dist < radius:
            return g, dist
    return None


def weighted_rs_decode(field: PrimeField, points: Sequence[int], d: int,
                       w: WeightedWord) -> UnivariatePoly:
    """The degree-<=d polynomial within weighted distance (n - d)/2 of w, else zero."""
    if not 0 <= d < len(points):
        raise ValueError(f"degree bound {d} invalid for {len(points)} evaluation points")
    if len(w) != len(points):
        raise ValueError(f"{len(points)} points but a word of length {len(w)}")
    found = gmd_decode(field, points, d, w)
    return found[0] if found else UnivariatePoly(field)
