"""Univariate and sparse multivariate polynomials over a prime field.

Coefficients are plain int residues; the owning :class:`PrimeField` is
carried on the polynomial. Exponent vectors are tuples of ints.
"""

from __future__ import annotations

import itertools
from math import prod
from typing import Callable, Iterable, Mapping, Sequence

from .field import FieldElement, FieldMismatchError, PrimeField
from .grid import Grid

Exponent = tuple[int, ...]


def _residue(field: PrimeField, v) -> int:
    if isinstance(v, FieldElement):
        if v.field.p != field.p:
            raise FieldMismatchError(f"element of F_{v.field.p} used with F_{field.p}")
        return v.value
    return v % field.p


class UnivariatePoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs: Iterable[int] = ()):
        c = [_residue(field, a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def from_roots(cls, field: PrimeField, roots: Iterable[int]) -> UnivariatePoly:
        c = [1]
        for r in roots:
            # multiply by (X - r)
            c = [(lo - r * hi) % field.p for lo, hi in zip([0] + c, c + [0])]
        return cls(field, c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __call__(self, x) -> int:
        x = _residue(self.field, x)
        p = self.field.p
        y = 0
        for c in reversed(self.coeffs):
            y = (y * x + c) % p
        return y

    def _check(self, other: UnivariatePoly):
        if other.field.p != self.field.p:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other: UnivariatePoly) -> UnivariatePoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(self.field, (self.coeff(j) + other.coeff(j) for j in range(n)))

    def __neg__(self) -> UnivariatePoly:
        return UnivariatePoly(self.field, (-c for c in self.coeffs))

    def __sub__(self, other: UnivariatePoly) -> UnivariatePoly:
        return self + (-other)

    def __mul__(self, other: UnivariatePoly) -> UnivariatePoly:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly(self.field)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UnivariatePoly(self.field, out)

    def __divmod__(self, other: UnivariatePoly) -> tuple[UnivariatePoly, UnivariatePoly]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p = self.field.p
        rem = list(self.coeffs)
        dd = other.degree
        lead_inv = self.field.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] * lead_inv % p
            if q:
                quot[k - dd] = q
                for j, b in enumerate(other.coeffs):
                    rem[k - dd + j] = (rem[k - dd + j] - q * b) % p
        return UnivariatePoly(self.field, quot), UnivariatePoly(self.field, rem[:dd])

    def __eq__(self, other):
        if not isinstance(other, UnivariatePoly):
            return NotImplemented
        return self.field.p == other.field.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __repr__(self):
        return f"UnivariatePoly(F_{self.field.p}, {list(self.coeffs)})"


def lagrange_basis(field: PrimeField, xs: Sequence[int]) -> list[list[int]]:
    """Coefficient lists (length n, lowest first) of the Lagrange basis polynomials on xs."""
    p = field.p
    xs = [x % p for x in xs]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    n = len(xs)
    full = UnivariatePoly.from_roots(field, xs)
    basis = []
    for t, xt in enumerate(xs):
        num, _ = divmod(full, UnivariatePoly(field, [-xt, 1]))
        denom = 1
        for s, xs_ in enumerate(xs):
            if s != t:
                denom = denom * (xt - xs_) % p
        scale = field.inv(denom)
        basis.append([num.coeff(j) * scale % p for j in range(n)])
    return basis


def interpolate_univariate(field: PrimeField, points: Sequence[tuple[int, int]]) -> UnivariatePoly:
    if not points:
        raise ValueError("need at least one point")
    xs = [x for x, _ in points]
    ys = [_residue(field, y) for _, y in points]
    basis = lagrange_basis(field, [_residue(field, x) for x in xs])
    n = len(xs)
    return UnivariatePoly(field, (sum(b[j] * y for b, y in zip(basis, ys)) for j in range(n)))


class MultivariatePoly:
    """Sparse polynomial: a mapping from exponent vectors to nonzero residues."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: PrimeField, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.field = field
        self.nvars = nvars
        clean: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent {e} does not have {nvars} entries")
            if any(a < 0 for a in e):
                raise ValueError(f"negative exponent in {e}")
            c = _residue(field, c)
            if c:
                clean[e] = (clean.get(e, 0) + c) % field.p
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    @classmethod
    def zero(cls, field: PrimeField, nvars: int) -> MultivariatePoly:
        return cls(field, nvars)

    @classmethod
    def monomial(cls, field: PrimeField, exponent: Exponent, coeff: int = 1) -> MultivariatePoly:
        return cls(field, len(exponent), {tuple(exponent): coeff})

    @classmethod
    def from_univariate(cls, g: UnivariatePoly) -> MultivariatePoly:
        return cls(g.field, 1, {(j,): c for j, c in enumerate(g.coeffs)})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> set[Exponent]:
        return set(self.terms)

    def coeff(self, e: Exponent) -> int:
        return self.terms.get(tuple(e), 0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def individual_degrees(self) -> tuple[int, ...]:
        return tuple(max((e[i] for e in self.terms), default=-1) for i in range(self.nvars))

    def evaluate(self, point: Sequence) -> int:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, polynomial has {self.nvars} variables")
        p = self.field.p
        xs = [_residue(self.field, a) for a in point]
        acc = 0
        for e, c in self.terms.items():
            t = c
            for x, a in zip(xs, e):
                if a:
                    t = t * pow(x, a, p) % p
            acc += t
        return acc % p

    __call__ = evaluate

    def _check(self, other: MultivariatePoly):
        if other.field.p != self.field.p:
            raise FieldMismatchError("polynomials over different fields")
        if other.nvars != self.nvars:
            raise ValueError(f"{self.nvars}-variate and {other.nvars}-variate polynomials")

    def __add__(self, other: MultivariatePoly) -> MultivariatePoly:
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultivariatePoly(self.field, self.nvars, terms)

    def __neg__(self) -> MultivariatePoly:
        return MultivariatePoly(self.field, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultivariatePoly) -> MultivariatePoly:
        return self + (-other)

    def __mul__(self, other: MultivariatePoly) -> MultivariatePoly:
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultivariatePoly(self.field, self.nvars, out)

    def scale(self, c: int) -> MultivariatePoly:
        return MultivariatePoly(self.field, self.nvars, {e: v * c for e, v in self.terms.items()})

    def append_variable(self, exponent: int) -> MultivariatePoly:
        """Multiply by Y**exponent where Y is a new last variable."""
        return MultivariatePoly(
            self.field, self.nvars + 1, {e + (exponent,): c for e, c in self.terms.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, MultivariatePoly):
            return NotImplemented
        return (self.field.p, self.nvars, self.terms) == (other.field.p, other.nvars, other.terms)

    def __hash__(self):
        return hash((self.field.p, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            mono = "*".join(
                f"X{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a
            )
            c = self.terms[e]
            parts.append(mono if c == 1 and mono else f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)


def eval_multivariate(P: MultivariatePoly, point: Sequence) -> FieldElement:
    return P.field(P.evaluate(point))


# -- monomial orders ----------------------------------------------------------

def grlex_key(e: Exponent):
    return (sum(e), tuple(e))


def lex_key(e: Exponent):
    return tuple(e)


def grevlex_key(e: Exponent):
    return (sum(e), tuple(-a for a in reversed(e)))


MONOMIAL_ORDERS: dict[str, Callable[[Exponent], object]] = {
    "grlex": grlex_key,
    "lex": lex_key,
    "grevlex": grevlex_key,
}


def leading_monomial(P: MultivariatePoly, order: str = "grlex") -> Exponent:
    """Largest exponent of P under the given order (variables ranked X1 > X2 > ...)."""
    if P.is_zero():
        raise ValueError("the zero polynomial has no leading monomial")
    return max(P.terms, key=MONOMIAL_ORDERS[order])


# -- grid transforms ----------------------------------------------------------

def _apply_along_axis(flat: list[int], shape: Sequence[int], axis: int,
                      matrix: Sequence[Sequence[int]], p: int) -> list[int]:
    """Apply a linear map to every fibre of a flat row-major tensor along ``axis``."""
    k_in = shape[axis]
    k_out = len(matrix)
    stride = prod(shape[axis + 1:])
    outer = prod(shape[:axis])
    out = [0] * (outer * k_out * stride)
    for o in range(outer):
        base_in = o * k_in * stride
        base_out = o * k_out * stride
        for inner in range(stride):
            vec = flat[base_in + inner: base_in + k_in * stride: stride]
            for r, row in enumerate(matrix):
                out[base_out + r * stride + inner] = sum(a * b for a, b in zip(row, vec)) % p
    return out


def _vandermonde(xs: Sequence[int], ncols: int, p: int) -> list[list[int]]:
    return [[pow(x, j, p) for j in range(ncols)] for x in xs]


def _transpose(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    return [list(r) for r in zip(*mat)]


def grid_interpolate(grid: Grid, values: Sequence) -> MultivariatePoly:
    """The unique polynomial with deg_{X_i} < k_i agreeing with ``values`` on the grid."""
    field = grid.field
    if len(values) != grid.size:
        raise ValueError(f"word has {len(values)} entries, grid has {grid.size} points")
    flat = [_residue(field, v) for v in values]
    shape = list(grid.sizes)
    for axis, s in enumerate(grid.sets):
        # row j of the inverse Vandermonde = coefficient j of each Lagrange basis polynomial
        inv_v = _transpose(lagrange_basis(field, s))
        flat = _apply_along_axis(flat, shape, axis, inv_v, field.p)
    terms = {}
    for idx, e in enumerate(_box_exponents(grid.sizes)):
        if flat[idx]:
            terms[e] = flat[idx]
    return MultivariatePoly(field, grid.m, terms)


def _box_exponents(sizes: Sequence[int]):
    return itertools.product(*(range(k) for k in sizes))


def evaluate_on_grid(P: MultivariatePoly, grid: Grid) -> list[int]:
    """Evaluation table of P over the grid in odometer order."""
    if P.field.p != grid.field.p:
        raise FieldMismatchError("polynomial and grid over different fields")
    if P.nvars != grid.m:
        raise ValueError(f"{P.nvars}-variate polynomial on a {grid.m}-dimensional grid")
    if P.is_zero():
        return [0] * grid.size
    if any(d >= k for d, k in zip(P.individual_degrees(), grid.sizes)):
        P = reduce_individual_degrees(P, grid)
        if P.is_zero():
            return [0] * grid.size
    shape = [d + 1 for d in P.individual_degrees()]
    strides = [prod(shape[i + 1:]) for i in range(len(shape))]
    flat = [0] * prod(shape)
    for e, c in P.terms.items():
        flat[sum(a * s for a, s in zip(e, strides))] = c
    p = grid.field.p
    for axis, s in enumerate(grid.sets):
        flat = _apply_along_axis(flat, shape, axis, _vandermonde(s, shape[axis], p), p)
        shape[axis] = len(s)
    return flat


def reduce_individual_degrees(P: MultivariatePoly, grid: Grid) -> MultivariatePoly:
    """Rewrite P modulo prod_{a in S_i}(X_i - a) in every variable.

    The result has deg_{X_i} < k_i, agrees with P on the grid, and each of its
    monomials divides some monomial of P.
    """
    if P.field.p != grid.field.p:
        raise FieldMismatchError("polynomial and grid over different fields")
    if P.nvars != grid.m:
        raise ValueError(f"{P.nvars}-variate polynomial on a {grid.m}-dimensional grid")
    field = P.field
    vanishing = [UnivariatePoly.from_roots(field, s) for s in grid.sets]
    cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def x_power_mod(axis: int, a: int) -> tuple[int, ...]:
        key = (axis, a)
        if key not in cache:
            mono = UnivariatePoly(field, [0] * a + [1])
            cache[key] = divmod(mono, vanishing[axis])[1].coeffs
        return cache[key]

    out: dict[Exponent, int] = {}
    for e, c in P.terms.items():
        partial: dict[Exponent, int] = {(): c}
        for axis, a in enumerate(e):
            rem = (a,) if a < grid.sizes[axis] else None
            nxt: dict[Exponent, int] = {}
            if rem is not None:
                for pe, pc in partial.items():
                    nxt[pe + (a,)] = pc
            else:
                for j, rc in enumerate(x_power_mod(axis, a)):
                    if rc:
                        for pe, pc in partial.items():
                            nxt[pe + (j,)] = (nxt.get(pe + (j,), 0) + pc * rc) % field.p
            partial = nxt
        for pe, pc in partial.items():
            out[pe] = out.get(pe, 0) + pc
    return MultivariatePoly(field, P.nvars, out)
