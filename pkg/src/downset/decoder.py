"""Recursive weighted unique decoder for downset codes.

The decoder peels the last variable Y = X_m. Writing a codeword as
sum_i Q_i(X) Y^(d-i), it recovers Q_0, Q_1, ... in turn: every X_m-column
is RS-decoded at degree d-i, the top coefficients and their confidence form
a weighted word on the prefix grid, and that word is decoded recursively in
the slice downset D_(d-i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .codes import CodeSpec, min_distance
from .poly import MultivariatePoly, evaluate_on_grid
from .rs import gmd_decode
from .weighted import WeightedWord, weighted_distance


@dataclass(frozen=True)
class LevelTrace:
    """Snapshot handed to a trace hook after a prefix word f_i is assembled."""

    depth: int
    spec: CodeSpec
    i: int
    d: int
    prefix_spec: CodeSpec
    prefix_word: WeightedWord
    recovered: MultivariatePoly


TraceHook = Callable[[LevelTrace], None]


def weighted_downset_decode(spec: CodeSpec, w: WeightedWord,
                            trace: TraceHook | None = None) -> MultivariatePoly:
    """Return the codeword of C(S, D) within weighted distance mu/2 of w, if one exists.

    When none exists the result is some well-formed polynomial supported on D.
    """
    if len(w) != spec.length:
        raise ValueError(f"word has {len(w)} entries, grid has {spec.length} points")
    return _decode(spec, w, trace, 0)


def _decode(spec: CodeSpec, w: WeightedWord, trace: TraceHook | None, depth: int) -> MultivariatePoly:
    field = spec.field
    p = field.p
    last = spec.grid.sets[-1]
    k_last = len(last)

    if spec.m == 1:
        d = spec.downset.max_degree(0)
        found = gmd_decode(field, last, d, w)
        if found is None:
            return MultivariatePoly.zero(field, 1)
        return MultivariatePoly.from_univariate(found[0])

    d, slices = spec.downset.slices()
    prefix_grid = spec.grid.prefix()
    n_cols = prefix_grid.size
    # y^j for every y in S_m, j <= d
    y_pow = [[pow(y, j, p) for y in last] for j in range(d + 1)]
    residual = list(w.values)
    result = MultivariatePoly.zero(field, spec.m)

    for i in range(d + 1):
        deg = d - i
        mu_col = k_last - deg
        half = Fraction(mu_col, 2)
        sigma = [0] * n_cols
        delta = [Fraction(1)] * n_cols
        for col in range(n_cols):
            lo = col * k_last
            column = WeightedWord(residual[lo:lo + k_last], w.weights[lo:lo + k_last])
            found = gmd_decode(field, last, deg, column)
            if found is not None:
                g, dist = found
                sigma[col] = g.coeff(deg)
                delta[col] = dist / half
        sub = CodeSpec(prefix_grid, slices[deg])
        f_i = WeightedWord(sigma, delta)
        q_i = _decode(sub, f_i, trace, depth + 1)
        if trace is not None:
            trace(LevelTrace(depth, spec, i, d, sub, f_i, q_i))
        result = result + q_i.append_variable(deg)
        # peel Q_i(x) y^deg off the received values for the next round
        if i < d and not q_i.is_zero():
            q_vals = evaluate_on_grid(q_i, prefix_grid)
            ys = y_pow[deg]
            for col, qv in enumerate(q_vals):
                if qv:
                    lo = col * k_last
                    for t in range(k_last):
                        residual[lo + t] = (residual[lo + t] - qv * ys[t]) % p
    return result


def unique_decode(spec: CodeSpec, received: Sequence[int]) -> MultivariatePoly | None:
    """Hard-decision decoding: the codeword at Hamming distance < mu/2, or None."""
    received = [v % spec.field.p for v in received]
    w = WeightedWord(received)
    P = weighted_downset_decode(spec, w)
    return P if verify_decoding(spec, w, P) else None


def verify_decoding(spec: CodeSpec, w: WeightedWord, P: MultivariatePoly) -> bool:
    if any(e not in spec.downset for e in P.terms):
        return False
    dist = weighted_distance(w, evaluate_on_grid(P, spec.grid))
    return dist < Fraction(min_distance(spec), 2)
