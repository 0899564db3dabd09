"""Seeded oracle-equivalence fuzzing.

Each case draws a small code and checks the fast paths against the
exhaustive oracles: distance formula, hard-decision decoding of a planted
codeword, weighted decoding, and refusal on words outside the radius.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .codes import CodeSpec, encode, min_distance
from .decoder import unique_decode, weighted_downset_decode
from .field import PrimeField, is_prime
from .grid import Grid
from .oracle import brute_force_min_distance, brute_force_nearest, corrupt, random_downset
from .poly import evaluate_on_grid
from .rng import SplitMix64, derive_seed
from .weighted import WeightedWord

FUZZ_CODEWORD_LIMIT = 1 << 16


@dataclass(frozen=True)
class CaseResult:
    index: int
    passed: bool
    line: str


def random_spec(rng: SplitMix64, max_p: int, max_m: int, max_grid: int,
                limit: int = FUZZ_CODEWORD_LIMIT) -> CodeSpec:
    primes = [q for q in range(2, max(max_p, 2) + 1) if is_prime(q)]
    p = rng.choice(primes)
    m = rng.randint(1, max(max_m, 1))
    sizes = [rng.randint(1, min(max_grid, p)) for _ in range(m)]
    sets = [rng.sample(range(p), k) for k in sizes]
    # |D| <= 2 * target keeps p**|D| within the enumeration limit
    cap = max(1, int(math.log(limit, p)) // 2)
    downset = random_downset(sizes, rng.randint(1, cap), rng)
    return CodeSpec(Grid(PrimeField(p), sets), downset)


def run_case(seed: int, index: int, max_p: int, max_m: int, max_grid: int) -> CaseResult:
    rng = SplitMix64(derive_seed(seed, index))
    spec = random_spec(rng, max_p, max_m, max_grid)
    p = spec.field.p
    mu = min_distance(spec)
    radius = Fraction(mu, 2)
    failures = []

    if brute_force_min_distance(spec) != mu:
        failures.append("distance")

    coeffs = {e: rng.randrange(p) for e in sorted(spec.downset.members)}
    codeword = encode(spec, coeffs)
    e = rng.randint(0, (mu + 1) // 2 - 1)
    received = corrupt(codeword, e, rng, p)
    out = unique_decode(spec, received)
    if out is None or evaluate_on_grid(out, spec.grid) != codeword:
        failures.append("hard")

    weights = [Fraction(rng.randint(0, 4), 4) for _ in range(spec.length)]
    w = WeightedWord(corrupt(codeword, rng.randint(0, mu), rng, p), weights)
    oracle = brute_force_nearest(spec, w)
    if not oracle.unique:
        failures.append("uniqueness")
    if oracle.distance < radius and weighted_downset_decode(spec, w) != oracle.codeword:
        failures.append("weighted")

    noise = [rng.randrange(p) for _ in range(spec.length)]
    oracle = brute_force_nearest(spec, WeightedWord(noise))
    got = unique_decode(spec, noise)
    if oracle.distance < radius:
        if got != oracle.codeword:
            failures.append("noise")
    elif got is not None:
        failures.append("beyond-radius")

    status = "PASS" if not failures else "FAIL " + ",".join(failures)
    line = (f"case {index:04d} p={p} k={list(spec.grid.sizes)} dim={len(spec.downset)} "
            f"mu={mu} e={e} {status}")
    return CaseResult(index, not failures, line)


def _run_star(args):
    return run_case(*args)


def run_fuzz(seed: int, cases: int, max_p: int = 13, max_m: int = 3, max_grid: int = 5,
             threads: int = 1) -> tuple[list[str], bool]:
    jobs = [(seed, i, max_p, max_m, max_grid) for i in range(cases)]
    results: Iterable[CaseResult]
    if threads > 1 and cases > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_star, jobs, chunksize=4))
    else:
        results = [run_case(*job) for job in jobs]
    lines, n_pass = [], 0
    for r in results:
        lines.append(r.line)
        n_pass += r.passed
    if cases:
        lines.insert(0, f"fuzz seed={seed} cases={cases} max_p={max_p} max_m={max_m} max_grid={max_grid}")
        lines.append(f"summary: {n_pass}/{cases} passed")
    return lines, n_pass == cases
