"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria"."""

import itertools
import json
import math
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from downset import cli
from downset.codes import (
    CodeSpec,
    Downset,
    encode,
    is_downset,
    min_distance,
    min_weight_witness,
    nabla_size,
)
from downset.decoder import unique_decode, weighted_downset_decode
from downset.field import PrimeField
from downset.grid import Grid
from downset.oracle import (
    brute_force_min_distance,
    brute_force_nearest,
    codeword_count,
    corrupt,
    enumerate_codewords,
    random_downset,
)
from downset.poly import (
    MultivariatePoly,
    evaluate_on_grid,
    grid_interpolate,
    leading_monomial,
)
from downset.rng import SplitMix64
from downset.weighted import WeightedWord, weighted_distance

from conftest import ACCEPTANCE_LINES

PRIMES = [2, 3, 5, 7, 11, 13]
ENUM_LIMIT = 1 << 16


@contextmanager
def criterion(number, title):
    info = {}
    start = time.perf_counter()
    try:
        yield info
    except BaseException:
        line = f"[FAIL] criterion {number}: {title}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    elapsed = time.perf_counter() - start
    detail = info.get("detail", "")
    line = f"[PASS] criterion {number}: {title} ({detail}{', ' if detail else ''}{elapsed:.1f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def random_spec(rng, max_dim=12, enumerable=False, min_m=1, max_m=3):
    while True:
        p = rng.choice(PRIMES)
        m = rng.randint(min_m, max_m)
        sizes = [rng.randint(1, min(5, p)) for _ in range(m)]
        cap = max_dim
        if enumerable:
            cap = min(cap, int(math.log(ENUM_LIMIT, p)))
        D = random_downset(sizes, rng.randint(1, max(1, cap // 2)), rng)
        if len(D) > max_dim:
            continue
        spec = CodeSpec(Grid(PrimeField(p), [rng.sample(range(p), k) for k in sizes]), D)
        if enumerable and codeword_count(spec) > ENUM_LIMIT:
            continue
        return spec


def random_codeword(spec, rng):
    return MultivariatePoly(spec.field, spec.m,
                            {e: rng.randrange(spec.field.p) for e in sorted(spec.downset.members)})


def test_criterion_1_distance_formula():
    rng = SplitMix64(1001)
    with criterion(1, "min_distance == brute force on 500 random specs, < 60 s") as info:
        start = time.perf_counter()
        for _ in range(500):
            spec = random_spec(rng, enumerable=True)
            assert min_distance(spec) == brute_force_min_distance(spec), spec
        elapsed = time.perf_counter() - start
        assert elapsed < 60
        info["detail"] = "500/500 agree"


def test_criterion_2_half_distance_unique_decoding():
    rng = SplitMix64(1002)
    with criterion(2, "unique_decode recovers planted codeword, 1000 cases, < 120 s") as info:
        start = time.perf_counter()
        for _ in range(1000):
            spec = random_spec(rng)
            mu = min_distance(spec)
            C = random_codeword(spec, rng)
            e = rng.randint(0, math.ceil(mu / 2) - 1)
            received = corrupt(encode(spec, C), e, rng, spec.field.p)
            assert unique_decode(spec, received) == C
        elapsed = time.perf_counter() - start
        assert elapsed < 120
        info["detail"] = "1000/1000 recovered"


def test_criterion_3_weighted_decoding():
    rng = SplitMix64(1003)
    with criterion(3, "weighted decoding returns C when Delta(w, C) < mu/2, 300 words") as info:
        accepted = tried = 0
        while accepted < 300:
            tried += 1
            spec = random_spec(rng, enumerable=True)
            mu = min_distance(spec)
            C = random_codeword(spec, rng)
            word = encode(spec, C)
            received = corrupt(word, rng.randint(0, mu), rng, spec.field.p)
            denom = rng.randint(1, 12)
            w = WeightedWord(received, [Fraction(rng.randint(0, denom), denom) for _ in received])
            if weighted_distance(w, word) >= Fraction(mu, 2):
                continue
            accepted += 1
            assert weighted_downset_decode(spec, w) == C
            oracle = brute_force_nearest(spec, w)
            assert oracle.codeword == C and oracle.unique
        info["detail"] = f"300/300 from {tried} draws, oracle-confirmed"


def _rs_instance(rng):
    p = rng.choice([2, 3, 5, 7, 11])
    n = rng.randint(1, min(p, 8))
    d = rng.randint(0, min(3, n - 1))
    spec = CodeSpec(Grid(PrimeField(p), [rng.sample(range(p), n)]),
                    Downset(1, [(j,) for j in range(d + 1)]))
    if rng.random() < 0.6:
        base = encode(spec, random_codeword(spec, rng))
        values = corrupt(base, rng.randint(0, n), rng, p)
    else:
        values = [rng.randrange(p) for _ in range(n)]
    denom = rng.randint(1, 8)
    weights = [Fraction(rng.randint(0, denom), denom) if rng.random() < 0.7 else Fraction(0)
               for _ in range(n)]
    return spec, d, WeightedWord(values, weights)


def test_criterion_4_base_case_oracle_equivalence():
    from downset.rs import weighted_rs_decode

    rng = SplitMix64(1004)
    with criterion(4, "weighted RS decoder == brute force, >= 2000 words, triangle inequality") as info:
        inside = 0
        for _ in range(2000):
            spec, d, w = _rs_instance(rng)
            n = spec.length
            mu = n - d
            got = MultivariatePoly.from_univariate(
                weighted_rs_decode(spec.field, spec.grid.sets[0], d, w))
            oracle = brute_force_nearest(spec, w)
            if oracle.distance < Fraction(mu, 2):
                inside += 1
                assert got == oracle.codeword
            assert oracle.unique

            # Delta(f,G) + Delta(f,H) >= Delta(G,H) >= mu for G nearest, all H != G
            scale = math.lcm(*(u.denominator for u in w.weights))
            agree = np.array([int(u * scale) for u in w.weights])
            disagree = 2 * scale - agree
            f = np.array(w.values)
            g_word = np.array(encode(spec, oracle.codeword))
            g_cost = int(np.where(g_word == f, agree, disagree).sum())
            for _, words in enumerate_codewords(spec):
                h_cost = np.where(words == f, agree, disagree).sum(axis=1)
                ham = (words != g_word).sum(axis=1)
                others = ham > 0
                assert np.all(g_cost + h_cost[others] >= 2 * scale * ham[others])
                assert np.all(ham[others] >= mu)
        assert inside >= 500
        info["detail"] = f"2000 words, {inside} inside radius, all agree"


def test_criterion_5_slice_structure():
    rng = SplitMix64(1005)
    with criterion(5, "slices are nested downsets with the distance product bound, 500 downsets") as info:
        checks = 0
        for _ in range(500):
            spec = random_spec(rng, min_m=2, max_m=4)
            d, slices = spec.downset.slices()
            k_last = spec.grid.sizes[-1]
            mu = min_distance(spec)
            for i, Di in enumerate(slices):
                assert is_downset(spec.m - 1, Di.members)
                if i:
                    assert slices[i - 1].members >= Di.members
                assert mu <= min_distance(spec.prefix(Di)) * (k_last - i)
                checks += 1
        info["detail"] = f"{checks} slice checks, 0 violations"


def test_criterion_6_schwartz_zippel():
    rng = SplitMix64(1006)
    with criterion(6, "support >= |nabla(LM)| on 500 polys; witness weight exact on 100 downsets") as info:
        n_poly = 0
        while n_poly < 500:
            p = rng.choice(PRIMES)
            sizes = [rng.randint(1, min(5, p)) for _ in range(rng.randint(1, 3))]
            grid = Grid(PrimeField(p), [rng.sample(range(p), k) for k in sizes])
            n_terms = rng.randint(1, 6)
            box = list(itertools.product(*(range(k) for k in sizes)))
            P = MultivariatePoly(grid.field, grid.m,
                                 {box[rng.randrange(len(box))]: rng.randint(1, p - 1)
                                  for _ in range(n_terms)})
            if P.is_zero():
                continue
            n_poly += 1
            support = sum(1 for v in evaluate_on_grid(P, grid) if v)
            assert support >= nabla_size(leading_monomial(P, "grlex"), sizes)
        n_alpha = 0
        for _ in range(100):
            spec = random_spec(rng)
            for alpha in spec.downset:
                W = min_weight_witness(spec, alpha)
                assert all(e in spec.downset for e in W.terms)
                word = encode(spec, W)
                assert sum(1 for v in word if v) == math.prod(
                    k - a for k, a in zip(spec.grid.sizes, alpha))
                n_alpha += 1
        info["detail"] = f"500 polys, {n_alpha} witnesses"


def test_criterion_7_interpolation_roundtrips():
    rng = SplitMix64(1007)
    with criterion(7, "encode->interpolate and interpolate->evaluate identities, 200 instances") as info:
        for _ in range(200):
            spec = random_spec(rng)
            C = random_codeword(spec, rng)
            assert grid_interpolate(spec.grid, encode(spec, C)) == C
            table = [rng.randrange(spec.field.p) for _ in range(spec.length)]
            P = grid_interpolate(spec.grid, table)
            assert [P.evaluate(pt) for pt in spec.grid.points()] == table
        info["detail"] = "200/200 exact"


def test_criterion_8_fuzz_determinism():
    with criterion(8, "`fuzz --seed 42 --cases 100` twice is byte-identical") as info:
        cmd = [sys.executable, "-m", "downset", "fuzz", "--seed", "42", "--cases", "100"]
        first = subprocess.run(cmd, capture_output=True)
        second = subprocess.run(cmd, capture_output=True)
        assert first.returncode == 0 == second.returncode
        assert first.stdout == second.stdout and first.stdout
        info["detail"] = f"{len(first.stdout)} bytes identical"


def test_criterion_9_beyond_radius(tmp_path, capsys):
    rng = SplitMix64(1009)
    with criterion(9, "no codeword within mu/2: unique_decode -> None, decode exits 2, 50 words") as info:
        found = 0
        while found < 50:
            spec = random_spec(rng, enumerable=True)
            mu = min_distance(spec)
            if found % 2:
                base = encode(spec, random_codeword(spec, rng))
                word = corrupt(base, rng.randint(math.ceil(mu / 2), spec.length), rng, spec.field.p)
            else:
                word = [rng.randrange(spec.field.p) for _ in range(spec.length)]
            if brute_force_nearest(spec, WeightedWord(word)).distance < Fraction(mu, 2):
                continue
            assert unique_decode(spec, word) is None
            spec_path = tmp_path / f"spec{found}.json"
            spec_path.write_text(json.dumps({
                "p": spec.field.p,
                "grid": [list(s) for s in spec.grid.sets],
                "downset": {"generators": [list(a) for a in spec.downset.maximal]},
            }))
            word_path = tmp_path / f"word{found}.txt"
            header = " ".join(map(str, (spec.field.p, spec.m, *spec.grid.sizes)))
            word_path.write_text(header + "\n" + "\n".join(map(str, word)) + "\n")
            assert cli.main(["decode", str(spec_path), str(word_path)]) == 2
            assert json.loads(capsys.readouterr().out)["status"] == "no_codeword_within_radius"
            found += 1
        info["detail"] = "50/50 refused"
