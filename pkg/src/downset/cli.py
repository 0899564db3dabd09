"""Command-line interface: encode, decode, distance, verify, fuzz.

Exit codes: 0 success, 1 usage or format error, 2 no codeword within the
unique decoding radius (``decode``) or word is not a codeword (``verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .codes import encode, is_codeword, min_distance_witness
from .decoder import weighted_downset_decode
from .formats import (
    FormatError,
    coefficients_to_list,
    dump_coefficients,
    dump_word,
    format_fraction,
    load_coefficients,
    load_spec,
    load_word,
)
from .fuzz import run_fuzz
from .poly import evaluate_on_grid
from .weighted import weighted_distance

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_CODEWORD = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for "no codeword"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def cmd_encode(args) -> int:
    spec = load_spec(args.spec)
    P = load_coefficients(args.coefficients, spec)
    _emit(dump_word(spec, encode(spec, P)), args.output)
    return EXIT_OK


def cmd_decode(args) -> int:
    spec = load_spec(args.spec)
    w = load_word(args.word, spec, weighted=args.weighted)
    mu, _ = min_distance_witness(spec)
    radius = Fraction(mu, 2)
    P = weighted_downset_decode(spec, w)
    # independent re-check: never report "decoded" outside the radius
    dist = weighted_distance(w, evaluate_on_grid(P, spec.grid))
    in_code = all(e in spec.downset for e in P.terms)
    if in_code and dist < radius:
        doc = {
            "status": "decoded",
            "coefficients": coefficients_to_list(P),
            "distance": format_fraction(dist),
            "radius": format_fraction(radius),
        }
        if args.coefficients_out:
            Path(args.coefficients_out).write_text(dump_coefficients(P))
        code = EXIT_OK
    else:
        doc = {"status": "no_codeword_within_radius", "radius": format_fraction(radius)}
        code = EXIT_NO_CODEWORD
    _emit(_json(doc), args.output)
    return code


def cmd_distance(args) -> int:
    spec = load_spec(args.spec)
    mu, alpha = min_distance_witness(spec)
    _emit(_json({"mu": mu, "alpha": list(alpha)}), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    spec = load_spec(args.spec)
    w = load_word(args.word, spec, weighted=False)
    ok = is_codeword(spec, w.values)
    _emit(_json({"codeword": ok}), args.output)
    return EXIT_OK if ok else EXIT_NO_CODEWORD


def cmd_fuzz(args) -> int:
    lines, ok = run_fuzz(args.seed, args.cases, args.max_p, args.max_m, args.max_grid,
                         threads=args.threads)
    _emit("".join(ln + "\n" for ln in lines), args.output)
    return EXIT_OK if ok else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="downset", description="Unique decoding of downset codes over grids.")
    parser.add_argument("--threads", type=int, default=1, help="worker processes for fuzz (default 1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("encode", help="evaluate a coefficient table on the grid")
    p.add_argument("spec")
    p.add_argument("coefficients")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word")
    p.add_argument("spec")
    p.add_argument("word")
    p.add_argument("--weighted", action="store_true", help="word lines carry 'value num/den' weights")
    p.add_argument("-o", "--output")
    p.add_argument("--coefficients-out", help="also write the decoded coefficient file here")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("distance", help="minimum distance and an attaining monomial")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("verify", help="check whether a word is a codeword")
    p.add_argument("spec")
    p.add_argument("word")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="seeded oracle-equivalence fuzzing")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-p", type=int, default=13)
    p.add_argument("--max-m", type=int, default=3)
    p.add_argument("--max-grid", type=int, default=5)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
