"""File formats: JSON code specs and coefficient tables, line-based word files."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .codes import CodeSpec, Downset, is_downset
from .field import PrimeField
from .grid import Grid
from .poly import MultivariatePoly
from .weighted import WeightedWord


class FormatError(ValueError):
    pass


_RATIONAL = re.compile(r"^(\d+)(?:/(\d+))?$")


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    m = _RATIONAL.match(text)
    if not m:
        raise ValueError(f"expected a rational 'num/den', got {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def _load_json(path: str | Path):
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from None


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise FormatError(f"{where}: expected a list of integers")
    return value


def spec_from_dict(doc, source: str = "<spec>") -> CodeSpec:
    if not isinstance(doc, dict):
        raise FormatError(f"{source}: expected a JSON object")
    for key in ("p", "grid", "downset"):
        if key not in doc:
            raise FormatError(f"{source}: missing field '{key}'")
    p = doc["p"]
    if not isinstance(p, int) or isinstance(p, bool):
        raise FormatError(f"{source}: field 'p': expected an integer")
    try:
        field = PrimeField(p)
    except ValueError as exc:
        raise FormatError(f"{source}: field 'p': {exc}") from None
    grid_doc = doc["grid"]
    if not isinstance(grid_doc, list) or not grid_doc:
        raise FormatError(f"{source}: field 'grid': expected a nonempty list of lists")
    sets = [_int_list(s, f"{source}: field 'grid[{i}]'") for i, s in enumerate(grid_doc)]
    try:
        grid = Grid(field, sets)
    except ValueError as exc:
        raise FormatError(f"{source}: field 'grid': {exc}") from None
    downset = _downset_from_doc(doc["downset"], grid, f"{source}: field 'downset'")
    try:
        return CodeSpec(grid, downset)
    except ValueError as exc:
        raise FormatError(f"{source}: {exc}") from None


def _downset_from_doc(doc, grid: Grid, where: str) -> Downset:
    m = grid.m
    if not isinstance(doc, dict) or len(doc) != 1:
        raise FormatError(f"{where}: expected exactly one of 'generators', 'members', "
                          "'total_degree', 'individual_degrees'")
    (kind, value), = doc.items()
    try:
        if kind == "generators":
            if not isinstance(value, list) or not value:
                raise FormatError(f"{where}.generators: expected a nonempty list")
            gens = [_int_list(g, f"{where}.generators[{i}]") for i, g in enumerate(value)]
            return Downset.from_generators(m, gens)
        if kind == "members":
            if not isinstance(value, list):
                raise FormatError(f"{where}.members: expected a list")
            members = [tuple(_int_list(g, f"{where}.members[{i}]")) for i, g in enumerate(value)]
            if not is_downset(m, members):
                raise FormatError(f"{where}.members: not a downset")
            return Downset(m, members)
        if kind == "total_degree":
            if not isinstance(value, int) or isinstance(value, bool):
                raise FormatError(f"{where}.total_degree: expected an integer")
            return Downset.total_degree(m, value, box=grid.sizes)
        if kind == "individual_degrees":
            bounds = _int_list(value, f"{where}.individual_degrees")
            if len(bounds) != m:
                raise FormatError(f"{where}.individual_degrees: expected {m} entries")
            return Downset.individual_degrees(bounds)
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None
    raise FormatError(f"{where}: unknown downset kind '{kind}'")


def spec_to_dict(spec: CodeSpec) -> dict:
    return {
        "p": spec.field.p,
        "grid": [list(s) for s in spec.grid.sets],
        "downset": {"generators": [list(a) for a in spec.downset.maximal]},
    }


def load_spec(path: str | Path) -> CodeSpec:
    return spec_from_dict(_load_json(path), str(path))


def coefficients_to_list(P: MultivariatePoly) -> list[dict]:
    return [{"monomial": list(e), "value": P.terms[e]} for e in sorted(P.terms)]


def dump_coefficients(P: MultivariatePoly) -> str:
    return json.dumps({"coefficients": coefficients_to_list(P)}, indent=2) + "\n"


def load_coefficients(path: str | Path, spec: CodeSpec) -> MultivariatePoly:
    doc = _load_json(path)
    if not isinstance(doc, dict) or not isinstance(doc.get("coefficients"), list):
        raise FormatError(f"{path}: expected an object with a 'coefficients' list")
    terms: dict[tuple[int, ...], int] = {}
    for i, entry in enumerate(doc["coefficients"]):
        where = f"{path}: field 'coefficients[{i}]'"
        if not isinstance(entry, dict) or set(entry) != {"monomial", "value"}:
            raise FormatError(f"{where}: expected {{'monomial': [...], 'value': int}}")
        e = tuple(_int_list(entry["monomial"], where + ".monomial"))
        v = entry["value"]
        if not isinstance(v, int) or isinstance(v, bool):
            raise FormatError(f"{where}.value: expected an integer")
        if len(e) != spec.m:
            raise FormatError(f"{where}.monomial: expected {spec.m} exponents")
        if e not in spec.downset:
            raise FormatError(f"{where}.monomial: {list(e)} is not in the downset")
        if e in terms:
            raise FormatError(f"{where}.monomial: {list(e)} listed twice")
        terms[e] = v
    return MultivariatePoly(spec.field, spec.m, terms)


def word_header(spec: CodeSpec) -> str:
    return " ".join(str(x) for x in (spec.field.p, spec.m, *spec.grid.sizes))


def dump_word(spec: CodeSpec, values: Sequence[int], weights: Sequence[Fraction] | None = None) -> str:
    lines = [word_header(spec)]
    if weights is None:
        lines.extend(str(v) for v in values)
    else:
        lines.extend(f"{v} {format_fraction(u)}" for v, u in zip(values, weights))
    return "\n".join(lines) + "\n"


def parse_word(text: str, spec: CodeSpec, weighted: bool, source: str = "<word>") -> WeightedWord:
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), 1)]
    lines = [(n, ln) for n, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise FormatError(f"{source}: empty word file")
    n0, header = lines[0]
    if header != word_header(spec):
        raise FormatError(f"{source}:{n0}: header {header!r} does not match spec "
                          f"(expected {word_header(spec)!r})")
    body = lines[1:]
    if len(body) != spec.length:
        raise FormatError(f"{source}: word has {len(body)} entries, grid has {spec.length} points")
    p = spec.field.p
    values, weights = [], []
    for n, ln in body:
        parts = ln.split()
        if len(parts) != (2 if weighted else 1):
            want = "'value weight_num/weight_den'" if weighted else "'value'"
            raise FormatError(f"{source}:{n}: expected {want}, got {ln!r}")
        try:
            v = int(parts[0])
        except ValueError:
            raise FormatError(f"{source}:{n}: value {parts[0]!r} is not an integer") from None
        if not 0 <= v < p:
            raise FormatError(f"{source}:{n}: value {v} outside [0, {p})")
        values.append(v)
        if weighted:
            try:
                u = parse_fraction(parts[1])
            except ValueError as exc:
                raise FormatError(f"{source}:{n}: {exc}") from None
            if u > 1:
                raise FormatError(f"{source}:{n}: weight {format_fraction(u)} outside [0, 1]")
            weights.append(u)
    return WeightedWord(values, weights if weighted else None)


def load_word(path: str | Path, spec: CodeSpec, weighted: bool = False) -> WeightedWord:
    return parse_word(Path(path).read_text(), spec, weighted, str(path))
