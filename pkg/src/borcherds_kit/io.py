"""File formats and the bundled lattice/form database.

Every file is UTF-8 structured text: a versioned header line followed by a
JSON body with sorted keys, so that emission is byte-deterministic and every
emitted file re-parses to an equal value.

    lattice: {kind, name, rank, gram (row-major ints),
              glue?: {blocks: [names], code_generators: [[...]], modulus}}
    series:  {kind, denominator, precision: [num, den],
              terms: [[exponent_numerator, coeff_num, coeff_den], ...]}
    form:    {kind, lattice, weight: [num, den], precision: [num, den],
              terms: [[m_num, m_den, [coset...], coeff_num, coeff_den], ...]}

The environment variable BORCHERDS_DATA overrides the bundled data directory.
"""

import json
import os
from fractions import Fraction
from pathlib import Path

from .forms import WHForm
from .lattice import GlueData, GramLattice, discriminant_form
from .qseries import FracQSeries

HEADER = "borcherds-kit v1"


class FileFormatError(ValueError):
    pass


def data_directory():
    env = os.environ.get("BORCHERDS_DATA")
    if env:
        return Path(env)
    return Path(__file__).parent / "data"


def _read_body(path):
    text = Path(path).read_text(encoding="utf-8")
    lines = text.split("\n", 1)
    if not lines or lines[0].strip() != HEADER:
        raise FileFormatError(f"{path}: line 1: expected header '{HEADER}'")
    try:
        return json.loads(lines[1])
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: line {exc.lineno + 1}, column {exc.colno}: "
                              f"{exc.msg}") from exc


def _write_body(path, body):
    text = HEADER + "\n" + json.dumps(body, sort_keys=True, indent=1) + "\n"
    Path(path).write_text(text, encoding="utf-8")


def resolve_data_path(ref, relative_to=None):
    """A file path for `ref`: an existing path as-is, else a database name."""
    p = Path(ref)
    if p.suffix == ".json":
        if p.is_file():
            return p
        if relative_to is not None and (Path(relative_to) / p).is_file():
            return Path(relative_to) / p
        candidate = data_directory() / p.name
        if candidate.is_file():
            return candidate
        raise FileNotFoundError(f"no such file: {ref}")
    candidate = data_directory() / f"{ref}.json"
    if candidate.is_file():
        return candidate
    raise FileNotFoundError(f"no lattice or form named {ref!r} in "
                            f"{data_directory()}")


_LATTICE_CACHE = {}


def load_lattice(ref, relative_to=None):
    path = resolve_data_path(ref, relative_to)
    key = str(path.resolve())
    if key in _LATTICE_CACHE:
        return _LATTICE_CACHE[key]
    body = _read_body(path)
    if body.get("kind") != "lattice":
        raise FileFormatError(f"{path}: not a lattice file")
    rank = body["rank"]
    flat = body["gram"]
    if len(flat) != rank * rank:
        raise FileFormatError(f"{path}: gram needs {rank * rank} entries")
    gram = [flat[i * rank:(i + 1) * rank] for i in range(rank)]
    glue = None
    if "glue" in body:
        spec = body["glue"]
        blocks = [load_lattice(name, relative_to=path.parent)
                  for name in spec["blocks"]]
        modulus = spec["modulus"]
        generators = []
        for row in spec["code_generators"]:
            if len(row) != len(blocks):
                raise FileFormatError(f"{path}: glue word length mismatch")
            generators.append(tuple((int(c) % modulus,) for c in row))
        discs = [b.discriminant_form() for b in blocks]
        zero_word = tuple(d.zero for d in discs)
        words = {zero_word}
        frontier = [zero_word]
        while frontier:
            w = frontier.pop()
            for g in generators:
                nw = tuple(d.add(a, b) for d, a, b in zip(discs, w, g))
                if nw not in words:
                    words.add(nw)
                    frontier.append(nw)
        glue = GlueData(blocks, sorted(words), generators)
    lat = GramLattice(gram, name=body.get("name"), glue=glue)
    _LATTICE_CACHE[key] = lat
    return lat


def save_lattice(path, lattice, glue_spec=None):
    body = {
        "kind": "lattice",
        "name": lattice.name,
        "rank": lattice.rank,
        "gram": [x for row in lattice.gram for x in row],
    }
    if glue_spec is not None:
        body["glue"] = glue_spec
    _write_body(path, body)


def load_series(path):
    body = _read_body(path)
    if body.get("kind") != "series":
        raise FileFormatError(f"{path}: not a series file")
    den = body["denominator"]
    prec = Fraction(*body["precision"])
    coeffs = {}
    for expn, cnum, cden in body["terms"]:
        coeffs[Fraction(expn, den)] = Fraction(cnum, cden)
    return FracQSeries(coeffs, prec, denominator=den)


def save_series(path, series):
    den = series.denominator
    terms = sorted(
        (int(e * den), c.numerator, c.denominator)
        for e, c in series.coeffs.items())
    body = {
        "kind": "series",
        "denominator": den,
        "precision": [series.prec.numerator, series.prec.denominator],
        "terms": [list(t) for t in terms],
    }
    _write_body(path, body)


def load_form(path, relative_to=None):
    path = resolve_data_path(path, relative_to)
    body = _read_body(path)
    if body.get("kind") != "form":
        raise FileFormatError(f"{path}: not a form file")
    lattice = load_lattice(body["lattice"], relative_to=path.parent)
    disc = discriminant_form(lattice)
    weight = Fraction(*body["weight"])
    prec = Fraction(*body["precision"])
    coeffs = {}
    for mnum, mden, coset, cnum, cden in body["terms"]:
        coeffs[(Fraction(mnum, mden), tuple(coset))] = Fraction(cnum, cden)
    form = WHForm(disc, weight, coeffs, prec)
    return form, lattice


def save_form(path, form, lattice_name):
    terms = sorted(
        (m.numerator, m.denominator, list(mu), c.numerator, c.denominator)
        for (m, mu), c in form.coefficients.items())
    body = {
        "kind": "form",
        "lattice": lattice_name,
        "weight": [form.weight.numerator, form.weight.denominator],
        "precision": [form.prec.numerator, form.prec.denominator],
        "terms": [list(t) for t in terms],
    }
    _write_body(path, body)
