"""Command-line front end.

Input is one JSON document, from a file or stdin (``-``)::

    {"vertices": 4, "facets": [[1, 2], [2, 3], [3, 4]]}
    {"vars": 4, "generators": ["x1*x3", "x1*x4", [0, 1, 0, 1]]}

Exit codes: 0 success, 2 invalid input, 3 precondition not met.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import classify
from .complex import SimplicialComplex
from .errors import InputError, PreconditionFailed, SRError
from .homology import Field
from .local_cohomology import cohomology
from .monomial import (
    MonomialIdeal,
    complex_from_ideal,
    find_socle_witness,
    format_monomial,
    parse_monomial,
    power_generators,
    stanley_reisner_ideal,
)
from .multiplicity import numerics, screen_buchsbaum_powers

EXIT_INPUT = 2
EXIT_PRECONDITION = 3


def _read_document(path: str) -> dict:
    if path == "-":
        text = sys.stdin.read()
        where = "<stdin>"
    else:
        where = path
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"{where}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{where}: top level must be an object")
    return doc


def _positive_int(doc: dict, key: str) -> int:
    val = doc.get(key)
    if not isinstance(val, int) or isinstance(val, bool) or val < 1:
        raise InputError(f"field '{key}': expected a positive integer, got {val!r}")
    return val


def parse_ideal(doc: dict) -> MonomialIdeal:
    n = _positive_int(doc, "vars")
    gens = doc.get("generators")
    if not isinstance(gens, list):
        raise InputError("field 'generators': expected a list")
    monos = []
    for k, g in enumerate(gens):
        try:
            if isinstance(g, str):
                monos.append(parse_monomial(g, n))
            elif isinstance(g, list) and all(isinstance(e, int) and not isinstance(e, bool) for e in g):
                if len(g) != n:
                    raise InputError(f"exponent vector has length {len(g)}, expected {n}")
                monos.append(tuple(g))
            else:
                raise InputError(f"expected a monomial string or exponent list, got {g!r}")
        except InputError as exc:
            raise InputError(f"generators[{k}]: {exc}") from exc
    if any(sum(m) == 0 for m in monos):
        raise InputError("generators: the unit monomial 1 is not allowed")
    return MonomialIdeal.from_generators(n, monos)


def parse_complex(doc: dict) -> SimplicialComplex:
    if "facets" in doc:
        n = _positive_int(doc, "vertices")
        facets = doc["facets"]
        if not isinstance(facets, list):
            raise InputError("field 'facets': expected a list of integer lists")
        for k, f in enumerate(facets):
            if not isinstance(f, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in f):
                raise InputError(f"facets[{k}]: expected a list of integers, got {f!r}")
            for j, v in enumerate(f):
                if not 1 <= v <= n:
                    raise InputError(f"facets[{k}][{j}]: vertex {v} outside 1..{n}")
        return SimplicialComplex.from_facets(n, facets)
    if "generators" in doc:
        return complex_from_ideal(parse_ideal(doc))
    raise InputError("document needs either 'vertices'+'facets' or 'vars'+'generators'")


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines(payload)) + "\n")


def cmd_complex(args) -> dict:
    return parse_complex(_read_document(args.input)).to_document()


def _complex_text(p):
    yield f"vertices: {p['vertices']}"
    for f in p["facets"]:
        yield "facet: " + " ".join(map(str, f))


def cmd_classify(args) -> dict:
    return classify(parse_complex(_read_document(args.input))).to_dict()


def _classify_text(p):
    for c in p["components"]:
        yield f"component {c['kind']} m={c['m']} vertices={' '.join(map(str, c['vertices']))}"
    for key in ("dim", "connected", "pure", "ci", "lci", "gci", "s2", "cm", "buchsbaum", "witness_vertex"):
        val = p[key]
        yield f"{key}: {'unknown_by_this_criterion' if val is None and key in ('cm', 'buchsbaum') else val}"


def cmd_power(args) -> dict:
    doc = _read_document(args.input)
    ideal = parse_ideal(doc) if "generators" in doc else stanley_reisner_ideal(parse_complex(doc))
    if args.power < 1:
        raise InputError("--power must be at least 1")
    powered = power_generators(ideal, args.power)
    return {
        "vars": ideal.n_vars,
        "power": args.power,
        "count": len(powered.gens),
        "generators": [{"monomial": format_monomial(g), "exponents": list(g), "degree": sum(g)} for g in powered.gens],
    }


def _power_text(p):
    yield f"power {p['power']}: {p['count']} minimal generators"
    for g in p["generators"]:
        yield f"{g['degree']}\t{g['monomial']}"


def cmd_cohomology(args) -> dict:
    delta = parse_complex(_read_document(args.input))
    if args.power < 1:
        raise InputError("--power must be at least 1")
    report = cohomology(delta, args.power, Field.parse(args.field), jobs=args.jobs)
    out = report.to_dict()
    if report.depth == 0:
        powered = power_generators(stanley_reisner_ideal(delta), args.power)
        w = find_socle_witness(powered, args.power - 1)
        out["socle_witness"] = format_monomial(w) if w is not None else None
    return out


def _cohomology_text(p):
    yield f"dim {p['dim']}  depth {p['depth']}  cm {p['is_cm']}  field {p['field']}  power {p['power']}"
    for piece in p["pieces"]:
        size = piece["total_dim"] if piece["finite"] else "infinite"
        yield f"H^{piece['i']}: {size}"
        for c in piece["contributions"]:
            yield f"  a={tuple(c['degree'])} F={tuple(c['face'])} H~_{c['homology_index']} dim {c['dim']}"
    if "socle_witness" in p:
        yield f"socle witness: {p['socle_witness']}"


def cmd_screen(args) -> dict:
    delta = parse_complex(_read_document(args.input))
    if args.max_power < 1:
        raise InputError("--max-power must be at least 1")
    num = numerics(delta)
    rows = screen_buchsbaum_powers(delta, args.max_power)
    return {"e": num.e, "c": num.c, "q": num.q, "d": num.d, "rows": [r.to_dict() for r in rows]}


def _screen_text(p):
    yield f"e={p['e']} c={p['c']} q={p['q']} d={p['d']}"
    for r in p["rows"]:
        yield f"{r['power']}\t{r['bound']}\t{r['verdict']}"


COMMANDS = {
    "complex": (cmd_complex, _complex_text, "normalize input into a facet document"),
    "classify": (cmd_classify, _classify_text, "structure classification and CI/LCI flags"),
    "power": (cmd_power, _power_text, "minimal generators of I^l"),
    "cohomology": (cmd_cohomology, _cohomology_text, "graded local cohomology of S/I^l"),
    "screen": (cmd_screen, _screen_text, "multiplicity screen for Buchsbaum powers"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="srlci", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, _, helptext) in COMMANDS.items():
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", nargs="?", default="-", help="JSON document path, or - for stdin")
        p.add_argument("--format", choices=("json", "text"), default="json")
        if name in ("power", "cohomology"):
            p.add_argument("--power", type=int, default=1)
        if name == "cohomology":
            p.add_argument("--field", default="q", help="q or p:<prime>")
            p.add_argument("--jobs", type=int, default=1)
        if name == "screen":
            p.add_argument("--max-power", type=int, default=10)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run, text, _ = COMMANDS[args.command]
    try:
        payload = run(args)
    except PreconditionFailed as exc:
        print(f"srlci: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InputError, SRError) as exc:
        print(f"srlci: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(payload, args.format, text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
