"""
Command-line front end.

Commands read a JSON document from ``--input`` (default: stdin) and write to
``--output`` (default: stdout), so they chain with pipes::

    tropcompact build orthant | tropcompact compactify | tropcompact fvector

Exit codes: 0 on success, 1 on invalid input complexes and domain errors,
2 on unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter

from . import io
from .builders import CUBIC, bergman_fine, bergman_k4_coarse_fixture, examples, hypersurface, k4_matroid, parse_tropical_polynomial
from .builders.random import random_complex
from .closure import axiom_violations, brute_force_closed_sets, covering_pairs
from .compactify import closure_operator, compactify
from .complex import PolyhedralComplex
from .errors import ParseError, TropCompactError
from .homology import betti, build_chain, constant_cosheaf
from .orientation import signed_incidence, square_violations

EXAMPLES = {
    "orthant": examples.positive_orthant_example,
    "half-line": examples.half_line,
    "shield": examples.shield,
    "parallel-half-lines": examples.parallel_half_lines,
    "no-recession-fan": examples.complex_without_recession_fan,
    "no-recession-fan-refined": examples.refined_complex_without_recession_fan,
}


class InputError(Exception):
    pass


def _read(path: str | None):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _is_hasse(doc) -> bool:
    return isinstance(doc, dict) and "nodes" in doc


def _hasse_of(doc):
    """A Hasse diagram from either a compactification document or a complex."""
    if _is_hasse(doc):
        return io.hasse_from_json(doc)
    return compactify(io.complex_from_json(doc)).hasse


def cmd_validate(args) -> int:
    pc = io.complex_from_json(_read(args.input))
    report = pc.validate()
    lines = report.lines()
    if report.ok:
        lines.append("recession fan: " + ("yes" if pc.has_recession_fan() else "no"))
    _write(args.output, "\n".join(lines) + "\n")
    return 0 if report.ok else 1


def cmd_compactify(args) -> int:
    pc = io.complex_from_json(_read(args.input))
    report = pc.validate()
    if not report.ok:
        sys.stderr.write("\n".join(report.lines()) + "\n")
        return 1
    _write(args.output, io.dumps(io.hasse_to_json(compactify(pc, args.mode))))
    return 0


def cmd_fvector(args) -> int:
    doc = _read(args.input)
    if _is_hasse(doc):
        h = io.hasse_from_json(doc)
        counts = Counter(h.ranks[i] for i in h.proper_nodes())
        fv = [counts[r] for r in range(1, max(counts, default=0) + 1)]
    elif args.compactified:
        fv = compactify(io.complex_from_json(doc)).f_vector()
    else:
        fv = io.complex_from_json(doc).f_vector()
    _write(args.output, " ".join(map(str, fv)) + "\n")
    return 0


def cmd_orientations(args) -> int:
    h = _hasse_of(_read(args.input))
    _write(args.output, io.dumps(io.signs_to_json(signed_incidence(h))))
    return 0


def cmd_betti(args) -> int:
    h = _hasse_of(_read(args.input))
    signs = io.signs_from_json(_read(args.signs)) if args.signs else signed_incidence(h)
    cosheaf = io.cosheaf_from_json(_read(args.cosheaf)) if args.cosheaf else constant_cosheaf(h)
    cc = build_chain(h, signs, cosheaf, cohomology=args.cohomology)
    _write(args.output, " ".join(map(str, betti(cc, args.field))) + "\n")
    return 0


def _build(args) -> PolyhedralComplex:
    if args.kind == "bergman":
        if args.matroid:
            return bergman_fine(io.matroid_from_json(_read(args.matroid)))
        if args.k4:
            return bergman_fine(k4_matroid())
        return bergman_k4_coarse_fixture()
    if args.kind == "hypersurface":
        return hypersurface(parse_tropical_polynomial(args.polynomial or CUBIC))
    return EXAMPLES[args.kind]()


def cmd_build(args) -> int:
    _write(args.output, io.dumps(io.complex_to_json(_build(args))))
    return 0


def cmd_check(args) -> int:
    """Closure axioms, brute-force agreement and square identities on random complexes."""
    rng = random.Random(args.seed)
    failures = 0
    lines = []
    for k in range(args.count):
        pc = random_complex(rng)
        op = closure_operator(pc)
        problems = axiom_violations(op)
        d = compactify(pc, "toric")
        closed = brute_force_closed_sets(op)
        found = [f if f is not None else frozenset(range(op.ground_size)) for f in d.hasse.faces]
        if set(found) - {frozenset(range(op.ground_size))} != closed - {frozenset(range(op.ground_size))}:
            problems.append("closed sets differ from brute force")
        if square_violations(d.hasse, signed_incidence(d.hasse)):
            problems.append("signed incidence violates a square")
        ok = not problems
        failures += not ok
        lines.append(f"{k}: |A|={op.ground_size} nodes={len(d.hasse)} {'ok' if ok else '; '.join(problems)}")
    lines.append(f"{args.count - failures}/{args.count} passed")
    _write(args.output, "\n".join(lines) + "\n")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tropcompact", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", "-i", help="input JSON file (default: stdin)")
        p.add_argument("--output", "-o", help="output file (default: stdout)")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "check the complex axioms and report the recession fan")
    p = command("compactify", cmd_compactify, "decorated face poset of the compactification")
    p.add_argument("--mode", choices=("auto", "toric", "chart"), default="auto")
    p = command("fvector", cmd_fvector, "face counts of a complex or a compactification")
    p.add_argument("--compactified", action="store_true", help="compactify a complex before counting")
    command("orientations", cmd_orientations, "signed incidence relation of a compactification")
    p = command("betti", cmd_betti, "Betti numbers of a compactification")
    p.add_argument("--field", choices=("gf2", "q"), default="gf2")
    p.add_argument("--cosheaf", help="cosheaf JSON (default: constant coefficients)")
    p.add_argument("--signs", help="signed incidence JSON (default: computed)")
    p.add_argument("--cohomology", action="store_true", help="use the transposed (cochain) complex")
    p = command("build", cmd_build, "emit an example complex")
    p.add_argument("kind", choices=sorted(EXAMPLES) + ["bergman", "hypersurface"])
    p.add_argument("--k4-coarse", action="store_true", help="coarse Bergman fan of K4 (the default)")
    p.add_argument("--k4", action="store_true", help="fine Bergman fan of K4")
    p.add_argument("--matroid", help="matroid JSON with 'bases' or 'graph_edges'")
    p.add_argument("--polynomial", help="tropical polynomial (default: a plane cubic)")
    p = command("check", cmd_check, "property checks on seeded random complexes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    return parser


def _error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, io.DocumentError, ParseError) as exc:
        _error(type(exc).__name__, str(exc))
        return 2
    except TropCompactError as exc:
        _error(type(exc).__name__, str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
