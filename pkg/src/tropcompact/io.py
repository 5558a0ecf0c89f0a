"""
JSON documents exchanged by the command-line tools.

Rationals are written as ints when integral and as ``"p/q"`` strings
otherwise; both forms are accepted on input.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .closure import HasseDiagram
from .compactify import DecoratedHasse
from .complex import PolyhedralComplex
from .errors import InvalidComplex
from .homology import Cosheaf
from .linalg import QMatrix, to_rational
from .orientation import SignMap
from .builders.matroid import Matroid

TOP_SENTINEL = [-1]


class DocumentError(ValueError):
    """Malformed JSON document (wrong keys or value types)."""


def rational_out(x: Fraction):
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def rational_in(x) -> Fraction:
    try:
        return to_rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"not an exact rational: {x!r}") from exc


def _require(doc: dict, *keys: str) -> None:
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object")
    missing = [k for k in keys if k not in doc]
    if missing:
        raise DocumentError(f"missing keys: {', '.join(missing)}")


def complex_to_json(pc: PolyhedralComplex) -> dict:
    return {
        "ambient_dim": pc.ambient_dim,
        "points": [[0 if p.is_far else 1] + [rational_out(x) for x in p.coords] for p in pc.points],
        "maximal_cells": [sorted(c) for c in pc.maximal_cells],
    }


def complex_from_json(doc: dict) -> PolyhedralComplex:
    _require(doc, "ambient_dim", "points", "maximal_cells")
    rows = [[rational_in(x) for x in row] for row in doc["points"]]
    n = doc["ambient_dim"]
    if any(len(r) != n + 1 for r in rows):
        raise InvalidComplex(f"every point needs {n + 1} homogeneous coordinates")
    return PolyhedralComplex.from_homogeneous(rows, doc["maximal_cells"])


def _sorted(s) -> list[int]:
    return TOP_SENTINEL if s is None else sorted(s)


def hasse_to_json(d: DecoratedHasse) -> dict:
    h = d.hasse
    nodes = []
    for i in range(len(h)):
        s, r, real, sed = d.decoration(i)
        nodes.append({"id": i, "vertices": _sorted(s), "rank": r, "realisation": _sorted(real),
                      "sedentarity": [] if sed is None else sorted(sed)})
    return {
        "mode": d.mode,
        "nodes": nodes,
        "edges": [list(e) for e in h.edges],
        "comp_vertices": [{"id": a.id, "realisation": sorted(a.realisation), "sedentarity": sorted(a.sedentarity)}
                          for a in d.vertices],
        "bottom": h.bottom,
        "top": h.top,
    }


def hasse_from_json(doc: dict) -> HasseDiagram:
    _require(doc, "nodes", "edges")
    nodes = sorted(doc["nodes"], key=lambda n: n["id"])
    if [n["id"] for n in nodes] != list(range(len(nodes))):
        raise DocumentError("node ids must be 0, 1, ..., n-1")
    faces = [None if n["vertices"] == TOP_SENTINEL else frozenset(n["vertices"]) for n in nodes]
    top = doc.get("top")
    if top is None:
        top = next((i for i, f in enumerate(faces) if f is None), None)
    return HasseDiagram(faces, [n["rank"] for n in nodes], [tuple(e) for e in doc["edges"]],
                        bottom=doc.get("bottom", 0), top=top)


def signs_to_json(s: SignMap) -> dict:
    return {"signs": [list(t) for t in s.triples()]}


def signs_from_json(doc: dict) -> SignMap:
    _require(doc, "signs")
    return SignMap({(lo, hi): int(v) for lo, hi, v in doc["signs"]})


def cosheaf_from_json(doc: dict) -> Cosheaf:
    _require(doc, "stalks", "restrictions")
    stalks = {int(k): int(v) for k, v in doc["stalks"].items()}
    maps = {}
    for lo, hi, m in doc["restrictions"]:
        rows = [[rational_in(x) for x in row] for row in m]
        cols = len(rows[0]) if rows else stalks.get(int(hi), 0)
        maps[(int(lo), int(hi))] = QMatrix.from_rows(rows, cols)
    return Cosheaf(stalks, maps)


def cosheaf_to_json(c: Cosheaf) -> dict:
    return {
        "stalks": {str(k): v for k, v in sorted(c.stalk_dim.items())},
        "restrictions": [[lo, hi, [[rational_out(x) for x in row] for row in m.entries]]
                         for (lo, hi), m in sorted(c.restriction.items())],
    }


def matroid_from_json(doc: dict) -> Matroid:
    if isinstance(doc, dict) and "graph_edges" in doc:
        return Matroid.from_graph([tuple(e) for e in doc["graph_edges"]])
    _require(doc, "ground_size", "bases")
    return Matroid(int(doc["ground_size"]), tuple(frozenset(b) for b in doc["bases"]))


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
