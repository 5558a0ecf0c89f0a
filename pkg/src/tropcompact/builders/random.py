"""Seeded random complexes with few compactification vertices, for property checks."""

from __future__ import annotations

import random
from itertools import combinations

from ..complex import PolyhedralComplex
from ..errors import TropCompactError
from ..polyhedron import VPolyhedron
from .tropical import MIN, TropicalPolynomial, hypersurface

_DIRECTIONS = [(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1), (1, -1), (2, 1), (1, 2), (-1, 2)]


def random_polyhedron(rng: random.Random) -> PolyhedralComplex:
    """A pointed 2-dimensional polyhedron with at most four vertices and two rays."""
    while True:
        verts = [(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(rng.randint(1, 4))]
        rays = rng.sample(_DIRECTIONS, rng.randint(0, 2))
        try:
            p = VPolyhedron.from_generators(2, verts, rays)
        except TropCompactError:
            continue
        if p.dim < 1:
            continue
        points = [[1, *v] for v in p.vertices] + [[0, *r] for r in p.rays]
        return PolyhedralComplex.from_homogeneous(points, [range(len(points))])


_SIMPLEX_RAYS = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)]


def random_subfan(rng: random.Random) -> PolyhedralComplex:
    """A subfan of the normal fan of the 3-simplex with at most ten cones."""
    while True:
        cones = [frozenset(c) for k in (1, 2) for c in combinations(range(4), k)]
        chosen = rng.sample(cones, rng.randint(1, 4))
        faces = {frozenset()} | {f for c in chosen for k in range(len(c) + 1) for f in map(frozenset, combinations(c, k))}
        if len(faces) > 10:
            continue
        maximal = [c for c in chosen if not any(c < d for d in chosen)]
        used = sorted(set().union(*maximal))
        pos = {r: i + 1 for i, r in enumerate(used)}
        points = [[1, 0, 0, 0]] + [[0, *_SIMPLEX_RAYS[r]] for r in used]
        return PolyhedralComplex.from_homogeneous(points, [[0] + [pos[r] for r in c] for c in maximal])


def random_tropical_curve(rng: random.Random) -> PolyhedralComplex:
    """A tropical line or conic with random small coefficients."""
    while True:
        degree = rng.choice((1, 2))
        exps = [(a, b) for a in range(degree + 1) for b in range(degree + 1 - a)]
        terms = tuple((rng.randint(-4, 4), e) for e in exps)
        try:
            return hypersurface(TropicalPolynomial(MIN, terms))
        except TropCompactError:
            continue


def random_complex(rng: random.Random) -> PolyhedralComplex:
    kind = rng.choice((random_polyhedron, random_subfan, random_tropical_curve))
    return kind(rng)
