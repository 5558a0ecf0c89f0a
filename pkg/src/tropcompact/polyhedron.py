"""
Pointed rational polyhedra in V-representation.

A polyhedron is ``conv(vertices) + cone(rays)``.  Generators are indexed with
the vertices first and the rays after them.  Everything is computed on the
homogenization: a vertex ``v`` becomes ``(1, v)`` and a ray ``r`` becomes
``(0, r)``; facets are the hyperplanes through ``dim - 1`` independent
generators with every generator on one closed side.  This brute force is
meant for desk-scale input (``MAX_GENERATORS``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .closure import ClosureOperator, HasseDiagram, build_hasse, enumerate_closure_system
from .errors import EmptyPolyhedron, LinealityDetected, NotAFaceOfTail
from .linalg import dot, kernel_basis, primitive, rank, to_rational

MAX_GENERATORS = 16

Vector = tuple[Fraction, ...]


def as_vector(v: Iterable) -> Vector:
    return tuple(to_rational(x) for x in v)


def _neg(v: Sequence[Fraction]) -> Vector:
    return tuple(-x for x in v)


@dataclass(frozen=True)
class _HRep:
    """Homogenized H-representation of the cone over a generator list."""

    dim: int                                    # dimension of the homogenized cone
    facets: tuple[tuple[Vector, frozenset], ...]  # (inner normal, tight generators)
    equations: tuple[Vector, ...]               # basis of the orthogonal complement


def _homogenized_hrep(gens: Sequence[Vector], width: int) -> _HRep:
    if len(gens) > MAX_GENERATORS:
        raise ValueError(f"brute-force facet enumeration is limited to {MAX_GENERATORS} generators")
    d = rank(gens) if gens else 0
    equations = tuple(tuple(row) for row in kernel_basis(list(gens), width).entries) if gens else ()
    facets: dict[frozenset, Vector] = {}
    if d >= 2:
        for combo in combinations(range(len(gens)), d - 1):
            rows = [gens[i] for i in combo] + list(equations)
            if rank(rows) != width - 1:
                continue
            normal = kernel_basis(rows, width).entries[0]
            values = [dot(normal, g) for g in gens]
            if any(x < 0 for x in values):
                if any(x > 0 for x in values):
                    continue
                normal = _neg(normal)
            tight = frozenset(i for i, x in enumerate(values) if x == 0)
            facets.setdefault(tight, normal)
    ordered = tuple(sorted(((n, t) for t, n in facets.items()), key=lambda ft: sorted(ft[1])))
    return _HRep(d, ordered, equations)


def _check_pointed(h: _HRep, width: int) -> None:
    if h.dim >= 2 and rank([n for n, _ in h.facets] + list(h.equations)) < width:
        raise LinealityDetected("the generators span a cone containing a line")


@dataclass(frozen=True)
class Cone:
    """Pointed polyhedral cone given by primitive ray generators."""

    ambient_dim: int
    rays: tuple[Vector, ...]

    def __post_init__(self):
        rays = []
        for r in self.rays:
            r = as_vector(r)
            if len(r) != self.ambient_dim:
                raise ValueError("ray of wrong dimension")
            if all(x == 0 for x in r):
                continue
            r = primitive(r)
            if r not in rays:
                rays.append(r)
        object.__setattr__(self, "rays", tuple(rays))
        self.polyhedron  # raises LinealityDetected for non-pointed cones

    @cached_property
    def polyhedron(self) -> VPolyhedron:
        return VPolyhedron(self.ambient_dim, ((Fraction(0),) * self.ambient_dim,), self.rays)

    @property
    def dim(self) -> int:
        return self.polyhedron.tail_dim

    def contains(self, x: Sequence) -> bool:
        return self.polyhedron.contains_direction(as_vector(x))

    def face_closure(self, ray_ids: Iterable[int]) -> frozenset:
        """Indices of the rays of the smallest face containing the given rays."""
        gens = self.polyhedron.closure(frozenset(i + 1 for i in ray_ids) | {0})
        return frozenset(i - 1 for i in gens if i > 0)

    def is_face(self, ray_ids: Iterable[int]) -> bool:
        ray_ids = frozenset(ray_ids)
        return self.face_closure(ray_ids) == ray_ids

    def same_as(self, other: Cone) -> bool:
        return self.ambient_dim == other.ambient_dim and set(self.rays) == set(other.rays)


@dataclass(frozen=True)
class HPolyhedron:
    """``{x : <a, x> >= b for (a, b) in inequalities, <c, x> = d for (c, d) in equations}``."""

    ambient_dim: int
    inequalities: tuple[tuple[Vector, Fraction], ...] = ()
    equations: tuple[tuple[Vector, Fraction], ...] = ()

    def __post_init__(self):
        ineq = tuple((as_vector(a), to_rational(b)) for a, b in self.inequalities)
        eqs = tuple((as_vector(a), to_rational(b)) for a, b in self.equations)
        for a, _ in ineq + eqs:
            if len(a) != self.ambient_dim:
                raise ValueError("constraint of wrong dimension")
        object.__setattr__(self, "inequalities", ineq)
        object.__setattr__(self, "equations", eqs)

    def contains(self, x: Sequence[Fraction]) -> bool:
        return (all(dot(a, x) >= b for a, b in self.inequalities)
                and all(dot(a, x) == b for a, b in self.equations))

    def intersect(self, other: HPolyhedron) -> HPolyhedron:
        return HPolyhedron(self.ambient_dim, self.inequalities + other.inequalities,
                           self.equations + other.equations)


@dataclass(frozen=True)
class VPolyhedron:
    ambient_dim: int
    vertices: tuple[Vector, ...]
    rays: tuple[Vector, ...] = ()

    def __post_init__(self):
        verts = tuple(as_vector(v) for v in self.vertices)
        rays = []
        for r in self.rays:
            r = as_vector(r)
            if all(x == 0 for x in r):
                raise ValueError("zero ray")
            rays.append(primitive(r))
        if not verts:
            raise EmptyPolyhedron("a pointed polyhedron needs at least one vertex")
        for v in verts + tuple(rays):
            if len(v) != self.ambient_dim:
                raise ValueError("generator of wrong dimension")
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertices")
        if len(set(rays)) != len(rays):
            raise ValueError("parallel rays")
        if set(rays) & {_neg(r) for r in rays}:
            raise LinealityDetected("opposite rays")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rays", tuple(rays))
        _check_pointed(self._hrep, self.ambient_dim + 1)

    @classmethod
    def from_generators(cls, ambient_dim: int, vertices: Iterable, rays: Iterable = ()) -> VPolyhedron:
        """Build from possibly redundant generators, keeping only extreme ones."""
        verts: list[Vector] = []
        for v in vertices:
            v = as_vector(v)
            if v not in verts:
                verts.append(v)
        dirs: list[Vector] = []
        for r in rays:
            r = as_vector(r)
            if any(r):
                r = primitive(r)
                if r not in dirs:
                    dirs.append(r)
        p = cls(ambient_dim, tuple(verts), tuple(dirs))
        return p.irredundant()

    # -- generators -----------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_generators(self) -> int:
        return len(self.vertices) + len(self.rays)

    def is_vertex(self, g: int) -> bool:
        return g < len(self.vertices)

    @cached_property
    def homogenized(self) -> tuple[Vector, ...]:
        one, zero = Fraction(1), Fraction(0)
        return tuple((one,) + v for v in self.vertices) + tuple((zero,) + r for r in self.rays)

    @cached_property
    def _hrep(self) -> _HRep:
        return _homogenized_hrep(self.homogenized, self.ambient_dim + 1)

    @cached_property
    def _proper_facets(self) -> tuple[tuple[Vector, frozenset], ...]:
        # the face at infinity (no vertex) is a facet of the homogenized cone only
        return tuple((n, t) for n, t in self._hrep.facets if any(self.is_vertex(g) for g in t))

    @property
    def dim(self) -> int:
        return self._hrep.dim - 1

    @cached_property
    def tail_dim(self) -> int:
        return rank(self.rays) if self.rays else 0

    @property
    def is_bounded(self) -> bool:
        return not self.rays

    # -- H-representation -----------------------------------------------------

    def facets(self) -> list[tuple[Vector, Fraction]]:
        """Facet inequalities ``<a, x> >= b`` within the affine hull."""
        return [(n[1:], -n[0]) for n, _ in self._proper_facets]

    def facet_incidences(self) -> list[frozenset]:
        return [t for _, t in self._proper_facets]

    def affine_hull(self) -> list[tuple[Vector, Fraction]]:
        """Equations ``<c, x> = d`` cutting out the affine hull."""
        return [(e[1:], -e[0]) for e in self._hrep.equations]

    def hrep(self) -> HPolyhedron:
        return HPolyhedron(self.ambient_dim, tuple(self.facets()), tuple(self.affine_hull()))

    def tail_hrep(self) -> HPolyhedron:
        h = self.hrep()
        zero = Fraction(0)
        return HPolyhedron(self.ambient_dim, tuple((a, zero) for a, _ in h.inequalities),
                           tuple((a, zero) for a, _ in h.equations))

    def contains(self, x: Sequence) -> bool:
        x = as_vector(x)
        hx = (Fraction(1),) + x
        return (all(dot(n, hx) >= 0 for n, _ in self._proper_facets)
                and all(dot(e, hx) == 0 for e in self._hrep.equations))

    def contains_direction(self, r: Sequence) -> bool:
        hr = (Fraction(0),) + as_vector(r)
        return (all(dot(n, hr) >= 0 for n, _ in self._proper_facets)
                and all(dot(e, hr) == 0 for e in self._hrep.equations))

    def relative_interior_point(self) -> Vector:
        k = len(self.vertices)
        point = [sum((v[i] for v in self.vertices), Fraction(0)) / k for i in range(self.ambient_dim)]
        for r in self.rays:
            point = [a + b for a, b in zip(point, r)]
        return tuple(point)

    # -- faces ----------------------------------------------------------------

    def closure(self, gens: frozenset) -> frozenset:
        """Generators lying on every facet that contains ``gens``."""
        if not gens:
            return frozenset()
        result = frozenset(range(self.n_generators))
        for tight in self.facet_incidences():
            if gens <= tight:
                result &= tight
        return result

    def is_face(self, gens: Iterable[int]) -> bool:
        gens = frozenset(gens)
        if not gens:
            return True
        return any(self.is_vertex(g) for g in gens) and self.closure(gens) == gens

    def face_lattice(self) -> HasseDiagram:
        return face_lattice(self)

    def face_polyhedron(self, gens: Iterable[int]) -> VPolyhedron:
        gens = sorted(gens)
        nv = self.n_vertices
        return VPolyhedron(self.ambient_dim, tuple(self.vertices[g] for g in gens if g < nv),
                           tuple(self.rays[g - nv] for g in gens if g >= nv))

    def generator_dim(self, gens: Iterable[int]) -> tuple[int, int]:
        """(dimension, tail dimension) of the face with the given generators."""
        gens = list(gens)
        h = [self.homogenized[g] for g in gens]
        rays = [self.rays[g - self.n_vertices] for g in gens if not self.is_vertex(g)]
        return (rank(h) - 1 if h else -1), (rank(rays) if rays else 0)

    def irredundant(self) -> VPolyhedron:
        """Drop generators that are not extreme."""
        h = self._hrep
        width = self.ambient_dim + 1
        if h.dim <= 1:
            return VPolyhedron(self.ambient_dim, self.vertices[:1], ())
        keep = []
        for g in range(self.n_generators):
            normals = [n for n, t in h.facets if g in t]
            if rank(normals + list(h.equations)) == width - 1:
                keep.append(g)
        if len(keep) == self.n_generators:
            return self
        return self.face_polyhedron(keep)


def facets(p: VPolyhedron) -> list[tuple[Vector, Fraction]]:
    return p.facets()


def face_lattice(p: VPolyhedron) -> HasseDiagram:
    """Hasse diagram of all faces of ``p`` (including the empty face and ``p``).

    The facet-incidence closure also produces sets made only of rays (faces
    of the homogenized cone at infinity); those are not faces of ``p`` and
    are dropped before the covering relation is recomputed.
    """
    op = ClosureOperator(p.n_generators, p.closure)
    raw = enumerate_closure_system(op)
    faces = [f for f in raw.faces if not f or any(p.is_vertex(g) for g in f)]
    if len(faces) == len(raw.faces):
        return raw
    covers = {}
    for a in faces:
        above = [b for b in faces if a < b]
        covers[a] = {b for b in above if not any(c < b for c in above)}
    return build_hasse(faces, covers)


def minface(p: VPolyhedron, s: Iterable[int]) -> frozenset | None:
    """Generators of the smallest face of ``p`` containing the generators ``s``.

    Returns None for a set of rays that lies in several minimal faces with no
    common vertex (parallel unbounded edges); such a set has no smallest face.
    """
    s = frozenset(s)
    if not s:
        return frozenset()
    result = p.closure(s)
    if not any(p.is_vertex(g) for g in result):
        return None
    return result


def recession_cone(p: VPolyhedron) -> Cone:
    return Cone(p.ambient_dim, p.rays)


def quotient_map(sigma: Cone) -> list[Vector]:
    """Rows of a linear map whose kernel is the span of ``sigma``."""
    if not sigma.rays:
        return [tuple(Fraction(int(i == j)) for j in range(sigma.ambient_dim))
                for i in range(sigma.ambient_dim)]
    return [tuple(r) for r in kernel_basis(list(sigma.rays), sigma.ambient_dim).entries]


def apply_map(rows: Sequence[Vector], x: Sequence[Fraction]) -> Vector:
    return tuple(dot(r, x) for r in rows)


def face_of_tail(p: VPolyhedron, sigma: Cone) -> frozenset:
    """Indices into ``p.rays`` of a face ``sigma`` of ``tail(p)``; raises otherwise."""
    index = {r: i for i, r in enumerate(p.rays)}
    try:
        ids = frozenset(index[r] for r in sigma.rays)
    except KeyError:
        raise NotAFaceOfTail("sigma has a ray that is not a ray of the polyhedron") from None
    if not recession_cone(p).is_face(ids):
        raise NotAFaceOfTail("sigma is not a face of the recession cone")
    return ids


def project_along(p: VPolyhedron, sigma: Cone) -> VPolyhedron:
    """Image of ``p`` in the quotient by ``span(sigma)``, in fixed quotient coordinates."""
    face_of_tail(p, sigma)
    m = quotient_map(sigma)
    return VPolyhedron.from_generators(
        len(m), (apply_map(m, v) for v in p.vertices), (apply_map(m, r) for r in p.rays))


def h_to_v(h: HPolyhedron) -> VPolyhedron:
    """Vertices and extreme rays of an H-polyhedron, by brute force over active sets."""
    n = h.ambient_dim
    width = n + 1
    # homogenized cone {(t, x) : <a,x> - b t >= 0, <c,x> - d t = 0, t >= 0}
    ineqs = [(-b,) + a for a, b in h.inequalities] + [(Fraction(1),) + (Fraction(0),) * n]
    eqs = [(-d,) + c for c, d in h.equations]
    lineality = [(Fraction(0),) + a for a, _ in h.inequalities] + [(Fraction(0),) + c for c, _ in h.equations]
    lineality.append((Fraction(1),) + (Fraction(0),) * n)
    if rank(lineality) < width:
        raise LinealityDetected("the polyhedron contains a line")
    eq_rank = rank(eqs) if eqs else 0
    if eq_rank == width:
        raise EmptyPolyhedron("equations force t = 0")
    need = width - 1 - eq_rank
    vertices: list[Vector] = []
    rays: list[Vector] = []
    for combo in combinations(range(len(ineqs)), need):
        rows = eqs + [ineqs[i] for i in combo]
        if rank(rows) != width - 1:
            continue
        direction = kernel_basis(rows, width).entries[0]
        for cand in (direction, _neg(direction)):
            if all(dot(a, cand) >= 0 for a in ineqs):
                break
        else:
            continue
        if cand[0] != 0:
            point = tuple(x / cand[0] for x in cand[1:])
            if point not in vertices:
                vertices.append(point)
        else:
            r = primitive(cand[1:])
            if r not in rays:
                rays.append(r)
    if not vertices:
        raise EmptyPolyhedron("no feasible point")
    vertices.sort()
    rays.sort()
    return VPolyhedron(n, tuple(vertices), tuple(rays))


def intersection(p: VPolyhedron, q: VPolyhedron) -> VPolyhedron | None:
    try:
        return h_to_v(p.hrep().intersect(q.hrep()))
    except EmptyPolyhedron:
        return None


def is_face_of(sub: VPolyhedron, p: VPolyhedron) -> bool:
    """Whether ``sub`` (assumed contained in ``p``) is a face of ``p``.

    The smallest face of ``p`` containing ``sub`` is cut out by the facets
    tight at a relative interior point of ``sub``; ``sub`` is a face exactly
    when that face is no larger than ``sub``.
    """
    point = (Fraction(1),) + sub.relative_interior_point()
    gens = frozenset(range(p.n_generators))
    for normal, tight in p._proper_facets:
        if dot(normal, point) == 0:
            gens &= tight
    nv = p.n_vertices
    return all(sub.contains(p.vertices[g]) if g < nv else sub.contains_direction(p.rays[g - nv])
               for g in gens)


def cone_intersection_is_common_face(c1: Cone, c2: Cone) -> bool:
    if c1.ambient_dim != c2.ambient_dim:
        raise ValueError("cones live in different spaces")
    meet = h_to_v(c1.polyhedron.hrep().intersect(c2.polyhedron.hrep()))
    return is_face_of(meet, c1.polyhedron) and is_face_of(meet, c2.polyhedron)
