"""
Polyhedral complexes sharing one point table.

Points follow the homogeneous convention: a point is either a vertex or a
far point (ray direction).  Ray directions are stored primitive and are
deduplicated globally, so parallel rays of different cells share an index.
Only maximal cells are stored; every face is recomputed from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

from .closure import HasseDiagram, build_hasse
from .errors import InvalidComplex, PointednessViolation, TropCompactError
from .linalg import primitive, rank
from .polyhedron import Cone, Vector, VPolyhedron, as_vector, cone_intersection_is_common_face, intersection, is_face_of


class Point(NamedTuple):
    is_far: bool
    coords: Vector


@dataclass(frozen=True)
class ComplexFace:
    generators: frozenset
    dim: int
    tail_dim: int

    def sort_key(self) -> tuple:
        return (self.dim, sorted(self.generators))


@dataclass
class ValidationReport:
    violations: list[tuple[str, tuple[int, ...], str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, cells: Sequence[int], message: str) -> None:
        self.violations.append((kind, tuple(cells), message))

    def lines(self) -> list[str]:
        if self.ok:
            return ["valid"]
        return [f"{kind} cells={list(cells)}: {msg}" for kind, cells, msg in self.violations]


@dataclass(frozen=True)
class PolyhedralComplex:
    ambient_dim: int
    points: tuple[Point, ...]
    maximal_cells: tuple[frozenset, ...]

    def __post_init__(self):
        points = []
        for p in self.points:
            is_far, coords = bool(p[0]), as_vector(p[1])
            if len(coords) != self.ambient_dim:
                raise InvalidComplex(f"point {coords} does not have dimension {self.ambient_dim}")
            if is_far:
                if not any(coords):
                    raise InvalidComplex("zero ray direction")
                coords = primitive(coords)
            points.append(Point(is_far, coords))
        if len(set(points)) != len(points):
            raise InvalidComplex("point table contains duplicates (after ray normalization)")
        cells = tuple(frozenset(int(i) for i in c) for c in self.maximal_cells)
        for c in cells:
            if not c:
                raise InvalidComplex("empty cell")
            if not all(0 <= i < len(points) for i in c):
                raise InvalidComplex(f"cell {sorted(c)} references a missing point")
            if all(points[i].is_far for i in c):
                raise PointednessViolation(f"cell {sorted(c)} has no vertex")
        object.__setattr__(self, "points", tuple(points))
        object.__setattr__(self, "maximal_cells", cells)

    @classmethod
    def from_homogeneous(cls, rows: Iterable[Sequence], cells: Iterable[Iterable[int]]) -> PolyhedralComplex:
        """Build from rows ``[w, x1, ..., xn]`` with ``w = 1`` for vertices and ``0`` for rays."""
        rows = [as_vector(r) for r in rows]
        if not rows:
            raise InvalidComplex("no points")
        points = []
        for r in rows:
            if r[0] not in (0, 1):
                raise InvalidComplex(f"leading coordinate must be 0 or 1, got {r[0]}")
            points.append(Point(r[0] == 0, r[1:]))
        return cls(len(rows[0]) - 1, tuple(points), tuple(frozenset(c) for c in cells))

    # -- points ---------------------------------------------------------------

    def is_far(self, i: int) -> bool:
        return self.points[i].is_far

    def near(self, gens: Iterable[int]) -> frozenset:
        return frozenset(i for i in gens if not self.points[i].is_far)

    def far(self, gens: Iterable[int]) -> frozenset:
        return frozenset(i for i in gens if self.points[i].is_far)

    def homogeneous(self, i: int) -> Vector:
        p = self.points[i]
        return (Fraction(0 if p.is_far else 1),) + p.coords

    def face_dims(self, gens: Iterable[int]) -> tuple[int, int]:
        gens = sorted(gens)
        d = rank([self.homogeneous(i) for i in gens]) - 1
        rays = [self.points[i].coords for i in gens if self.points[i].is_far]
        return d, (rank(rays) if rays else 0)

    def tail_cone(self, gens: Iterable[int]) -> Cone:
        return Cone(self.ambient_dim, tuple(self.points[i].coords for i in sorted(self.far(gens))))

    # -- cells ----------------------------------------------------------------

    def generator_polyhedron(self, gens: Iterable[int]) -> tuple[VPolyhedron, tuple[int, ...]]:
        """The polyhedron spanned by global points ``gens`` and its local-to-global index map."""
        gens = sorted(gens)
        verts = [i for i in gens if not self.points[i].is_far]
        rays = [i for i in gens if self.points[i].is_far]
        p = VPolyhedron(self.ambient_dim, tuple(self.points[i].coords for i in verts),
                        tuple(self.points[i].coords for i in rays))
        return p, tuple(verts + rays)

    @cached_property
    def _cells(self) -> tuple[tuple[VPolyhedron, tuple[int, ...]], ...]:
        return tuple(self.generator_polyhedron(c) for c in self.maximal_cells)

    def cell_polyhedron(self, i: int) -> VPolyhedron:
        return self._cells[i][0]

    @cached_property
    def _cell_incidences(self) -> tuple[tuple[frozenset, ...], ...]:
        out = []
        for p, local in self._cells:
            out.append(tuple(frozenset(local[g] for g in t) for t in p.facet_incidences()))
        return tuple(out)

    def cell_closure(self, i: int, gens: frozenset) -> frozenset:
        result = self.maximal_cells[i]
        for tight in self._cell_incidences[i]:
            if gens <= tight:
                result = result & tight
        return result

    def minfacevert(self, gens: Iterable[int]) -> frozenset | None:
        """Generators of the smallest face of the complex containing ``gens``, or None."""
        gens = frozenset(gens)
        if not gens:
            return frozenset()
        candidates = []
        for i, cell in enumerate(self.maximal_cells):
            if gens <= cell:
                cand = self.cell_closure(i, gens)
                if self.near(cand):
                    candidates.append(cand)
        if not candidates:
            return None
        best = min(candidates, key=len)
        # rays alone may lie in several incomparable faces
        return best if all(best <= c for c in candidates) else None

    def subcomplex(self, cells: Iterable[int]) -> PolyhedralComplex:
        """The complex generated by some maximal cells, on the same point table."""
        chosen = tuple(self.maximal_cells[i] for i in cells)
        return PolyhedralComplex(self.ambient_dim, self.points, chosen)

    # -- faces ----------------------------------------------------------------

    @cached_property
    def _faces(self) -> tuple[ComplexFace, ...]:
        found: dict[frozenset, ComplexFace] = {}
        for p, local in self._cells:
            for face in p.face_lattice().faces:
                if not face:
                    continue
                gens = frozenset(local[g] for g in face)
                if gens not in found:
                    d, t = p.generator_dim(face)
                    found[gens] = ComplexFace(gens, d, t)
        return tuple(sorted(found.values(), key=ComplexFace.sort_key))

    def face_set(self) -> list[ComplexFace]:
        return list(self._faces)

    @cached_property
    def face_index(self) -> dict[frozenset, ComplexFace]:
        return {f.generators: f for f in self._faces}

    @property
    def dim(self) -> int:
        return max(f.dim for f in self._faces)

    def f_vector(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for f in self._faces:
            counts[f.dim] += 1
        return counts

    def hasse_diagram(self) -> HasseDiagram:
        """Face poset of the complex (bottom = empty face, artificial top)."""
        faces = [frozenset()] + [f.generators for f in self._faces]
        covers: dict[frozenset, set] = {f: set() for f in faces}
        by_dim: dict[int, list[frozenset]] = {}
        for f in self._faces:
            by_dim.setdefault(f.dim, []).append(f.generators)
        for f in by_dim.get(0, []):
            covers[frozenset()].add(f)
        for f in self._faces:
            for g in by_dim.get(f.dim + 1, []):
                if f.generators < g:
                    covers[f.generators].add(g)
        return build_hasse(faces, covers, append_top=True)

    # -- checks ---------------------------------------------------------------

    def validate(self) -> ValidationReport:
        return validate(self)

    @cached_property
    def _recession_fan(self) -> tuple[frozenset, ...] | None:
        tails = sorted({self.far(f.generators) for f in self._faces}, key=lambda t: (len(t), sorted(t)))
        cones = {t: self.tail_cone(t) for t in tails}
        for a, b in combinations(tails, 2):
            if not a or not b:
                continue
            if not cone_intersection_is_common_face(cones[a], cones[b]):
                return None
        return tuple(tails)

    def recession_fan(self) -> list[frozenset] | None:
        """Cones of ``tail(PC)`` as sets of ray indices, or None if the tails are not a fan."""
        fan = self._recession_fan
        return None if fan is None else list(fan)

    def has_recession_fan(self) -> bool:
        return self._recession_fan is not None


def validate(pc: PolyhedralComplex) -> ValidationReport:
    """Check that every cell is a pointed, irredundantly generated polyhedron and that
    any two maximal cells meet in a common face."""
    report = ValidationReport()
    polys: dict[int, VPolyhedron] = {}
    for i, cell in enumerate(pc.maximal_cells):
        try:
            p, local = pc.generator_polyhedron(cell)
        except TropCompactError as exc:
            report.add(type(exc).__name__, (i,), str(exc))
            continue
        reduced = p.irredundant()
        if reduced.n_generators != p.n_generators:
            report.add("RedundantGenerator", (i,), "cell has generators that are not extreme")
            continue
        polys[i] = p
    for i, j in combinations(sorted(polys), 2):
        p, q = polys[i], polys[j]
        meet = intersection(p, q)
        if meet is None:
            continue
        if not is_face_of(meet, p) or not is_face_of(meet, q):
            report.add("ImproperIntersection", (i, j), "intersection is not a face of both cells")
    return report


def has_recession_fan(pc: PolyhedralComplex) -> bool:
    return pc.has_recession_fan()


def face_set(pc: PolyhedralComplex) -> list[ComplexFace]:
    return pc.face_set()
