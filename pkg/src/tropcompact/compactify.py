"""
Canonical compactification of a polyhedral complex with respect to its
recession fan.

The ground set is the set of compactification vertices: faces ``F`` of the
complex with ``dim F == dim tail(F)``.  A set ``S`` of them is closed when

    S == {a : sed(S) <= R(a) <= minfacevert(R(S))}

where ``R`` is the realisation (generator set of the parent face), ``sed(S)``
intersects the sedentarities and ``minfacevert`` is the smallest face of the
complex containing all generators.  Sets lying in no common face close to the
whole ground set, which becomes an artificial top.  Next-closure enumeration
of this operator yields the face poset of the compactification.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .closure import ClosureOperator, HasseDiagram, build_hasse, enumerate_closure_system
from .complex import ComplexFace, PolyhedralComplex
from .errors import ConeNotInFan, ModeMismatch, NoRecessionFan
from .polyhedron import Cone, project_along

TORIC = "toric"
CHART = "chart"


@dataclass(frozen=True)
class CompVertex:
    id: int
    realisation: frozenset
    nu: frozenset
    sedentarity: frozenset
    parent_face: ComplexFace


def compactification_vertices(pc: PolyhedralComplex) -> list[CompVertex]:
    """One vertex per face with ``dim == tail_dim``, ordered by sorted realisation."""
    faces = sorted((f for f in pc.face_set() if f.dim == f.tail_dim), key=lambda f: sorted(f.generators))
    return [CompVertex(i, f.generators, pc.near(f.generators), pc.far(f.generators), f)
            for i, f in enumerate(faces)]


def _realisation(vertices: list[CompVertex], s: Iterable[int]) -> frozenset:
    out: frozenset = frozenset()
    for a in s:
        out |= vertices[a].realisation
    return out


def _sedentarity(vertices: list[CompVertex], s: Iterable[int]) -> frozenset:
    seds = [vertices[a].sedentarity for a in s]
    return frozenset.intersection(*seds) if seds else frozenset()


def closure(pc: PolyhedralComplex, vertices: list[CompVertex], s: Iterable[int]) -> frozenset:
    s = frozenset(s)
    if not s:
        return s
    bound = pc.minfacevert(_realisation(vertices, s))
    if bound is None:
        return frozenset(range(len(vertices)))
    sed = _sedentarity(vertices, s)
    return frozenset(a.id for a in vertices if sed <= a.realisation <= bound)


def closure_operator(pc: PolyhedralComplex, vertices: list[CompVertex] | None = None) -> ClosureOperator:
    if vertices is None:
        vertices = compactification_vertices(pc)
    return ClosureOperator(len(vertices), lambda s: closure(pc, vertices, s))


@dataclass
class DecoratedHasse:
    mode: str
    hasse: HasseDiagram
    vertices: list[CompVertex]
    pc: PolyhedralComplex

    def __len__(self) -> int:
        return len(self.hasse)

    def vertex_set(self, node: int) -> frozenset | None:
        return self.hasse.faces[node]

    def is_top(self, node: int) -> bool:
        return self.hasse.faces[node] is None

    def rank(self, node: int) -> int:
        return self.hasse.ranks[node]

    def realisation(self, node: int) -> frozenset | None:
        s = self.hasse.faces[node]
        return None if s is None else _realisation(self.vertices, s)

    def sedentarity(self, node: int) -> frozenset | None:
        s = self.hasse.faces[node]
        return None if s is None else _sedentarity(self.vertices, s)

    def decoration(self, node: int) -> tuple:
        """``(vertex set, rank, realisation, sedentarity)`` with ``None`` sets for the top."""
        return (self.vertex_set(node), self.rank(node), self.realisation(node), self.sedentarity(node))

    def f_vector(self) -> list[int]:
        """Node counts by rank, from rank 1 up to the rank below the top."""
        top_rank = self.hasse.ranks[self.hasse.top]
        return [len(self.hasse.nodes_of_rank(r)) for r in range(1, top_rank)]

    def _proper(self, node: int) -> frozenset:
        s = self.hasse.faces[node]
        if s is None or not s:
            raise ValueError("bottom and top carry no geometric decoration")
        return s

    def trunk(self, node: int) -> Cone:
        self._proper(node)
        return self.pc.tail_cone(self.sedentarity(node))

    def parent(self, node: int) -> ComplexFace:
        """Smallest face of the complex containing the realisation (by scanning all faces)."""
        real = _realisation(self.vertices, self._proper(node))
        containing = [f for f in self.pc.face_set() if real <= f.generators]
        return min(containing, key=lambda f: len(f.generators))

    def dimension(self, node: int) -> int:
        return self.rank(node) - 1

    def support(self, node: int) -> list[frozenset]:
        """Fan cones ``sigma`` with ``trunk <= sigma <= tail(parent)``, as ray-index sets."""
        if self.mode != TORIC:
            raise ModeMismatch("support is defined through the recession fan (toric mode only)")
        sed = self.sedentarity(node)
        rays = self.pc.far(self.parent(node).generators)
        return [sigma for sigma in self.pc.recession_fan() if sed <= sigma <= rays]

    def stratum(self, sigma) -> PolyhedralComplex:
        return stratum(self, self.pc, sigma)


def _enumerate_toric(pc: PolyhedralComplex, vertices: list[CompVertex]) -> HasseDiagram:
    op = closure_operator(pc, vertices)
    raw = enumerate_closure_system(op)
    ground = frozenset(range(len(vertices)))
    faces = list(raw.faces)
    covers = {f: {faces[j] for j in raw.up(i)} for i, f in enumerate(faces)}
    if pc.minfacevert(_realisation(vertices, ground)) is None:
        faces.remove(ground)
        del covers[ground]
        for ups in covers.values():
            ups.discard(ground)
    return build_hasse(faces, covers, append_top=True)


def _enumerate_chart(pc: PolyhedralComplex, vertices: list[CompVertex]) -> HasseDiagram:
    index = {a.realisation: a.id for a in vertices}
    covers: dict[frozenset, set] = {}
    for i in range(len(pc.maximal_cells)):
        cell = pc.subcomplex([i])
        local = compactification_vertices(cell)
        to_global = [index[a.realisation] for a in local]
        h = enumerate_closure_system(closure_operator(cell, local))
        glob = [frozenset(to_global[a] for a in f) for f in h.faces]
        for j, f in enumerate(glob):
            covers.setdefault(f, set()).update(glob[k] for k in h.up(j))
    return build_hasse(list(covers), covers, append_top=True)


def compactify(pc: PolyhedralComplex, mode: str = "auto") -> DecoratedHasse:
    """Decorated face poset of the canonical compactification.

    ``mode`` is ``"toric"`` (requires a recession fan), ``"chart"`` (compactify
    every maximal cell on its own and glue along shared faces) or ``"auto"``,
    which picks toric mode whenever the recession fan exists.
    """
    if mode == "auto":
        mode = TORIC if pc.has_recession_fan() else CHART
    if mode not in (TORIC, CHART):
        raise ValueError(f"unknown mode {mode!r}")
    vertices = compactification_vertices(pc)
    if mode == TORIC:
        if not pc.has_recession_fan():
            raise NoRecessionFan("the recession cones of the faces do not form a fan")
        hasse = _enumerate_toric(pc, vertices)
    else:
        hasse = _enumerate_chart(pc, vertices)
    return DecoratedHasse(mode, hasse, vertices, pc)


def _fan_cone_ids(pc: PolyhedralComplex, sigma) -> frozenset:
    if isinstance(sigma, Cone):
        lookup = {p.coords: i for i, p in enumerate(pc.points) if p.is_far}
        try:
            ids = frozenset(lookup[r] for r in sigma.rays)
        except KeyError:
            raise ConeNotInFan("sigma has a ray that is not a ray of the complex") from None
    else:
        ids = frozenset(sigma)
    fan = pc.recession_fan()
    if fan is None:
        raise NoRecessionFan("strata are indexed by cones of the recession fan")
    if ids not in fan:
        raise ConeNotInFan(f"rays {sorted(ids)} do not span a cone of the recession fan")
    return ids


def stratum(d: DecoratedHasse | None, pc: PolyhedralComplex, sigma) -> PolyhedralComplex:
    """The part of the compactification inside the stratum of ``sigma``.

    Every maximal cell whose tail contains ``sigma`` is projected along it;
    the images are assembled on a fresh point table in quotient coordinates.
    ``sigma`` is a :class:`Cone` or a set of ray indices of ``pc``.
    """
    if d is not None and d.mode != TORIC:
        raise ModeMismatch("strata are defined in toric mode only")
    ids = _fan_cone_ids(pc, sigma)
    cone = pc.tail_cone(ids)
    points: list[tuple[bool, tuple]] = []
    where: dict[tuple[bool, tuple], int] = {}

    def point_id(key):
        if key not in where:
            where[key] = len(points)
            points.append(key)
        return where[key]

    cells = []
    for cell in pc.maximal_cells:
        if not ids <= pc.far(cell):
            continue
        image = project_along(pc.generator_polyhedron(cell)[0], cone)
        gens = frozenset([point_id((False, v)) for v in image.vertices]
                         + [point_id((True, r)) for r in image.rays])
        cells.append(gens)
    maximal = []
    for c in sorted(set(cells), key=lambda c: (-len(c), sorted(c))):
        if not any(c <= m for m in maximal):
            maximal.append(c)
    dim = len(points[0][1])
    return PolyhedralComplex(dim, tuple(points), tuple(sorted(maximal, key=sorted)))
