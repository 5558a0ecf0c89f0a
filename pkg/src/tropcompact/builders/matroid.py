"""
Matroids given by their bases, their lattices of flats, and Bergman fans.

Bergman fans live in ``R^n / R(1,...,1)``, coordinatized by sending ``e_i``
to the standard basis vector ``u_i`` of ``R^(n-1)`` for ``i < n - 1`` and
``e_(n-1)`` to ``-(u_0 + ... + u_(n-2))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable

from ..closure import ClosureOperator, enumerate_closure_system
from ..complex import PolyhedralComplex
from ..errors import InvalidMatroid, MatroidNotConnected, MatroidNotLoopless


@dataclass(frozen=True)
class Matroid:
    ground_size: int
    bases: tuple[frozenset, ...]

    def __post_init__(self):
        bases = tuple(sorted({frozenset(b) for b in self.bases}, key=sorted))
        if not bases:
            raise InvalidMatroid("a matroid needs at least one basis")
        if len({len(b) for b in bases}) != 1:
            raise InvalidMatroid("bases have different sizes")
        if any(not 0 <= e < self.ground_size for b in bases for e in b):
            raise InvalidMatroid("basis element outside the ground set")
        known = set(bases)
        for b1 in bases:
            for b2 in bases:
                for x in b1 - b2:
                    if not any((b1 - {x}) | {y} in known for y in b2 - b1):
                        raise InvalidMatroid(f"basis exchange fails for {sorted(b1)}, {sorted(b2)}")
        object.__setattr__(self, "bases", bases)

    @classmethod
    def from_graph(cls, edges: Iterable[tuple[int, int]]) -> Matroid:
        """Graphic matroid: bases are the spanning forests."""
        edges = [tuple(e) for e in edges]
        nodes = sorted({v for e in edges for v in e})

        def forest(subset) -> bool:
            parent = {v: v for v in nodes}

            def find(v):
                while parent[v] != v:
                    parent[v] = parent[parent[v]]
                    v = parent[v]
                return v

            for i in subset:
                a, b = find(edges[i][0]), find(edges[i][1])
                if a == b:
                    return False
                parent[a] = b
            return True

        for r in range(len(nodes), -1, -1):
            bases = [frozenset(c) for c in combinations(range(len(edges)), r) if forest(c)]
            if bases:
                return cls(len(edges), tuple(bases))
        raise InvalidMatroid("empty graph")

    @classmethod
    def uniform(cls, r: int, n: int) -> Matroid:
        return cls(n, tuple(frozenset(c) for c in combinations(range(n), r)))

    @property
    def rank(self) -> int:
        return len(self.bases[0])

    def rank_of(self, s: Iterable[int]) -> int:
        s = frozenset(s)
        return max(len(b & s) for b in self.bases)

    def closure(self, s: frozenset) -> frozenset:
        r = self.rank_of(s)
        return frozenset(e for e in range(self.ground_size) if e in s or self.rank_of(s | {e}) == r)

    def loops(self) -> frozenset:
        return frozenset(range(self.ground_size)) - frozenset().union(*self.bases)

    def is_connected(self) -> bool:
        n, r = self.ground_size, self.rank
        for k in range(1, n // 2 + 1):
            for c in combinations(range(n), k):
                s = frozenset(c)
                if self.rank_of(s) + self.rank_of(frozenset(range(n)) - s) == r:
                    return False
        return True

    @cached_property
    def _flats(self) -> tuple[tuple[frozenset, int], ...]:
        h = enumerate_closure_system(ClosureOperator(self.ground_size, self.closure))
        found = [(f, self.rank_of(f)) for f in h.faces]
        return tuple(sorted(found, key=lambda fr: (fr[1], sorted(fr[0]))))


def flats(m: Matroid) -> list[tuple[frozenset, int]]:
    """All flats with their rank, ordered by (rank, sorted elements)."""
    return list(m._flats)


def _check_fan_input(m: Matroid) -> None:
    if m.loops():
        raise MatroidNotLoopless(f"elements {sorted(m.loops())} are loops")
    if not m.is_connected():
        raise MatroidNotConnected("the Bergman fan of a disconnected matroid has extra lineality")


def flat_vector(n: int, flat: Iterable[int]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * (n - 1)
    for i in flat:
        if i < n - 1:
            v[i] += 1
        else:
            v = [x - 1 for x in v]
    return tuple(v)


def proper_flats(m: Matroid) -> list[frozenset]:
    return [f for f, r in flats(m) if 0 < r < m.rank]


def maximal_chains(m: Matroid) -> list[tuple[frozenset, ...]]:
    """Maximal chains of proper nonempty flats, each listed bottom-up."""
    proper = proper_flats(m)
    rank = {f: m.rank_of(f) for f in proper}
    chains: list[tuple[frozenset, ...]] = []

    def extend(chain):
        last = chain[-1]
        ups = [f for f in proper if rank[f] == rank[last] + 1 and last < f]
        if not ups:
            chains.append(tuple(chain))
        for f in ups:
            extend(chain + [f])

    for f in proper:
        if rank[f] == 1:
            extend([f])
    return chains


def _fan(n: int, rays: list[frozenset], cells: Iterable[Iterable[frozenset]]) -> PolyhedralComplex:
    pos = {f: i + 1 for i, f in enumerate(rays)}
    points = [[1] + [0] * (n - 1)] + [[0] + list(flat_vector(n, f)) for f in rays]
    cells = [[0] + sorted(pos[f] for f in c) for c in cells]
    return PolyhedralComplex.from_homogeneous(points, cells or [[0]])


def bergman_fine(m: Matroid) -> PolyhedralComplex:
    """Bergman fan with one cone per maximal chain of proper flats (order complex)."""
    _check_fan_input(m)
    return _fan(m.ground_size, proper_flats(m), maximal_chains(m))


K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def k4_matroid() -> Matroid:
    return Matroid.from_graph(K4_EDGES)


def bergman_k4_coarse_fixture() -> PolyhedralComplex:
    """Coarsest fan structure on the Bergman fan of the graphic matroid of K4.

    Rays are the six edge flats and the four triangle flats.  Each matching
    flat ``{a, b}`` has ray ``e_a + e_b``, so the two fine cones through it
    merge into ``cone(e_a, e_b)``.
    """
    m = k4_matroid()
    rank2 = [f for f, r in flats(m) if r == 2]
    triangles = [f for f in rank2 if len(f) == 3]
    matchings = [f for f in rank2 if len(f) == 2]
    edges = [frozenset([i]) for i in range(6)]
    cells = [(e, t) for t in triangles for e in edges if e < t]
    cells += [tuple(frozenset([i]) for i in sorted(mt)) for mt in matchings]
    return _fan(6, edges + triangles, cells)
