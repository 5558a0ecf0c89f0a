"""
Signed incidence relations on graded Hasse diagrams.

Every rank-1 node gets sign +1 towards the bottom.  Then, rank by rank, the
children of a node ``u`` are signed by walking the square graph: two children
``v, v'`` sharing a child ``w`` must satisfy
``sign(w,v) sign(v,u) + sign(w,v') sign(v',u) = 0``.  The smallest child is
seeded with +1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .closure import HasseDiagram
from .errors import DisconnectedSquareGraph, InconsistentSquares


@dataclass
class SignMap:
    sign: dict[tuple[int, int], int]

    def __getitem__(self, edge: tuple[int, int]) -> int:
        return self.sign[edge]

    def get(self, lo: int, hi: int, default: int = 0) -> int:
        return self.sign.get((lo, hi), default)

    def __len__(self) -> int:
        return len(self.sign)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(lo, hi, s) for (lo, hi), s in sorted(self.sign.items())]


def _signed_nodes(h: HasseDiagram) -> list[int]:
    return [i for i in range(len(h)) if h.faces[i] is not None]


def signed_incidence(h: HasseDiagram) -> SignMap:
    sign: dict[tuple[int, int], int] = {}
    for v in h.up(h.bottom):
        if h.faces[v] is not None:
            sign[(h.bottom, v)] = 1
    order = sorted((i for i in _signed_nodes(h) if h.ranks[i] >= 2), key=lambda i: (h.ranks[i], i))
    for u in order:
        children = h.down(u)
        neighbours: dict[int, list[tuple[int, int]]] = {v: [] for v in children}
        below = {v: set(h.down(v)) for v in children}
        for a, v in enumerate(children):
            for w2 in children[a + 1:]:
                for w in sorted(below[v] & below[w2]):
                    neighbours[v].append((w2, w))
                    neighbours[w2].append((v, w))
        seed = min(children)
        sign[(seed, u)] = 1
        queue = deque([seed])
        seen = {seed}
        while queue:
            v = queue.popleft()
            for v2, w in neighbours[v]:
                value = -sign[(w, v)] * sign[(v, u)] * sign[(w, v2)]
                known = sign.get((v2, u))
                if known is not None and known != value:
                    raise InconsistentSquares(f"conflicting signs on edge ({v2}, {u})")
                sign[(v2, u)] = value
                if v2 not in seen:
                    seen.add(v2)
                    queue.append(v2)
        if len(seen) != len(children):
            missing = sorted(set(children) - seen)
            raise DisconnectedSquareGraph(f"children {missing} of node {u} are not reachable through squares")
    return SignMap(sign)


def square_violations(h: HasseDiagram, s: SignMap) -> list[tuple[int, int, int]]:
    """Pairs ``(w, u)`` two ranks apart whose signed path sum is nonzero, with that sum.

    The artificial top and its edges are ignored.
    """
    bad = []
    for u in _signed_nodes(h):
        sums: dict[int, int] = {}
        for v in h.down(u):
            for w in h.down(v):
                sums[w] = sums.get(w, 0) + s.get(w, v) * s.get(v, u)
        bad.extend((w, u, total) for w, total in sorted(sums.items()) if total != 0)
    return bad
