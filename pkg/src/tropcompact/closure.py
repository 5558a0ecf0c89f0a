"""
Next-closure enumeration of closure systems and the resulting Hasse diagrams.

A closure system on ``{0, ..., n-1}`` is enumerated in lectic order
(Ganter's next-closure).  Upper covers of a closed set ``C`` are the
inclusion-minimal sets among ``cl(C | {g})`` for ``g`` outside ``C``, so the
work is linear in the number of covering edges times the cost of one closure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, FrozenSet, Iterator

from .errors import ClosureAxiomViolation

IndexSet = FrozenSet[int]


@dataclass
class ClosureOperator:
    ground_size: int
    cl: Callable[[IndexSet], IndexSet]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, subset) -> IndexSet:
        key = frozenset(subset)
        try:
            return self._cache[key]
        except KeyError:
            pass
        result = frozenset(self.cl(key))
        self._cache[key] = result
        return result


@dataclass
class HasseDiagram:
    """Covering graph of a finite poset of index sets.

    ``faces[i]`` is the index set of node ``i``; an artificial top node has
    face ``None``.  Nodes are ordered by ``(rank, sorted face)`` with the
    artificial top last.
    """

    faces: list
    ranks: list[int]
    edges: list[tuple[int, int]]
    bottom: int = 0
    top: int | None = None

    def __post_init__(self):
        self._up: list[list[int]] = [[] for _ in self.faces]
        self._down: list[list[int]] = [[] for _ in self.faces]
        for lo, hi in self.edges:
            self._up[lo].append(hi)
            self._down[hi].append(lo)
        for lst in self._up + self._down:
            lst.sort()

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def has_artificial_top(self) -> bool:
        return self.top is not None and self.faces[self.top] is None

    def up(self, node: int) -> list[int]:
        return self._up[node]

    def down(self, node: int) -> list[int]:
        return self._down[node]

    def nodes_of_rank(self, r: int) -> list[int]:
        return [i for i, k in enumerate(self.ranks) if k == r]

    def proper_nodes(self) -> list[int]:
        """All nodes except the bottom and an artificial top."""
        return [i for i in range(len(self.faces)) if i != self.bottom and self.faces[i] is not None]

    def max_rank(self) -> int:
        return max(self.ranks)

    def is_graded(self) -> bool:
        return all(self.ranks[hi] == self.ranks[lo] + 1 for lo, hi in self.edges)

    def index(self) -> dict:
        """Map from face to node id (the artificial top is keyed by ``None``)."""
        return {f: i for i, f in enumerate(self.faces)}


def _sort_key(face) -> tuple:
    return tuple(sorted(face))


def build_hasse(faces, covers, *, append_top: bool = False, top_face=None) -> HasseDiagram:
    """Order nodes, compute ranks as longest chains from the bottom, renumber edges.

    ``covers`` maps each face to the set of its upper covers.  The bottom must
    be the unique minimal face.  With ``append_top`` an artificial node
    (face ``None``) is placed above every maximal face.
    """
    faces = list(faces)
    rank: dict = {}
    lower: dict = {f: [] for f in faces}
    for f in faces:
        for g in covers.get(f, ()):
            lower[g].append(f)
    for f in sorted(faces, key=len):
        rank[f] = max((rank[g] + 1 for g in lower[f]), default=0)
    edges_by_face = [(f, g) for f in faces for g in covers.get(f, ())]
    if append_top:
        maximal = [f for f in faces if not covers.get(f)]
        rank[None] = max(rank[f] for f in maximal) + 1
        edges_by_face += [(f, None) for f in maximal]
    order = sorted(faces, key=lambda f: (rank[f], _sort_key(f)))
    if append_top:
        order.append(None)
    pos = {f: i for i, f in enumerate(order)}
    edges = sorted((pos[a], pos[b]) for a, b in edges_by_face)
    top = pos[None] if append_top else (pos[top_face] if top_face is not None else None)
    if top is None:
        maxima = [f for f in order if not covers.get(f)]
        if len(maxima) == 1:
            top = pos[maxima[0]]
    return HasseDiagram(order, [rank[f] for f in order], edges, bottom=0, top=top)


def next_closure(op: ClosureOperator, current: IndexSet) -> IndexSet | None:
    """The lectically next closed set after ``current``, or None if it is the last."""
    work = set(current)
    for i in range(op.ground_size - 1, -1, -1):
        if i in work:
            work.discard(i)
            continue
        candidate = op(work | {i})
        if not work < candidate or i not in candidate:
            # a non-extensive operator would make the lectic walk cycle
            raise ClosureAxiomViolation(f"cl({sorted(work | {i})}) = {sorted(candidate)} is not extensive")
        if all(j >= i for j in candidate if j not in work):
            return candidate
    return None


def iter_closed_sets(op: ClosureOperator) -> Iterator[IndexSet]:
    current = op(frozenset())
    while current is not None:
        yield current
        current = next_closure(op, current)


def _check_axioms(op: ClosureOperator, subset: IndexSet, closed: IndexSet) -> None:
    if not subset <= closed:
        raise ClosureAxiomViolation(f"cl({sorted(subset)}) = {sorted(closed)} is not extensive")
    if op(closed) != closed:
        raise ClosureAxiomViolation(f"cl is not idempotent on {sorted(subset)}")


def upper_covers(op: ClosureOperator, closed: IndexSet, *, check_axioms: bool = False) -> set:
    candidates = set()
    for g in range(op.ground_size):
        if g in closed:
            continue
        extended = closed | {g}
        c = op(extended)
        if check_axioms:
            _check_axioms(op, extended, c)
            if not closed <= c:
                raise ClosureAxiomViolation(f"cl is not monotone at {sorted(closed)} + {g}")
        candidates.add(c)
    return {c for c in candidates if not any(d < c for d in candidates)}


def enumerate_closure_system(op: ClosureOperator, *, append_top: bool = False,
                             check_axioms: bool = False) -> HasseDiagram:
    """Hasse diagram of all closed sets of ``op`` under inclusion.

    ``check_axioms`` verifies extensiveness, idempotency and monotonicity on
    every closure the enumeration evaluates and raises
    :class:`ClosureAxiomViolation` on the first failure.
    """
    closed_sets = list(iter_closed_sets(op))
    if check_axioms:
        empty = frozenset()
        _check_axioms(op, empty, op(empty))
    covers = {c: upper_covers(op, c, check_axioms=check_axioms) for c in closed_sets}
    known = set(closed_sets)
    for c, ups in covers.items():
        stray = ups - known
        if stray:
            raise ClosureAxiomViolation(f"closure of an extension of {sorted(c)} was never enumerated")
    return build_hasse(closed_sets, covers, append_top=append_top)


def brute_force_closed_sets(op: ClosureOperator) -> set:
    """All ``A`` with ``cl(A) == A``, by scanning every subset of the ground set."""
    n = op.ground_size
    found = set()
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            a = frozenset(combo)
            if op(a) == a:
                found.add(a)
    return found


def covering_pairs(sets) -> set:
    """Covering relation of a family of sets ordered by inclusion (quadratic oracle)."""
    sets = list(sets)
    pairs = set()
    for a in sets:
        for b in sets:
            if a < b and not any(a < c < b for c in sets):
                pairs.add((a, b))
    return pairs


def axiom_violations(op: ClosureOperator, subsets=None, *, rng: random.Random | None = None,
                     samples: int = 0) -> list[str]:
    """Check the three closure axioms; empty list means none violated.

    Without ``subsets`` every subset is checked when ``samples`` is 0,
    otherwise ``samples`` random subsets drawn from ``rng``.  Monotonicity is
    checked on one-element extensions, which implies it in general.
    """
    n = op.ground_size
    if subsets is None:
        if samples:
            rng = rng or random.Random(0)
            subsets = [frozenset(i for i in range(n) if rng.random() < rng.random()) for _ in range(samples)]
        else:
            subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    problems = []
    for a in subsets:
        c = op(a)
        if not a <= c:
            problems.append(f"not extensive at {sorted(a)}")
        if op(c) != c:
            problems.append(f"not idempotent at {sorted(a)}")
        for g in range(n):
            if g not in a and not c <= op(a | {g}):
                problems.append(f"not monotone at {sorted(a)} + {g}")
    return problems
