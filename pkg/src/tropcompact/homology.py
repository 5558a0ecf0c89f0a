"""
Cellular chain complexes of Hasse diagrams with cosheaf coefficients.

Chains live on the proper nodes: ``C_k`` is the sum of the stalks on the
rank ``k + 1`` nodes.  The block of ``d_k`` for a covering edge ``v < u`` is
``sign(v, u) * restriction(v, u)``.  Betti numbers are taken over GF(2) or Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .closure import HasseDiagram
from .errors import NotAComplex, ShapeMismatch
from .linalg import GF2Matrix, QMatrix, gf2_rank, rank
from .orientation import SignMap

FIELDS = ("gf2", "q")


@dataclass
class Cosheaf:
    stalk_dim: dict[int, int]
    restriction: dict[tuple[int, int], QMatrix] = field(default_factory=dict)

    def check(self, h: HasseDiagram) -> None:
        for (lo, hi), m in self.restriction.items():
            want = (self.stalk_dim.get(lo, 0), self.stalk_dim.get(hi, 0))
            if m.shape != want:
                raise ShapeMismatch(f"restriction on ({lo}, {hi}) has shape {m.shape}, expected {want}")
        for lo, hi in h.edges:
            if lo in self.stalk_dim and hi in self.stalk_dim and (lo, hi) not in self.restriction:
                if self.stalk_dim[lo] and self.stalk_dim[hi]:
                    raise ShapeMismatch(f"missing restriction on edge ({lo}, {hi})")


def _chain_nodes(h: HasseDiagram) -> list[int]:
    return h.proper_nodes()


def constant_cosheaf(h: HasseDiagram) -> Cosheaf:
    nodes = set(_chain_nodes(h))
    one = QMatrix.identity(1)
    return Cosheaf({v: 1 for v in sorted(nodes)},
                   {(lo, hi): one for lo, hi in h.edges if lo in nodes and hi in nodes})


@dataclass
class ChainComplex:
    """``dims[k] = dim C_k``; ``boundaries[k]`` is the map ``C_k -> C_{k-1}`` (``k >= 1``).

    With ``cohomology`` set the maps are the transposes, going up in degree:
    ``boundaries[k]`` is then ``C_{k-1} -> C_k``.
    """

    dims: list[int]
    boundaries: dict[int, QMatrix]
    cohomology: bool = False

    def boundary(self, k: int) -> QMatrix:
        if k in self.boundaries:
            return self.boundaries[k]
        lo = self.dims[k - 1] if 0 <= k - 1 < len(self.dims) else 0
        hi = self.dims[k] if 0 <= k < len(self.dims) else 0
        return QMatrix.zeros(hi, lo) if self.cohomology else QMatrix.zeros(lo, hi)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * d for k, d in enumerate(self.dims))


def build_chain(h: HasseDiagram, s: SignMap, c: Cosheaf, *, cohomology: bool = False) -> ChainComplex:
    c.check(h)
    nodes = _chain_nodes(h)
    top_rank = max((h.ranks[v] for v in nodes), default=0)
    offsets: dict[int, int] = {}
    dims = []
    for r in range(1, top_rank + 1):
        total = 0
        for v in sorted(v for v in nodes if h.ranks[v] == r):
            offsets[v] = total
            total += c.stalk_dim.get(v, 0)
        dims.append(total)
    entries = {k: [[Fraction(0)] * dims[k] for _ in range(dims[k - 1])] for k in range(1, len(dims))}
    for lo, hi in h.edges:
        if lo not in offsets or hi not in offsets:
            continue
        k = h.ranks[hi] - 1
        if h.ranks[lo] != k:
            raise ShapeMismatch(f"edge ({lo}, {hi}) skips a rank")
        m = c.restriction.get((lo, hi))
        if m is None:
            continue
        sg = s[(lo, hi)]
        rows = entries[k]
        for i in range(m.rows):
            for j in range(m.cols):
                rows[offsets[lo] + i][offsets[hi] + j] += sg * m[i, j]
    boundaries = {k: QMatrix.from_rows(rows, dims[k]) for k, rows in entries.items()}
    if cohomology:
        boundaries = {k: m.transpose() for k, m in boundaries.items()}
    return ChainComplex(dims, boundaries, cohomology)


def _rank(m: QMatrix, field_: str) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    if field_ == "q":
        return rank(m)
    return gf2_rank(GF2Matrix.from_qmatrix(m))


def _composition_vanishes(a: QMatrix, b: QMatrix, field_: str) -> bool:
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return True
    prod = a @ b
    if field_ == "q":
        return prod.is_zero()
    return not any(GF2Matrix.from_qmatrix(prod).bits)


def betti(cc: ChainComplex, field: str = "gf2") -> list[int]:
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}")
    n = len(cc.dims)
    for k in range(1, n - 1):
        first, second = cc.boundary(k), cc.boundary(k + 1)
        pair = (second, first) if cc.cohomology else (first, second)
        if not _composition_vanishes(*pair, field):
            raise NotAComplex(f"boundary maps in degrees {k} and {k + 1} do not compose to zero")
    ranks = [0] + [_rank(cc.boundary(k), field) for k in range(1, n)] + [0]
    return [cc.dims[k] - ranks[k] - ranks[k + 1] for k in range(n)]
