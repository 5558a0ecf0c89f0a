"""
Exact linear algebra over the rationals and over GF(2).

Rationals are :class:`fractions.Fraction`.  Matrices are small and dense;
elimination always picks the first nonzero entry in column order so that
every result (echelon forms, kernel bases) is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction


def to_rational(value) -> Fraction:
    """Convert ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: every geometric predicate must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {value!r} to an exact rational")


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("matrix is not rectangular")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: int | None = None) -> QMatrix:
        entries = tuple(tuple(to_rational(x) for x in row) for row in rows)
        if cols is None:
            if not entries:
                raise ValueError("column count required for a matrix without rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        zero = Fraction(0)
        return cls(rows, cols, tuple((zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        return cls(n, n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> QMatrix:
        entries = tuple(tuple(row[j] for row in self.entries) for j in range(self.cols))
        return QMatrix(self.cols, self.rows, entries)

    def __matmul__(self, other: QMatrix) -> QMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols_of_other = other.transpose().entries
        entries = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols_of_other)
            for row in self.entries
        )
        return QMatrix(self.rows, other.cols, entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]


def _as_rows(m: QMatrix | Sequence[Sequence]) -> tuple[list[list[Fraction]], int]:
    if isinstance(m, QMatrix):
        return [list(r) for r in m.entries], m.cols
    rows = [[to_rational(x) for x in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def rref(m: QMatrix | Sequence[Sequence], cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and the pivot columns."""
    rows, ncols = _as_rows(m)
    if cols is not None:
        ncols = cols
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r][c]
        if p != 1:
            rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: QMatrix | Sequence[Sequence]) -> int:
    """Rank over the rationals."""
    return len(rref(m)[1])


def kernel_basis(m: QMatrix | Sequence[Sequence], cols: int | None = None) -> QMatrix:
    """Basis of the right kernel, one vector per row.

    For a matrix without rows the column count must be passed via ``cols``
    (or the argument must be a QMatrix); the result is then the identity.
    """
    if isinstance(m, QMatrix):
        cols = m.cols
    elif cols is None:
        if not m:
            raise ValueError("column count required for a matrix without rows")
        cols = len(m[0])
    reduced, pivots = rref(m, cols)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return QMatrix.from_rows(basis, cols)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def primitive(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Scale a nonzero rational vector to the primitive integer vector in its direction."""
    v = [to_rational(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive representative")
    lcm = 1
    for x in v:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(Fraction(x // g) for x in ints)


def in_span(v: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> bool:
    if not rows:
        return all(x == 0 for x in v)
    return rank(list(rows) + [list(v)]) == rank(rows)


# --- GF(2) -------------------------------------------------------------------


@dataclass(frozen=True)
class GF2Matrix:
    """Dense GF(2) matrix; row ``i`` is an int whose bit ``j`` is entry (i, j)."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> GF2Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        bits = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("matrix is not rectangular")
            word = 0
            for j, x in enumerate(r):
                if int(x) % 2:
                    word |= 1 << j
            bits.append(word)
        return cls(len(rows), cols, tuple(bits))

    @classmethod
    def from_qmatrix(cls, m: QMatrix) -> GF2Matrix:
        """Reduce an integer-valued rational matrix mod 2."""
        rows = []
        for r in m.entries:
            row = []
            for x in r:
                if x.denominator % 2 == 0:
                    raise ValueError(f"entry {x} has no reduction mod 2")
                row.append(x.numerator * pow(x.denominator, -1, 2) % 2)
            rows.append(row)
        return cls.from_rows(rows, m.cols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(index)
        return (self.bits[i] >> j) & 1


def gf2_rank(m: GF2Matrix) -> int:
    """Rank over GF(2) by XOR elimination on the bit rows."""
    rows = [r for r in m.bits if r]
    rank_ = 0
    for c in range(m.cols):
        mask = 1 << c
        pivot = next((i for i in range(rank_, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[rank_], rows[pivot] = rows[pivot], rows[rank_]
        for i in range(len(rows)):
            if i != rank_ and rows[i] & mask:
                rows[i] ^= rows[rank_]
        rank_ += 1
    return rank_
