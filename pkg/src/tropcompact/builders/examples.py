"""Small hand-made complexes used throughout the tests and the CLI."""

from __future__ import annotations

from ..complex import PolyhedralComplex


def positive_orthant_example() -> PolyhedralComplex:
    """``conv{(1,0), (0,1)} + cone{(1,0), (0,1)}`` as a one-cell complex."""
    return PolyhedralComplex.from_homogeneous([[1, 1, 0], [1, 0, 1], [0, 1, 0], [0, 0, 1]], [[0, 1, 2, 3]])


def half_line() -> PolyhedralComplex:
    """The nonnegative real axis: vertex 0 and ray +1."""
    return PolyhedralComplex.from_homogeneous([[1, 0], [0, 1]], [[0, 1]])


def segment() -> PolyhedralComplex:
    return PolyhedralComplex.from_homogeneous([[1, 0], [1, 1]], [[0, 1]])


def square() -> PolyhedralComplex:
    return PolyhedralComplex.from_homogeneous([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]], [[0, 1, 2, 3]])


def two_triangles() -> PolyhedralComplex:
    return PolyhedralComplex.from_homogeneous([[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1]], [[0, 1, 2], [1, 2, 3]])


def crossing_segments() -> PolyhedralComplex:
    return PolyhedralComplex.from_homogeneous([[1, -1, 0], [1, 1, 0], [1, 0, -1], [1, 0, 1]], [[0, 1], [2, 3]])


def shield() -> PolyhedralComplex:
    """Vertices (0,1), (0,-1), (-1,0) and the ray (1,0): two parallel unbounded edges
    whose points at infinity span an edge lying over the whole 2-cell."""
    return PolyhedralComplex.from_homogeneous([[1, 0, 1], [1, 0, -1], [1, -1, 0], [0, 1, 0]], [[0, 1, 2, 3]])


def parallel_half_lines() -> PolyhedralComplex:
    """Two disjoint half-lines in the same direction."""
    return PolyhedralComplex.from_homogeneous([[1, 0, 0], [1, 0, 1], [0, 1, 0]], [[0, 2], [1, 2]])


def complex_without_recession_fan() -> PolyhedralComplex:
    """``(0,0,1) + R(1,1,0)``, the segment ``[(0,0,0), (0,0,1)]`` and the quadrant
    ``R(1,0,0) + R(0,1,0)``: the tail of the first cell sits inside the quadrant
    without being a face of it."""
    points = [[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    return PolyhedralComplex.from_homogeneous(points, [[1, 2], [0, 1], [0, 3, 4]])


def refined_complex_without_recession_fan() -> PolyhedralComplex:
    """The previous complex with the quadrant split along (1,1,0)."""
    points = [[1, 0, 0, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0]]
    return PolyhedralComplex.from_homogeneous(points, [[1, 2], [0, 1], [0, 2, 3], [0, 2, 4]])
