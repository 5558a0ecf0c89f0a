"""Builders for example complexes: hand-made fixtures, Bergman fans, tropical hypersurfaces."""

from .examples import (
    complex_without_recession_fan,
    crossing_segments,
    half_line,
    parallel_half_lines,
    positive_orthant_example,
    refined_complex_without_recession_fan,
    segment,
    shield,
    square,
    two_triangles,
)
from .matroid import Matroid, bergman_fine, bergman_k4_coarse_fixture, flats, k4_matroid
from .tropical import TropicalPolynomial, hypersurface, parse_tropical_polynomial

CUBIC = ("min(3*x_0,2*x_0+x_1,2*x_0+x_2,927+x_0+2*x_1,351+x_0+x_1+x_2,30+x_0+2*x_2,"
         "2856+3*x_1,1884+2*x_1+x_2,942+x_1+2*x_2,411+3*x_2)")

__all__ = [
    "CUBIC",
    "Matroid",
    "TropicalPolynomial",
    "bergman_fine",
    "bergman_k4_coarse_fixture",
    "complex_without_recession_fan",
    "crossing_segments",
    "flats",
    "half_line",
    "hypersurface",
    "k4_matroid",
    "parallel_half_lines",
    "parse_tropical_polynomial",
    "positive_orthant_example",
    "refined_complex_without_recession_fan",
    "segment",
    "shield",
    "square",
    "two_triangles",
]
