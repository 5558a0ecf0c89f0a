"""Canonical compactifications of polyhedral complexes, computed combinatorially."""

from .closure import ClosureOperator, HasseDiagram, enumerate_closure_system
from .compactify import CompVertex, DecoratedHasse, closure, compactification_vertices, compactify, stratum
from .complex import ComplexFace, PolyhedralComplex, ValidationReport, face_set, has_recession_fan, validate
from .errors import TropCompactError
from .homology import ChainComplex, Cosheaf, betti, build_chain, constant_cosheaf
from .orientation import SignMap, signed_incidence
from .polyhedron import Cone, HPolyhedron, VPolyhedron

__all__ = [
    "ChainComplex",
    "ClosureOperator",
    "CompVertex",
    "ComplexFace",
    "Cone",
    "Cosheaf",
    "DecoratedHasse",
    "HPolyhedron",
    "HasseDiagram",
    "PolyhedralComplex",
    "SignMap",
    "TropCompactError",
    "VPolyhedron",
    "ValidationReport",
    "betti",
    "build_chain",
    "closure",
    "compactification_vertices",
    "compactify",
    "constant_cosheaf",
    "enumerate_closure_system",
    "face_set",
    "has_recession_fan",
    "signed_incidence",
    "stratum",
    "validate",
]
