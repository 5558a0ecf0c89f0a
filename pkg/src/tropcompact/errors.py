"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class TropCompactError(ValueError):
    """Base class of every domain error raised by this package."""


class ClosureAxiomViolation(TropCompactError):
    pass


class PointednessViolation(TropCompactError):
    """A polyhedron or cone contains a line."""


class LinealityDetected(PointednessViolation):
    pass


class EmptyPolyhedron(TropCompactError):
    pass


class NotAFaceOfTail(TropCompactError):
    pass


class InvalidComplex(TropCompactError):
    pass


class NoRecessionFan(TropCompactError):
    """Toric mode was requested for a complex whose tails do not form a fan."""


class ModeMismatch(TropCompactError):
    pass


class ConeNotInFan(TropCompactError):
    pass


class InconsistentSquares(TropCompactError):
    pass


class DisconnectedSquareGraph(TropCompactError):
    pass


class ShapeMismatch(TropCompactError):
    pass


class NotAComplex(TropCompactError):
    """Boundary maps do not compose to zero."""


class InvalidMatroid(TropCompactError):
    pass


class MatroidNotLoopless(InvalidMatroid):
    pass


class MatroidNotConnected(InvalidMatroid):
    pass


class ParseError(TropCompactError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicateExponent(TropCompactError):
    pass


class DegenerateInput(TropCompactError):
    pass
