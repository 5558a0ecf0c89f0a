"""
Tropical polynomials and their hypersurfaces.

Grammar (whitespace is ignored)::

    poly   := ("min" | "max") "(" term ("," term)* ")"
    term   := coeff | [coeff "+"] factor ("+" factor)*
    factor := [int "*"] "x_" int
    coeff  := ["-"] int ["/" int]

A term ``c + a_0*x_0 + ...`` stands for the affine function ``c + <a, x>``.
The hypersurface is where the min (or max) is attained at least twice.  It is
dual to the regular subdivision of the Newton polytope induced by lifting
each exponent by its coefficient: every bounded edge of the lower hull gives
one maximal cell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..complex import PolyhedralComplex
from ..errors import DegenerateInput, DuplicateExponent, LinealityDetected, ParseError
from ..linalg import rank
from ..polyhedron import HPolyhedron, VPolyhedron, h_to_v

MIN, MAX = "min", "max"


@dataclass(frozen=True)
class TropicalPolynomial:
    convention: str
    terms: tuple[tuple[Fraction, tuple[int, ...]], ...]

    def __post_init__(self):
        if self.convention not in (MIN, MAX):
            raise ValueError(f"unknown convention {self.convention!r}")
        if len(self.terms) < 2:
            raise ValueError("a tropical polynomial needs at least two terms")
        exps = [e for _, e in self.terms]
        if len(set(exps)) != len(exps):
            raise DuplicateExponent("two terms share an exponent")

    @property
    def n_vars(self) -> int:
        return len(self.terms[0][1])

    def evaluate(self, x) -> Fraction:
        values = [c + sum(a * xi for a, xi in zip(e, x)) for c, e in self.terms]
        return min(values) if self.convention == MIN else max(values)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for _, e in self.terms}) == 1


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            self.fail(f"expected {token!r}")
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def coefficient(self) -> Fraction:
        negative = False
        if self.peek() == "-":
            self.pos += 1
            negative = True
        value = Fraction(self.integer())
        if self.peek() == "/":
            self.pos += 1
            den = self.integer()
            if den == 0:
                self.fail("zero denominator")
            value /= den
        return -value if negative else value

    def variable(self) -> int:
        self.expect("x_")
        return self.integer()

    def term(self) -> tuple[Fraction, dict[int, int]]:
        coeff = Fraction(0)
        exps: dict[int, int] = {}
        first = True
        while True:
            c = self.peek()
            if c == "x":
                i = self.variable()
                exps[i] = exps.get(i, 0) + 1
            elif c.isdigit() or c == "-":
                start = self.pos
                value = self.coefficient()
                if self.peek() == "*":
                    if value.denominator != 1 or value < 0:
                        self.pos = start
                        self.fail("exponent multipliers must be nonnegative integers")
                    self.pos += 1
                    i = self.variable()
                    exps[i] = exps.get(i, 0) + int(value)
                elif first:
                    coeff = value
                else:
                    self.pos = start
                    self.fail("a constant may only open a term")
            else:
                self.fail("expected a coefficient or a variable")
            first = False
            if self.peek() != "+":
                return coeff, exps
            self.pos += 1

    def polynomial(self) -> TropicalPolynomial:
        self.skip()
        for name in (MIN, MAX):
            if self.text.startswith(name, self.pos):
                convention = name
                self.pos += len(name)
                break
        else:
            self.fail("expected 'min' or 'max'")
        self.expect("(")
        raw = [(self.pos, self.term())]
        while self.peek() == ",":
            self.pos += 1
            raw.append((self.pos, self.term()))
        self.expect(")")
        if self.peek():
            self.fail("trailing input")
        if len(raw) < 2:
            self.fail("a tropical polynomial needs at least two terms")
        n = max((i + 1 for _, (_, e) in raw for i in e), default=0)
        terms = []
        seen = set()
        for start, (c, e) in raw:
            vec = tuple(e.get(i, 0) for i in range(n))
            if vec in seen:
                raise DuplicateExponent(f"exponent {vec} repeated (term at position {start})")
            seen.add(vec)
            terms.append((c, vec))
        return TropicalPolynomial(convention, tuple(terms))


def parse_tropical_polynomial(text: str) -> TropicalPolynomial:
    return _Parser(text).polynomial()


def affine_terms(f: TropicalPolynomial) -> list[tuple[Fraction, tuple[int, ...]]]:
    """Terms as min-convention affine functions in the essential variables.

    Homogeneous polynomials are dehomogenized by setting ``x_0 = 0``; the max
    convention is turned into min by negating coefficients and exponents.
    """
    terms = list(f.terms)
    if f.is_homogeneous() and f.n_vars > 1:
        terms = [(c, e[1:]) for c, e in terms]
    if f.convention == MAX:
        terms = [(-c, tuple(-a for a in e)) for c, e in terms]
    return [(Fraction(c), e) for c, e in terms]


def _exponent_span(terms) -> int:
    base = terms[0][1]
    diffs = [[a - b for a, b in zip(e, base)] for _, e in terms[1:]]
    return rank(diffs) if diffs and diffs[0] else 0


def newton_lower_hull(terms) -> tuple[VPolyhedron, list[int]]:
    """Lifted Newton polytope plus an upward ray, and the term index of each vertex."""
    n = len(terms[0][1])
    lifted = [tuple(Fraction(a) for a in e) + (c,) for c, e in terms]
    up = tuple([Fraction(0)] * n + [Fraction(1)])
    q = VPolyhedron.from_generators(n + 1, lifted, [up])
    return q, [lifted.index(v) for v in q.vertices]


def hypersurface(f: TropicalPolynomial) -> PolyhedralComplex:
    terms = affine_terms(f)
    n = len(terms[0][1])
    span = _exponent_span(terms)
    if span == 0:
        raise DegenerateInput("all terms have the same exponent")
    if span < n:
        raise LinealityDetected("exponents do not span the variable space; the hypersurface has lineality")
    if n > 3:
        raise DegenerateInput("at most three essential variables are supported")
    q, term_of = newton_lower_hull(terms)
    cells_h = []
    for face in q.face_lattice().faces:
        if len(face) != 2 or not all(q.is_vertex(g) for g in face):
            continue
        i, j = (term_of[g] for g in sorted(face))
        (ci, ai), (cj, aj) = terms[i], terms[j]
        eq = (tuple(Fraction(a - b) for a, b in zip(ai, aj)), cj - ci)
        ineqs = tuple((tuple(Fraction(b - a) for a, b in zip(ai, ak)), ci - ck)
                      for k, (ck, ak) in enumerate(terms) if k not in (i, j))
        cells_h.append(HPolyhedron(n, ineqs, (eq,)))
    points: list[tuple[bool, tuple]] = []
    where: dict = {}
    cells = []
    for h in cells_h:
        p = h_to_v(h)
        gens = []
        for key in [(False, v) for v in p.vertices] + [(True, r) for r in p.rays]:
            if key not in where:
                where[key] = len(points)
                points.append(key)
            gens.append(where[key])
        cells.append(frozenset(gens))
    order = sorted(range(len(points)), key=lambda i: (points[i][0], points[i][1]))
    renumber = {old: new for new, old in enumerate(order)}
    points = [points[i] for i in order]
    cells = sorted((frozenset(renumber[g] for g in c) for c in cells), key=sorted)
    return PolyhedralComplex(n, tuple(points), tuple(cells))
