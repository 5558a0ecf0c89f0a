import pytest

from tropcompact.builders import (
    Matroid,
    bergman_fine,
    half_line,
    parallel_half_lines,
    positive_orthant_example,
    segment,
    shield,
    square,
    two_triangles,
)
from tropcompact.closure import HasseDiagram
from tropcompact.compactify import compactify
from tropcompact.errors import DisconnectedSquareGraph, InconsistentSquares
from tropcompact.orientation import signed_incidence, square_violations

FIXTURES = [segment, half_line, square, two_triangles, positive_orthant_example, shield,
            parallel_half_lines, lambda: bergman_fine(Matroid.uniform(3, 4))]


def diagram(ranks, edges):
    faces = [frozenset({i}) for i in range(len(ranks))]
    faces[0] = frozenset()
    return HasseDiagram(faces, ranks, edges)


def test_unbounded_face_poset_is_not_a_chain_complex():
    # a half-line has a single vertex, so its boundary does not cancel
    h = half_line().hasse_diagram()
    assert square_violations(h, signed_incidence(h)) == [(0, 2, 1)]


def test_segment_signs():
    h = segment().hasse_diagram()
    s = signed_incidence(h)
    edge = h.nodes_of_rank(2)[0]
    a, b = h.down(edge)
    assert (s[(a, edge)], s[(b, edge)]) == (1, -1)
    assert all(s[(h.bottom, v)] == 1 for v in h.nodes_of_rank(1))


def test_top_edges_are_unsigned():
    d = compactify(half_line())
    s = signed_incidence(d.hasse)
    assert all(hi != d.hasse.top for _, hi, _ in s.triples())
    assert len(s) == len(d.hasse.edges) - len(d.hasse.down(d.hasse.top))


@pytest.mark.parametrize("build", FIXTURES)
def test_every_square_cancels(build):
    pc = build()
    if not any(p.is_far for p in pc.points):
        assert square_violations(pc.hasse_diagram(), signed_incidence(pc.hasse_diagram())) == []
    # the compactified poset is thin: every interval of length two is a diamond
    h = compactify(pc).hasse
    assert square_violations(h, signed_incidence(h)) == []
    for u in h.proper_nodes():
        for v in h.down(u):
            for w in h.down(v):
                assert len([x for x in h.down(u) if w in h.down(x)]) == 2


@pytest.mark.parametrize("build", FIXTURES)
def test_signs_are_deterministic(build):
    a = signed_incidence(compactify(build()).hasse).triples()
    b = signed_incidence(compactify(build()).hasse).triples()
    assert a == b
    assert {x for _, _, x in a} <= {1, -1}


def test_three_edges_over_two_points_are_inconsistent():
    # 1, 2 points; 3, 4, 5 edges each bounded by both; 6 a cell over all three
    edges = [(0, 1), (0, 2)] + [(p, e) for e in (3, 4, 5) for p in (1, 2)] + [(e, 6) for e in (3, 4, 5)]
    with pytest.raises(InconsistentSquares):
        signed_incidence(diagram([0, 1, 1, 2, 2, 2, 3], edges))


def test_children_without_common_faces_are_disconnected():
    edges = [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(DisconnectedSquareGraph):
        signed_incidence(diagram([0, 1, 1, 2, 2, 3], edges))


def test_square_violations_report_bad_signs():
    h = segment().hasse_diagram()
    s = signed_incidence(h)
    edge = h.nodes_of_rank(2)[0]
    lo = h.down(edge)[1]
    s.sign[(lo, edge)] = 1
    assert square_violations(h, s) == [(h.bottom, edge, 2)]
