import pytest
from oracles import pair_count_fvector

from tropcompact.builders import (
    Matroid,
    bergman_fine,
    complex_without_recession_fan,
    half_line,
    hypersurface,
    parallel_half_lines,
    parse_tropical_polynomial,
    positive_orthant_example,
    refined_complex_without_recession_fan,
    segment,
    shield,
    two_triangles,
)
from tropcompact.closure import axiom_violations, brute_force_closed_sets
from tropcompact.compactify import closure, closure_operator, compactification_vertices, compactify, stratum
from tropcompact.complex import validate
from tropcompact.errors import ConeNotInFan, ModeMismatch, NoRecessionFan
from tropcompact.polyhedron import Cone


def tropical_line():
    return hypersurface(parse_tropical_polynomial("min(0, x_0, x_1)"))


SMALL = [segment, half_line, two_triangles, positive_orthant_example, shield, parallel_half_lines,
         refined_complex_without_recession_fan, tropical_line, lambda: bergman_fine(Matroid.uniform(2, 3))]


def by_realisation(vertices):
    return {tuple(sorted(a.realisation)): a for a in vertices}


def test_vertices_examples():
    assert len(compactification_vertices(positive_orthant_example())) == 5
    hl = compactification_vertices(half_line())
    assert [(sorted(a.realisation), sorted(a.sedentarity)) for a in hl] == [([0], []), ([0, 1], [1])]
    assert all(not a.sedentarity for a in compactification_vertices(segment()))
    for a in compactification_vertices(shield()):
        assert a.realisation == a.nu | a.sedentarity and not a.nu & a.sedentarity
        assert a.parent_face.dim == a.parent_face.tail_dim


def test_closure_examples():
    pc = half_line()
    vs = compactification_vertices(pc)
    assert closure(pc, vs, {1}) == {1}
    assert closure(pc, vs, {0, 1}) == {0, 1}
    assert closure(pc, vs, set()) == set()
    par = parallel_half_lines()
    pv = by_realisation(compactification_vertices(par))
    ends = {pv[(0, 2)].id, pv[(1, 2)].id}
    assert closure(par, list(pv.values()), ends) == set(range(4))
    sh = shield()
    sv = compactification_vertices(sh)
    a = by_realisation(sv)
    pair = {a[(0, 3)].id, a[(1, 3)].id}
    assert closure(sh, sv, pair) == pair


def test_half_line_decorations():
    d = compactify(half_line())
    decos = [d.decoration(i) for i in range(len(d))]
    assert decos == [
        (frozenset(), 0, frozenset(), frozenset()),
        (frozenset({0}), 1, frozenset({0}), frozenset()),
        (frozenset({1}), 1, frozenset({0, 1}), frozenset({1})),
        (frozenset({0, 1}), 2, frozenset({0, 1}), frozenset()),
        (None, 3, None, None),
    ]
    assert [d.hasse.up(i) for i in range(5)] == [[1, 2], [3], [3], [4], []]


def test_orthant_fvector_and_decorations():
    d = compactify(positive_orthant_example())
    assert d.mode == "toric" and d.f_vector() == [5, 5, 1]
    corner = next(i for i in range(len(d)) if d.rank(i) == 1 and d.sedentarity(i) == {2, 3})
    assert d.trunk(corner).same_as(Cone(2, ((1, 0), (0, 1))))
    assert d.support(corner) == [frozenset({2, 3})]
    x_edge = next(i for i in range(len(d)) if d.rank(i) == 2 and d.realisation(i) == {0, 2})
    assert d.support(x_edge) == [frozenset(), frozenset({2})]
    assert d.parent(x_edge).generators == {0, 2}
    bounded = next(i for i in range(len(d)) if d.realisation(i) == {0})
    assert d.support(bounded) == [frozenset()] and d.trunk(bounded).rays == ()


def test_half_line_trunk_and_parent():
    d = compactify(half_line())
    assert d.trunk(2).rays == ((1,),)
    assert d.parent(2).generators == {0, 1}
    assert d.parent(1).generators == {0}
    with pytest.raises(ValueError):
        d.trunk(0)


def test_shield_segment_at_infinity():
    d = compactify(shield())
    node = next(i for i in range(len(d)) if d.rank(i) == 2 and d.sedentarity(i) == {3})
    parent = d.parent(node).generators
    assert parent == {0, 1, 2, 3}
    assert d.realisation(node) < parent


def test_parallel_ends_stay_apart():
    d = compactify(parallel_half_lines())
    assert d.f_vector() == [4, 2]
    assert len(d.hasse.down(d.hasse.top)) == 2


def test_toric_mode_requires_recession_fan():
    with pytest.raises(NoRecessionFan):
        compactify(complex_without_recession_fan(), "toric")
    assert compactify(complex_without_recession_fan()).mode == "chart"


def test_support_undefined_in_chart_mode():
    d = compactify(positive_orthant_example(), "chart")
    with pytest.raises(ModeMismatch):
        d.support(1)


def test_stratum_examples():
    pc = positive_orthant_example()
    d = compactify(pc)
    same = stratum(d, pc, Cone(2, ()))
    assert set(same.points) == set(pc.points) and len(same.maximal_cells) == 1
    line = d.stratum(Cone(2, ((1, 0),)))
    assert line.ambient_dim == 1 and line.f_vector() == [1, 1]
    assert [p.is_far for p in line.points].count(True) == 1
    point = stratum(d, pc, frozenset({2, 3}))
    assert point.ambient_dim == 0 and point.f_vector() == [1]
    with pytest.raises(ConeNotInFan):
        stratum(d, pc, Cone(2, ((1, 1),)))


def test_stratum_of_refined_complex_is_disconnected():
    pc = refined_complex_without_recession_fan()
    st = stratum(None, pc, Cone(3, ((1, 1, 0),)))
    assert validate(st).ok
    assert st.f_vector() == [2, 2]
    # a point and a line made of two half-lines; the point is its own cell
    assert sorted(len(c) for c in st.maximal_cells) == [1, 2, 2]


@pytest.mark.parametrize("build", SMALL)
def test_closure_axioms_and_brute_force(build):
    pc = build()
    op = closure_operator(pc)
    assert op.ground_size <= 12
    assert axiom_violations(op) == []
    d = compactify(pc)
    ground = frozenset(range(op.ground_size))
    nodes = {f for f in d.hasse.faces if f is not None}
    assert nodes - {ground} == brute_force_closed_sets(op) - {ground}


@pytest.mark.parametrize("build", SMALL)
def test_decoration_invariants(build):
    pc = build()
    d = compactify(pc)
    h = d.hasse
    # mixed-dimensional complexes jump straight to the top
    assert all(h.ranks[b] == h.ranks[a] + 1 for a, b in h.edges if b != h.top)
    assert len(h.nodes_of_rank(1)) == len(d.vertices)
    for node in h.proper_nodes():
        parent = d.parent(node)
        assert parent.generators == pc.minfacevert(d.realisation(node))
        assert d.rank(node) - 1 == parent.dim - d.trunk(node).dim


@pytest.mark.parametrize("build", SMALL)
def test_fvector_matches_pair_counting(build):
    pc = build()
    assert compactify(pc).f_vector() == pair_count_fvector(pc)


@pytest.mark.parametrize("build", SMALL)
def test_modes_agree(build):
    pc = build()
    toric, chart = compactify(pc, "toric"), compactify(pc, "chart")
    assert [toric.decoration(i) for i in range(len(toric))] == [chart.decoration(i) for i in range(len(chart))]
    assert toric.hasse.edges == chart.hasse.edges


def test_euler_characteristic_of_small_fans():
    for pc in (tropical_line(), bergman_fine(Matroid.uniform(2, 3)), bergman_fine(Matroid.uniform(3, 4))):
        fv = compactify(pc).f_vector()
        assert sum((-1) ** k * n for k, n in enumerate(fv)) == 1
