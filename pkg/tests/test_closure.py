import pytest
from hypothesis import given
from hypothesis import strategies as st

from tropcompact.closure import (
    ClosureOperator,
    axiom_violations,
    brute_force_closed_sets,
    build_hasse,
    covering_pairs,
    enumerate_closure_system,
    iter_closed_sets,
)
from tropcompact.errors import ClosureAxiomViolation


def identity(n):
    return ClosureOperator(n, lambda s: s)


def square_closure():
    # vertices 0..3 of the unit square; facets as vertex pairs
    facets = [frozenset(f) for f in ({0, 1}, {1, 3}, {2, 3}, {0, 2})]

    def cl(s):
        out = frozenset(range(4))
        for f in facets:
            if s <= f:
                out &= f
        return out

    return ClosureOperator(4, cl)


def family_closure(n, family):
    """Closure of a family of sets under intersection (the ground set included)."""
    ground = frozenset(range(n))
    members = [frozenset(f) for f in family] + [ground]

    def cl(s):
        out = ground
        for m in members:
            if s <= m:
                out &= m
        return out

    return ClosureOperator(n, cl)


def test_boolean_lattice():
    h = enumerate_closure_system(identity(2))
    assert len(h) == 4 and len(h.edges) == 4
    assert len(h.nodes_of_rank(1)) == 2


def test_square_lattice_has_ten_nodes():
    h = enumerate_closure_system(square_closure())
    assert len(h) == 10
    assert len(h.nodes_of_rank(2)) == 4
    assert h.is_graded()
    assert h.faces[h.top] == frozenset(range(4))


def test_artificial_top():
    h = enumerate_closure_system(identity(1), append_top=True)
    assert h.has_artificial_top
    assert h.faces[-1] is None and h.ranks[-1] == 2
    assert h.proper_nodes() == [1]


def test_lectic_order_starts_at_closure_of_empty_set():
    sets = list(iter_closed_sets(family_closure(3, [{0}, {0, 1}])))
    assert sets == [frozenset({0}), frozenset({0, 1}), frozenset({0, 1, 2})]


def test_axiom_violation_detected():
    shrinking = ClosureOperator(2, lambda s: frozenset(list(s)[:1]))
    with pytest.raises(ClosureAxiomViolation):
        enumerate_closure_system(shrinking, check_axioms=True)
    assert axiom_violations(shrinking)


def test_non_idempotent_operator_reported():
    grow = ClosureOperator(3, lambda s: s | {min(max(s, default=-1) + 1, 2)} if s else s)
    assert any("idempotent" in p for p in axiom_violations(grow))


def test_build_hasse_orders_by_rank_then_set():
    faces = [frozenset(), frozenset({1}), frozenset({0}), frozenset({0, 1})]
    covers = {faces[0]: {faces[1], faces[2]}, faces[1]: {faces[3]}, faces[2]: {faces[3]}}
    h = build_hasse(faces, covers)
    assert h.faces == [frozenset(), frozenset({0}), frozenset({1}), frozenset({0, 1})]
    assert h.top == 3 and h.edges == [(0, 1), (0, 2), (1, 3), (2, 3)]


families = st.integers(1, 7).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.frozensets(st.integers(0, n - 1)), max_size=8)))


@given(families)
def test_enumeration_matches_brute_force(data):
    n, family = data
    op = family_closure(n, family)
    h = enumerate_closure_system(op, check_axioms=True)
    closed = brute_force_closed_sets(op)
    assert set(h.faces) == closed
    assert {(h.faces[a], h.faces[b]) for a, b in h.edges} == covering_pairs(closed)
    assert all(op(f) == f for f in h.faces)
    assert axiom_violations(op) == []


@given(families)
def test_enumeration_is_deterministic(data):
    n, family = data
    a = enumerate_closure_system(family_closure(n, family))
    b = enumerate_closure_system(family_closure(n, family))
    assert (a.faces, a.edges, a.ranks) == (b.faces, b.edges, b.ranks)
