import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncsurf.errors import EdgeNotInTriangulation
from ncsurf.laurent import (
    abelianize,
    enumerate_admissible,
    expand_edges,
    expand_x,
    expand_x_by_enumeration,
    expand_y,
    ptolemy_eval,
    relation_checks,
)
from ncsurf.polygon import Triangulation, all_triangulations, chord, random_triangulation, starlike
from ncsurf.wordcore import element_from_string

PENTAGON = Triangulation.of(5, [(1, 3), (1, 4)])
HEXAGON = Triangulation.of(6, [(1, 3), (3, 6), (4, 6)])


def test_admissible_sequences_pentagon():
    assert enumerate_admissible(PENTAGON, 2, 5) == [(2, 1, 3, 4, 1, 5), (2, 1, 4, 5), (2, 3, 1, 5)]


def test_pentagon_expansion_over_edges():
    want = ("t(2,1)*t(4,1)^-1*t(4,5) + t(2,3)*t(1,3)^-1*t(1,5)"
            " + t(2,1)*t(3,1)^-1*t(3,4)*t(1,4)^-1*t(1,5)")
    assert expand_edges(PENTAGON, 2, 5) == element_from_string(want)


def test_hexagon_has_five_terms():
    assert len(expand_edges(HEXAGON, 2, 5)) == 5
    assert set(expand_x(HEXAGON, 2, 5).raw.values()) == {1}


def test_edges_expand_to_themselves():
    assert expand_edges(PENTAGON, 1, 3) == element_from_string("t(1,3)")
    assert expand_edges(PENTAGON, 3, 4) == element_from_string("t(3,4)")


def test_fan_term_counts():
    # crossing the whole fan at 1 gives n - 2 sequences
    counts = [len(enumerate_admissible(starlike(n, 1), 2, n)) for n in range(4, 10)]
    assert counts == [2, 3, 4, 5, 6, 7]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_dynamic_programme_matches_enumeration(n):
    for t in all_triangulations(n):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                if p != q:
                    assert expand_x(t, p, q) == expand_x_by_enumeration(t, p, q)


def test_expand_y_needs_an_edge():
    with pytest.raises(EdgeNotInTriangulation):
        expand_y(PENTAGON, 2, 5, 4)


def test_ptolemy_pentagon():
    ones = {e: 1 for e in [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (1, 3), (1, 4)]}
    assert ptolemy_eval(PENTAGON, ones, (2, 5)) == 3
    assert abelianize(expand_edges(PENTAGON, 2, 5), ones) == 3


@given(st.integers(4, 9), st.integers(0, 500), st.data())
def test_positivity_and_commutative_shadow(n, seed, data):
    t = random_triangulation(n, seed)
    p = data.draw(st.integers(1, n))
    q = data.draw(st.integers(1, n).filter(lambda v: v != p))
    e = expand_edges(t, p, q)
    assert set(e.raw.values()) == {1}
    edges = sorted({chord(a, b) for a, b in t.oriented_edges()})
    vals = {c: data.draw(st.integers(1, 9)) for c in edges}
    assert abelianize(e, vals) == ptolemy_eval(t, vals, (p, q))


@given(st.integers(4, 9), st.integers(0, 500))
def test_relations_hold_on_random_triangulations(n, seed):
    count, failures = relation_checks(random_triangulation(n, seed))
    assert count > 0 and failures == []
