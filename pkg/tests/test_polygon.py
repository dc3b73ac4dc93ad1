import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncsurf.errors import NotADiagonal, ParseError
from ncsurf.polygon import (
    Triangulation,
    all_triangulations,
    catalan,
    chord,
    crossing_diagonals,
    crossing_order,
    crosses,
    flip,
    format_triangulation,
    parse_triangulation,
    random_triangulation,
    triangles,
)

PENTAGON = Triangulation.of(5, [(1, 3), (1, 4)])


def test_catalan_counts():
    assert [catalan(m) for m in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    for n in range(3, 9):
        assert len(set(all_triangulations(n))) == catalan(n - 2)


def test_parse_and_format():
    t = parse_triangulation("n=5; diag=1-3, 1-4")
    assert t == PENTAGON
    assert format_triangulation(t) == "n=5;diag=1-3,1-4"
    with pytest.raises(ParseError):
        parse_triangulation("n=5;diag=1-3")
    with pytest.raises(ParseError):
        parse_triangulation("five")


def test_invalid_diagonals():
    with pytest.raises(ValueError):
        Triangulation.of(5, [(1, 3), (2, 4)])
    with pytest.raises(ValueError):
        Triangulation.of(5, [(1, 2), (1, 3)])


def test_crossing_order_follows_the_segment():
    # for the segment (2,5) of the pentagon, {1,3} is met before {1,4}
    assert crossing_order([chord(1, 4), chord(1, 3)], 2, 5) == [(1, 3), (1, 4)]
    assert crossing_diagonals(PENTAGON, 2, 5) == [(1, 3), (1, 4)]
    assert crossing_diagonals(PENTAGON, 5, 2) == [(1, 4), (1, 3)]


def test_flip_pentagon():
    new, d, quad = flip(PENTAGON, (1, 3))
    assert new == Triangulation.of(5, [(1, 4), (2, 4)])
    assert d == (2, 4) and quad == (1, 2, 3, 4)
    with pytest.raises(NotADiagonal):
        flip(PENTAGON, (2, 4))


@given(st.integers(4, 11), st.integers(0, 10_000))
def test_random_triangulation_is_valid(n, seed):
    t = random_triangulation(n, seed)
    assert len(t.diagonals) == n - 3
    assert len(triangles(t)) == n - 2
    assert t == random_triangulation(n, seed)
    for a in t.diagonals:
        for b in t.diagonals:
            assert not crosses(a, b, n)


@given(st.integers(4, 10), st.integers(0, 10_000), st.data())
def test_flip_is_an_involution(n, seed, data):
    t = random_triangulation(n, seed)
    d = data.draw(st.sampled_from(sorted(t.diagonals)))
    there, new, _ = flip(t, d)
    back, old, _ = flip(there, new)
    assert back == t and old == d
