import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncsurf.errors import EdgeNotInTriangulation, NotATriangle
from ncsurf.polygon import Triangulation, all_triangulations, random_triangulation, triangles
from ncsurf.presentation import (
    angle_word,
    big_triangle_relations,
    build_rewriter,
    retraction_tau,
    sector_word,
    substitute_word,
    total_angle,
    triangle_relator,
)
from ncsurf.wordcore import edge, element_from_string, gen_id

PENTAGON = Triangulation.of(5, [(1, 3), (1, 4)])


@given(st.integers(3, 12), st.integers(0, 1000))
def test_basis_is_free_of_rank_3n_minus_4(n, seed):
    t = random_triangulation(n, seed) if n > 3 else Triangulation.of(3)
    rw = build_rewriter(t)
    assert len(rw.basis) == 3 * n - 4
    for f in triangles(t):
        assert rw.rewrite_word(triangle_relator(*f)) == ()


def test_basis_letters_rewrite_to_themselves():
    rw = build_rewriter(PENTAGON)
    for g in rw.basis:
        assert rw.of(g) == (gen_id(g),)


def test_total_angle_at_a_fan_apex():
    want = ("t(2,1)^-1*t(2,3)*t(1,3)^-1 + t(5,1)^-1*t(5,4)*t(1,4)^-1"
            " + t(5,1)^-1*t(5,4)*t(1,4)^-1*t(1,5)*t(4,5)^-1*t(4,3)*t(1,3)^-1")
    assert total_angle(PENTAGON, 1) == element_from_string(want)
    assert len(total_angle(PENTAGON, 2)) == 1


def test_angle_and_sector_errors():
    with pytest.raises(NotATriangle):
        angle_word(PENTAGON, (2, 4, 5))
    with pytest.raises(EdgeNotInTriangulation):
        sector_word(PENTAGON, 2, 4, 5)
    assert sector_word(PENTAGON, 3, 3, 1) == ()


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_retraction_kills_big_triangle_relators(n):
    rels = big_triangle_relations(n)
    assert len(rels) == (n - 1) * (n - 2) * (n - 3) // 6
    for t in all_triangulations(n):
        tau = retraction_tau(t)
        rw = build_rewriter(t)
        for a, b in t.oriented_edges():
            assert tau[(a, b)] == rw.of(edge(a, b))
        assert all(substitute_word(w, tau) == () for w in rels)
