import pytest

from ncsurf.errors import NonUnitInverse
from ncsurf.laurent import expand_x
from ncsurf.mutation import (
    apply,
    basis_letters,
    flip_compatible,
    flip_hom,
    flip_path,
    psi_chain,
    round_trip,
    total_angle_transported,
)
from ncsurf.polygon import Triangulation, all_triangulations
from ncsurf.presentation import build_rewriter, total_angle
from ncsurf.wordcore import AlgebraElement, edge

PENTAGON = Triangulation.of(5, [(1, 3), (1, 4)])
GOAL = Triangulation.of(5, [(2, 4), (2, 5)])


def test_flip_hom_replaces_one_diagonal():
    h = flip_hom(PENTAGON, (1, 3))
    assert h.target == Triangulation.of(5, [(1, 4), (2, 4)])
    assert h.quad == (2, 3, 4, 1)
    assert len(h.images[(1, 3)]) == 2 and len(h.images[(3, 1)]) == 2
    rw = build_rewriter(h.target)
    assert h.images[(1, 4)] == AlgebraElement.from_word(rw.of(edge(1, 4)))


def test_apply_needs_units():
    h = flip_hom(PENTAGON, (1, 3))
    p = AlgebraElement.from_gen(edge(1, 3), -1)
    with pytest.raises(NonUnitInverse):
        apply(h, p)


@pytest.mark.parametrize("n", [4, 5])
def test_flip_compatibility(n):
    for t in all_triangulations(n):
        for d in sorted(t.diagonals):
            rows = flip_compatible(t, d, dims=(2,), trials=2)
            assert all(ok for *_, ok in rows)
            assert len(rows) == n * (n - 1)


def test_flip_path_and_psi_chain():
    path = flip_path(PENTAGON, GOAL)
    assert path == [PENTAGON, Triangulation.of(5, [(1, 4), (2, 4)]), GOAL]
    chain = psi_chain(PENTAGON, GOAL)
    rwg = build_rewriter(GOAL)
    rws = build_rewriter(PENTAGON)
    items = [(f"x{p}{q}", expand_x(PENTAGON, p, q, rws), expand_x(GOAL, p, q, rwg))
             for p in range(1, 6) for q in range(1, 6) if p != q]
    rows = chain.check(items, dims=(2,), trials=2)
    assert all(ok for _, _, ok in rows)
    assert {m for _, m, _ in rows} == {"symbolic", "oracle"}


def test_round_trip_fixes_basis():
    rows = round_trip(PENTAGON, (1, 4), dims=(2,), trials=2)
    assert len(rows) == len(basis_letters(PENTAGON)) == 11
    assert all(ok for _, _, ok in rows)


def test_total_angle_transport_never_fails():
    seen = set()
    for t in all_triangulations(5):
        for d in sorted(t.diagonals):
            for i in range(1, 6):
                seen.add(total_angle_transported(t, d, i))
    assert False not in seen and True in seen
    assert len(total_angle(PENTAGON, 2)) == 1
