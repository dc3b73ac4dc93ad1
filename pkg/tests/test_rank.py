import pytest

from ncsurf.acceptance import RANK_CASES
from ncsurf.errors import IllegalSurface
from ncsurf.surfaces.rank import Free, OneRelator, SurfaceInvariants, Trivial, annulus, polygon
from ncsurf.surfaces.rank import triangle_group_type as tg


def test_closed_cases():
    sphere = lambda i: SurfaceInvariants(2, i, closed="sphere")  # noqa: E731
    assert [tg(sphere(i)) for i in (1, 2, 3, 4)] == [Trivial(), Free(2), Free(5), OneRelator(9)]
    assert tg(SurfaceInvariants(1, 1, closed="projective_plane")) == Free(2)
    assert tg(SurfaceInvariants(1, 2, closed="projective_plane")) == OneRelator(5)
    assert tg(SurfaceInvariants(0, 1, closed="torus")) == OneRelator(5)
    assert tg(SurfaceInvariants(0, 1, closed="klein_bottle")) == OneRelator(5)
    assert str(tg(sphere(4))) == "OneRelator(9)"


def test_bounded_cases():
    assert tg(SurfaceInvariants(1, 1, 1)) == Free(2)
    assert tg(SurfaceInvariants(1, 2, 0)) == Free(3)
    assert [tg(polygon(n)).rank for n in range(3, 9)] == [3 * n - 4 for n in range(3, 9)]
    assert [tg(annulus(r)).rank for r in range(1, 6)] == [3 * r + 3 for r in range(1, 6)]


def test_table():
    for inv, want in RANK_CASES:
        assert tg(inv) == want


@pytest.mark.parametrize("kwargs", [
    dict(chi=2, marked=0, closed="sphere"),
    dict(chi=1, marked=2, boundary=3),
    dict(chi=2, marked=2),
    dict(chi=0, marked=1, closed="sphere"),
    dict(chi=2, marked=1, boundary=1, closed="sphere"),
    dict(chi=1, marked=1, special=-1),
    dict(chi=0, marked=1, closed="lens"),
])
def test_illegal(kwargs):
    with pytest.raises(IllegalSurface):
        SurfaceInvariants(**kwargs)
