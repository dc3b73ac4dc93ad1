"""Isomorphism type of the triangle group of a marked surface."""

from dataclasses import dataclass

from ..errors import IllegalSurface

CLOSED_NAMES = ("sphere", "projective_plane", "torus", "klein_bottle", "orientable", "nonorientable")


@dataclass(frozen=True)
class Free:
    rank: int

    def __str__(self):
        return f"Free({self.rank})"


@dataclass(frozen=True)
class OneRelator:
    generators: int

    def __str__(self):
        return f"OneRelator({self.generators})"


@dataclass(frozen=True)
class Trivial:
    def __str__(self):
        return "Trivial"


@dataclass(frozen=True)
class SurfaceInvariants:
    """chi, |I|, |I_b|, h and, for closed surfaces, the surface name.

    ``closed`` is None for a surface with boundary; otherwise one of
    CLOSED_NAMES, where "orientable" and "nonorientable" stand for any
    surface of that kind whose Euler characteristic fits.
    """

    chi: int
    marked: int
    boundary: int = 0
    special: int = 0
    closed: str | None = None

    def __post_init__(self):
        if self.marked < 1:
            raise IllegalSurface("a marked surface needs at least one marked point")
        if not 0 <= self.boundary <= self.marked:
            raise IllegalSurface("boundary marked points must be a subset of the marked points")
        if self.special < 0:
            raise IllegalSurface("the number of special punctures is negative")
        if self.closed is None:
            if self.chi > 1:
                raise IllegalSurface(f"a surface with boundary has chi <= 1, got {self.chi}")
            return
        if self.boundary:
            raise IllegalSurface("a closed surface has no boundary marked points")
        if not _chi_fits(self.closed, self.chi):
            raise IllegalSurface(f"chi = {self.chi} does not fit a {self.closed}")

    @property
    def is_disk(self):
        return self.closed is None and self.chi == 1


def _chi_fits(name, chi):
    fixed = {"sphere": 2, "projective_plane": 1, "torus": 0, "klein_bottle": 0}
    if name in fixed:
        return chi == fixed[name]
    if name == "orientable":
        return chi <= 2 and chi % 2 == 0
    if name == "nonorientable":
        return chi <= 1
    raise IllegalSurface(f"unknown closed surface {name!r}; expected one of {', '.join(CLOSED_NAMES)}")


def triangle_group_type(inv):
    s, h, i, ib = inv, inv.special, inv.marked, inv.boundary
    if s.closed is None or h > 0:
        if s.is_disk and i + ib == 2:
            return Free(i + 1) if h == 0 else Free(2 * h + 3 * i - 4)
        rank = 2 * h + 4 * (i - s.chi) - ib
        if rank < 0:
            raise IllegalSurface("no triangulation exists for these invariants")
        return Free(rank)
    sphere = s.closed == "sphere" or (s.closed == "orientable" and s.chi == 2)
    plane = s.closed == "projective_plane" or (s.closed == "nonorientable" and s.chi == 1)
    if sphere and i == 1:
        return Trivial()
    if sphere and i in (2, 3):
        return Free(3 * i - 4)
    if plane and i == 1:
        return Free(2)
    return OneRelator(4 * (i - s.chi) + 1)


def annulus(r):
    """One outer and r inner boundary marked points."""
    return SurfaceInvariants(chi=0, marked=r + 1, boundary=r + 1)


def polygon(n):
    return SurfaceInvariants(chi=1, marked=n, boundary=n)


__all__ = ["Free", "OneRelator", "Trivial", "SurfaceInvariants", "triangle_group_type", "annulus",
           "polygon", "CLOSED_NAMES"]
