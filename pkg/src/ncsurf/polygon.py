"""Convex polygons: chords, triangulations, flips and crossing order.

Vertices are 1..n in clockwise cyclic order.  Every predicate here is a
cyclic-interval test on integer labels.
"""

import random
import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotADiagonal, ParseError, PreconditionViolation


def chord(i, j):
    if i == j:
        raise ValueError("a chord needs two distinct endpoints")
    return (i, j) if i < j else (j, i)


def is_boundary(c, n):
    i, j = chord(*c)
    return j - i == 1 or (i == 1 and j == n)


def _strictly_inside(v, c):
    """v lies strictly between the endpoints of c=(a,b), a<b."""
    return c[0] < v < c[1]


def crosses(a, b, n=None):
    a, b = chord(*a), chord(*b)
    if len({a[0], a[1], b[0], b[1]}) < 4:
        return False
    return _strictly_inside(b[0], a) != _strictly_inside(b[1], a)


@dataclass(frozen=True)
class Triangulation:
    n: int
    diagonals: frozenset

    def __post_init__(self):
        n = self.n
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        diags = frozenset(chord(*d) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)
        for d in diags:
            if not (1 <= d[0] and d[1] <= n):
                raise ValueError(f"chord {d} outside [1,{n}]")
            if is_boundary(d, n):
                raise ValueError(f"{d} is a boundary edge, not a diagonal")
        if len(diags) != n - 3:
            raise ValueError(f"a triangulation of the {n}-gon has {n - 3} diagonals, got {len(diags)}")
        ds = sorted(diags)
        for x in range(len(ds)):
            for y in range(x + 1, len(ds)):
                if crosses(ds[x], ds[y]):
                    raise ValueError(f"diagonals {ds[x]} and {ds[y]} cross")

    @classmethod
    def of(cls, n, diagonals=()):
        return cls(n, frozenset(chord(*d) for d in diagonals))

    def boundary(self):
        n = self.n
        return [(i, i + 1) for i in range(1, n)] + [(1, n)]

    def chords(self):
        """All unordered edges: boundary plus diagonals, sorted."""
        return sorted(set(self.boundary()) | self.diagonals)

    def has_edge(self, i, j):
        if i == j:
            return False
        c = chord(i, j)
        return c in self.diagonals or is_boundary(c, self.n)

    def oriented_edges(self):
        out = []
        for i, j in self.chords():
            out.append((i, j))
            out.append((j, i))
        return sorted(out)

    def neighbors(self, v):
        return _neighbors(self)[v]

    def __str__(self):
        return format_triangulation(self)


@lru_cache(maxsize=4096)
def _neighbors(tri):
    nb = {v: set() for v in range(1, tri.n + 1)}
    for i, j in tri.chords():
        nb[i].add(j)
        nb[j].add(i)
    return {v: tuple(sorted(s)) for v, s in nb.items()}


def parse_triangulation(text):
    s = re.sub(r"\s+", "", text)
    m = re.fullmatch(r"n=(\d+);diag=(.*)", s)
    if not m:
        raise ParseError("expected 'n=<int>;diag=i-j,...'", 0)
    n = int(m[1])
    diags = []
    if m[2]:
        for part in m[2].split(","):
            pm = re.fullmatch(r"(\d+)-(\d+)", part)
            if not pm:
                raise ParseError(f"bad chord {part!r}", s.find(part))
            diags.append((int(pm[1]), int(pm[2])))
    try:
        return Triangulation.of(n, diags)
    except ValueError as e:
        raise ParseError(str(e), 0) from None


def format_triangulation(tri):
    return f"n={tri.n};diag=" + ",".join(f"{i}-{j}" for i, j in sorted(tri.diagonals))


def triangles(tri):
    """The n-2 faces as increasing (hence cyclically ordered) triples."""
    return _triangles(tri)


@lru_cache(maxsize=4096)
def _triangles(tri):
    nb = _neighbors(tri)
    out = []
    for i in range(1, tri.n + 1):
        for j in nb[i]:
            if j <= i:
                continue
            for k in nb[j]:
                if k > j and i in nb[k]:
                    out.append((i, j, k))
    return out


def faces_at(tri, v):
    return [t for t in triangles(tri) if v in t]


def starlike(n, i):
    diags = [chord(i, j) for j in range(1, n + 1) if j != i and not is_boundary(chord(i, j), n)]
    return Triangulation.of(n, diags)


def flip(tri, d):
    """Flip diagonal d; returns (new triangulation, new diagonal, quad).

    With d = {i,k}, i<k, the quad (i,j,k,l) is cyclic: j is the apex of the
    face on the i..k side and l the apex on the other side.
    """
    i, k = chord(*d)
    if (i, k) not in tri.diagonals:
        raise NotADiagonal(f"{(i, k)} is not a diagonal of {format_triangulation(tri)}")
    apexes = [v for t in triangles(tri) if i in t and k in t for v in t if v not in (i, k)]
    j = next(v for v in apexes if i < v < k)
    l = next(v for v in apexes if not i < v < k)
    new = chord(j, l)
    flipped = Triangulation(tri.n, (tri.diagonals - {(i, k)}) | {new})
    return flipped, new, (i, j, k, l)


def _catalan(m):
    c = 1
    for x in range(m):
        c = c * 2 * (2 * x + 1) // (x + 2)
    return c


def catalan(m):
    return _catalan(m)


def _triangulate(verts):
    """All diagonal sets of the convex polygon on the ordered vertex list."""
    if len(verts) < 4:
        yield frozenset()
        return
    a, b = verts[0], verts[-1]
    for m in range(1, len(verts) - 1):
        apex = verts[m]
        left, right = verts[: m + 1], verts[m:]
        new = set()
        if m > 1:
            new.add(chord(a, apex))
        if m < len(verts) - 2:
            new.add(chord(apex, b))
        for dl in _triangulate(left):
            for dr in _triangulate(right):
                yield frozenset(new) | dl | dr


def all_triangulations(n):
    verts = list(range(1, n + 1))
    for diags in _triangulate(verts):
        yield Triangulation(n, diags)


def random_triangulation(n, seed):
    """Uniformly random triangulation, deterministic per seed."""
    rng = random.Random(seed)
    diags = set()

    def go(verts):
        if len(verts) < 4:
            return
        a, b = verts[0], verts[-1]
        weights = [_catalan(m - 1) * _catalan(len(verts) - m - 2) for m in range(1, len(verts) - 1)]
        m = rng.choices(range(1, len(verts) - 1), weights=weights)[0]
        apex = verts[m]
        if m > 1:
            diags.add(chord(a, apex))
        if m < len(verts) - 2:
            diags.add(chord(apex, b))
        go(verts[: m + 1])
        go(verts[m:])

    go(list(range(1, n + 1)))
    return Triangulation(n, frozenset(diags))


def _side(v, c):
    return _strictly_inside(v, c)


def precedes(c1, c2, p):
    """c1 meets the segment from p before c2 does.

    Holds iff c1 separates p from c2, i.e. p and the far endpoint of c2 lie
    on opposite sides of c1.
    """
    far = next(v for v in c2 if v not in c1)
    return _side(p, c1) != _side(far, c1)


def crossing_order(chords, p, q):
    """Sort chords crossing (p,q) by where they meet it, starting at p."""
    cs = [chord(*c) for c in chords]
    for c in cs:
        if not crosses(c, (p, q)):
            raise PreconditionViolation(f"chord {c} does not cross {(p, q)}")
    rank = {c: sum(1 for d in cs if d != c and precedes(d, c, p)) for c in cs}
    return sorted(cs, key=rank.__getitem__)


def crossing_diagonals(tri, p, q):
    """Diagonals of tri crossing (p,q), ordered from p."""
    cs = [d for d in sorted(tri.diagonals) if crosses(d, (p, q))]
    return crossing_order(cs, p, q)
