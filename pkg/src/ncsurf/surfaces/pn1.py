"""The n-gon with one special puncture, seen through its double cover.

Squaring maps the 2n-gon onto P_n(1).  Vertex i of the 2n-gon goes to
pi(i) = i (i <= n) or i - n, and the oriented chord (i, j) goes to the curve
from pi(i) to pi(j) with sign + when the clockwise arc from i to j is the
shorter one.  Opposite chords (i, i+n) collapse to the loop at pi(i).
"""

from ..laurent import expand_edges
from ..polygon import Triangulation, chord
from ..wordcore import AlgebraElement, gen_of, letter, pn1_gen, reduce


def pi(n, i):
    return i if i <= n else i - n


def sign(n, i, j):
    return "+" if (j - i) % (2 * n) < n else "-"


def project_edge(n, i, j):
    """P_n(1) symbol of the 2n-gon edge (i, j)."""
    if (j - i) % (2 * n) == n:
        return pn1_gen("loop", pi(n, i))
    return pn1_gen(sign(n, i, j), pi(n, i), pi(n, j))


def lift(n, i, j=None, eps="+"):
    """A 2n-gon chord over the curve (i, j, eps), or over the loop at i."""
    if j is None or j == i:
        return i, i + n
    for a in (i, i + n):
        for b in (j, j + n):
            if sign(n, a, b) == eps:
                return a, b
    raise ValueError(f"no lift for ({i}, {j}, {eps})")


def pn1_project(n, p):
    """Relabel an element over 2n-gon edge symbols to P_n(1) symbols."""
    terms = {}
    for w, c in p.raw.items():
        letters = []
        for x in w:
            a, b = gen_of(abs(x)).idx
            letters.append(letter(project_edge(n, a, b), 1 if x > 0 else -1))
        u = reduce(letters)
        c = terms.get(u, 0) + c
        if c:
            terms[u] = c
        else:
            del terms[u]
    return AlgebraElement._wrap(terms)


def _turn(n, v):
    return v + n if v <= n else v - n


def lifted_triangulation(n, curves):
    """2n-gon triangulation made of both lifts of each listed curve.

    ``curves`` holds (i, j, eps) triples, or (i,) for the loop at i.
    """
    diags = set()
    for c in curves:
        a, b = lift(n, *c) if len(c) == 3 else lift(n, c[0])
        diags.add(chord(a, b))
        diags.add(chord(_turn(n, a), _turn(n, b)))
    return Triangulation.of(2 * n, [d for d in diags if (d[1] - d[0]) % (2 * n) not in (1, 2 * n - 1)])


def pn1_expand(n, tri, i, j=None, eps="+"):
    """Expansion of a P_n(1) curve from one of its lifts to the 2n-gon."""
    a, b = lift(n, i, j, eps)
    return pn1_project(n, expand_edges(tri, a, b))


__all__ = ["pi", "sign", "project_edge", "lift", "pn1_project", "lifted_triangulation", "pn1_expand"]
