"""Finite polygons cut out of an unfolded surface.

A surface model names vertices by arbitrary hashable labels and maps every
oriented polygon edge to a word in its own symbol family.  Expansions are
computed on the polygon and read back through that projection.
"""

from ..laurent import expand_paths
from ..polygon import Triangulation, chord, faces_at, triangles
from ..wordcore import AlgebraElement, reduce, word_inv, word_mul


class UnfoldedPolygon:
    def __init__(self, labels, diagonals, project):
        """``labels`` in cyclic order; ``diagonals`` as label pairs.

        ``project(a, b)`` returns the word of the oriented edge (a, b).
        """
        self.labels = list(labels)
        self.index = {v: k + 1 for k, v in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        self.project = project
        self.tri = Triangulation.of(len(self.labels), [chord(self.index[a], self.index[b]) for a, b in diagonals])

    def label(self, k):
        return self.labels[k - 1]

    def edge_word(self, a, b):
        return reduce(self.project(a, b))

    def triangle_relators(self):
        """Projected triangle relators of every face."""
        out = []
        for i, j, k in triangles(self.tri):
            a, b, c = self.label(i), self.label(j), self.label(k)
            w = ()
            for x, y, e in ((a, b, 1), (c, b, -1), (c, a, 1), (b, a, -1), (b, c, 1), (a, c, -1)):
                part = self.edge_word(x, y)
                w = word_mul(w, part if e > 0 else word_inv(part))
            out.append(w)
        return out

    def expand(self, src, dst, rw):
        """Expansion of the curve src -> dst rewritten by rw."""
        lab = self.label
        d = expand_paths(self.tri, self.index[src], self.index[dst],
                         lambda a, b: rw.rewrite_word(self.edge_word(lab(a), lab(b))))
        return AlgebraElement._wrap(d)

    def expand_symbols(self, src, dst):
        """Expansion over projected symbols, without rewriting."""
        lab = self.label
        d = expand_paths(self.tri, self.index[src], self.index[dst],
                         lambda a, b: self.edge_word(lab(a), lab(b)))
        return AlgebraElement._wrap(d)

    def total_angle(self, v, rw):
        """Sum of x_ji^-1 x_jk x_ik^-1 over the faces at v."""
        i = self.index[v]
        terms = {}
        for f in faces_at(self.tri, i):
            j, k = [self.label(u) for u in f if u != i]
            w = rw.rewrite_word(word_inv(self.edge_word(j, v)))
            w = word_mul(w, rw.rewrite_word(self.edge_word(j, k)))
            w = word_mul(w, rw.rewrite_word(word_inv(self.edge_word(v, k))))
            terms[w] = terms.get(w, 0) + 1
        return AlgebraElement(terms)
