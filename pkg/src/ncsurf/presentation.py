"""Triangle groups: free bases, rewriting, angles, sectors, retraction."""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import EdgeNotInTriangulation, EliminationStuck, NotATriangle
from .polygon import Triangulation, chord, faces_at, triangles
from .wordcore import (
    AlgebraElement,
    edge,
    gen_id,
    gen_of,
    letter,
    reduce,
    word_inv,
    word_mul,
)


def triangle_relator(i, j, k, sym=edge):
    """t_ij t_kj^-1 t_ki t_ji^-1 t_jk t_ik^-1 as a word."""
    return reduce([
        letter(sym(i, j)), -gen_id(sym(k, j)), letter(sym(k, i)),
        -gen_id(sym(j, i)), letter(sym(j, k)), -gen_id(sym(i, k)),
    ])


class Rewriter:
    """Total map from generator symbols to words over a free basis."""

    def __init__(self, basis, rules):
        self.basis = tuple(basis)
        self._rules = {gen_id(g): w for g, w in rules.items()}
        self._inv = {}

    @property
    def rules(self):
        return {gen_of(x): w for x, w in self._rules.items()}

    def __contains__(self, g):
        return gen_id(g) in self._rules

    def letter_word(self, x):
        """Rewrite a signed letter."""
        if x > 0:
            return self._rules[x]
        w = self._inv.get(x)
        if w is None:
            w = word_inv(self._rules[-x])
            self._inv[x] = w
        return w

    def of(self, g):
        return self._rules[gen_id(g)]

    def rewrite_word(self, w):
        out = ()
        for x in w:
            out = word_mul(out, self.letter_word(x))
        return out

    def rewrite(self, p):
        terms = {}
        for w, c in p.raw.items():
            u = self.rewrite_word(w)
            c = terms.get(u, 0) + c
            if c:
                terms[u] = c
            else:
                del terms[u]
        return AlgebraElement._wrap(terms)


def solve_relations(symbols, relators, unknowns):
    """Eliminate ``unknowns`` using ``relators`` (words equal to 1).

    Every symbol not listed as unknown is a basis letter.  The scan solves a
    relator as soon as it mentions exactly one unsolved unknown, which must
    occur exactly once.  Returns a Rewriter.
    """
    unknown_ids = {gen_id(g) for g in unknowns}
    basis = [g for g in symbols if gen_id(g) not in unknown_ids]
    rules = {gen_id(g): (gen_id(g),) for g in basis}
    pending = list(relators)
    while len(rules) < len(symbols):
        progress = False
        for r in list(pending):
            open_ = [pos for pos, x in enumerate(r) if abs(x) not in rules]
            if len(open_) != 1:
                continue
            pos = open_[0]
            x = r[pos]
            rest = r[pos + 1:] + r[:pos]
            w = ()
            for y in rest:
                w = word_mul(w, rules[y] if y > 0 else word_inv(rules[-y]))
            # x * rest = 1
            rules[abs(x)] = word_inv(w) if x > 0 else w
            pending.remove(r)
            progress = True
        if not progress:
            missing = sorted(str(gen_of(u)) for u in unknown_ids if u not in rules)
            raise EliminationStuck(f"no relator isolates any of {missing}")
    rw = Rewriter(basis, {gen_of(x): w for x, w in rules.items()})
    for r in relators:
        if rw.rewrite_word(r):
            raise EliminationStuck("a relator survives elimination; the basis is not free")
    return rw


@dataclass(frozen=True)
class DirectedTriangulation:
    base: Triangulation
    orientation: tuple = field(default=None)
    dropped_edge: tuple = (1, 2)

    def __post_init__(self):
        if self.orientation is None:
            object.__setattr__(self, "orientation", tuple(sorted(self.base.diagonals)))
        oriented = {chord(*o) for o in self.orientation}
        if oriented != set(self.base.diagonals):
            raise ValueError("orientation must pick one direction of every diagonal")
        i, j = self.dropped_edge
        if chord(i, j) in self.base.diagonals or not self.base.has_edge(i, j):
            raise ValueError("the dropped edge must be a boundary edge")

    def members(self):
        out = []
        for i, j in self.base.boundary():
            out += [(i, j), (j, i)]
        out += list(self.orientation)
        return sorted(out)

    def free_generators(self):
        return [e for e in self.members() if e != tuple(self.dropped_edge)]


def build_rewriter(tri, dtri=None):
    return _build_rewriter(tri, dtri or DirectedTriangulation(tri))


@lru_cache(maxsize=2048)
def _build_rewriter(tri, dtri):
    symbols = [edge(i, j) for i, j in tri.oriented_edges()]
    keep = set(dtri.members())
    unknowns = [edge(i, j) for i, j in tri.oriented_edges() if (i, j) not in keep]
    unknowns.append(edge(*dtri.dropped_edge))
    relators = [triangle_relator(*t) for t in triangles(tri)]
    rw = solve_relations(symbols, relators, unknowns)
    rw.basis = tuple(sorted(rw.basis))
    return rw


def _rw(tri, rw):
    return rw if rw is not None else build_rewriter(tri)


def angle_word(tri, face, rw=None, at=None):
    """T_i^{jk} = x_ji^-1 x_jk x_ik^-1 for the face (i,j,k), vertex i first."""
    i, j, k = face
    if tuple(sorted(face)) not in triangles(tri):
        raise NotATriangle(f"{face} is not a face")
    rw = _rw(tri, rw)
    w = word_inv(rw.of(edge(j, i)))
    w = word_mul(w, rw.of(edge(j, k)))
    return word_mul(w, word_inv(rw.of(edge(i, k))))


def sector_word(tri, i, j, k, rw=None):
    """y_ij^k = x_ki^-1 x_kj."""
    if i == j:
        return ()
    for a, b in ((k, i), (k, j)):
        if not tri.has_edge(a, b):
            raise EdgeNotInTriangulation(f"({a},{b}) is not an edge of the triangulation")
    rw = _rw(tri, rw)
    return word_mul(word_inv(rw.of(edge(k, i))), rw.of(edge(k, j)))


def total_angle(tri, i, rw=None):
    rw = _rw(tri, rw)
    terms = {}
    for f in faces_at(tri, i):
        j, k = [v for v in f if v != i]
        w = angle_word(tri, (i, j, k), rw)
        terms[w] = terms.get(w, 0) + 1
    return AlgebraElement._wrap(terms)


def big_triangle_relations(n):
    """One relator per 2<=i<j<k<=n, over t_ij (i<j) and t_i1."""
    out = []
    for i, j, k in combinations(range(2, n + 1), 3):
        t = lambda a, b, e=1: letter(edge(a, b), e)  # noqa: E731
        lhs = [t(i, 1), t(j, 1, -1), t(j, k), t(1, k, -1), t(1, j), t(i, j, -1), t(i, k)]
        rhs = [t(i, k), t(1, k, -1), t(1, j), t(i, j, -1), t(i, 1), t(j, 1, -1), t(j, k)]
        out.append(reduce(lhs + list(word_inv(tuple(rhs)))))
    return out


def retraction_tau(tri, rw=None):
    """Images tau_ij in the free basis of the triangle group of tri.

    Peels an ear v with neighbours a (before v) and b (after v):
    tau_{v,i} = t_{v,b} tau_{a,b}^-1 tau_{a,i} and
    tau_{i,v} = tau_{i,a} tau_{b,a}^-1 t_{b,v} for i != a, while the
    edges (v,a), (a,v) keep their own generators.
    """
    rw = _rw(tri, rw)

    def t(a, b):
        return rw.of(edge(a, b))

    def go(verts, diags):
        m = len(verts)
        if m == 3:
            return {(a, b): t(a, b) for a in verts for b in verts if a != b}
        for p in range(m):
            a, b = verts[p - 1], verts[(p + 1) % m]
            if chord(a, b) in diags:
                break
        else:  # pragma: no cover - every polygon with >3 vertices has two ears
            raise RuntimeError("no ear found")
        v = verts[p]
        sub = verts[:p] + verts[p + 1:]
        tau = go(sub, diags - {chord(a, b)})
        alpha = word_mul(t(v, b), word_inv(tau[(a, b)]))
        delta = word_mul(word_inv(tau[(b, a)]), t(b, v))
        for i in sub:
            if i == a:
                tau[(v, a)] = t(v, a)
                tau[(a, v)] = t(a, v)
            else:
                tau[(v, i)] = word_mul(alpha, tau[(a, i)])
                tau[(i, v)] = word_mul(tau[(i, a)], delta)
        return tau

    return go(list(range(1, tri.n + 1)), frozenset(tri.diagonals))


def substitute_word(w, images):
    """Replace each polygon-edge letter of w by images[(i,j)] (a word)."""
    out = ()
    for x in w:
        g = gen_of(x)
        img = images[g.idx]
        out = word_mul(out, img if x > 0 else word_inv(img))
    return out
