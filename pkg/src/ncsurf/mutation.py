"""Flip homomorphisms between adjacent triangulations and their chains."""

from collections import deque
from dataclasses import dataclass

from .errors import NonUnitInverse, NotAUnit
from .laurent import expand_edges, expand_x
from .oracle import (
    DEFAULT_DIMS,
    DEFAULT_TRIALS,
    Elem,
    Evaluator,
    MatrixAssignment,
    random_assignment,
    verify_identities,
)
from .polygon import flip
from .presentation import build_rewriter, total_angle
from .wordcore import AlgebraElement, edge, gen_id, gen_of, substitute


@dataclass(frozen=True)
class FlipHom:
    """Ring map from the source triangle group algebra into the target one.

    The source triangulation contains the diagonal {j,l}; the target replaces
    it by {i,k}.  ``images`` sends every oriented source edge to an element
    over the target basis.
    """

    source: object
    target: object
    quad: tuple
    images: dict

    def image(self, a, b):
        return self.images[(a, b)]


def exchange_images(tri, quad, rw=None):
    """t_jl and t_lj in terms of the quadrilateral (i,j,k,l) of tri, {i,k} in tri."""
    i, j, k, l = quad
    rw = rw or build_rewriter(tri)
    t = lambda a, b: AlgebraElement.from_word(rw.of(edge(a, b)))  # noqa: E731
    ti = lambda a, b: AlgebraElement.from_word(tuple(-x for x in reversed(rw.of(edge(a, b)))))  # noqa: E731
    jl = t(j, k) * ti(i, k) * t(i, l) + t(j, i) * ti(k, i) * t(k, l)
    lj = t(l, i) * ti(k, i) * t(k, j) + t(l, k) * ti(i, k) * t(i, j)
    return jl, lj


def flip_hom(source, d):
    """The flip homomorphism for the diagonal d of source."""
    target, _, (a, b, c, e) = flip(source, d)
    # the source diagonal is {a,c}; in the target quad (i,j,k,l) it is {j,l}
    quad = (b, c, e, a)
    i, j, k, l = quad
    rw = build_rewriter(target)
    images = {}
    for x, y in source.oriented_edges():
        if {x, y} != {j, l}:
            images[(x, y)] = AlgebraElement.from_word(rw.of(edge(x, y)))
    images[(j, l)], images[(l, j)] = exchange_images(target, quad, rw)
    return FlipHom(source, target, quad, images)


def _edge_image(h):
    def image(x):
        g = gen_of(x)
        return h.images[g.idx]

    return image


def _subst(p, image):
    try:
        return substitute(p, image)
    except NotAUnit as exc:
        raise NonUnitInverse(str(exc)) from None


def apply(h, p):
    """Image of p, given over the source basis, as an element over the target basis.

    Raises NonUnitInverse when a multi-term image would have to be inverted.
    """
    return _subst(p, _edge_image(h))


def pull_back_edges(h, target_edges, dim):
    """Matrices for the source edges from matrices for the target edges."""
    ev = Evaluator(MatrixAssignment(dim, {edge(*e): m for e, m in target_edges.items()}))
    out = {}
    for e in h.source.oriented_edges():
        # basis letters are oriented edges, so images evaluate directly
        out[e] = target_edges[e] if h.target.has_edge(*e) else ev(h.images[e])
    return out


def basis_edge_matrices(tri, basis_matrices, dim):
    """All oriented-edge matrices of tri from matrices on its free basis."""
    rw = build_rewriter(tri)
    ev = Evaluator(MatrixAssignment(dim, dict(basis_matrices)))
    return {e: ev(AlgebraElement.from_word(rw.of(edge(*e)))) for e in tri.oriented_edges()}


def flip_compatible(source, d, pairs=None, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0):
    """Check h(t^source_pq) = t^target_pq for the flip of d.

    Tries exact substitution first, over the edge-level expansion and then
    over the basis-level one; remaining pairs go to the matrix oracle.
    Returns a list of (p, q, method, ok) with method "symbolic" or "oracle".
    """
    h = flip_hom(source, d)
    tgt = h.target
    rws, rwt = build_rewriter(source), build_rewriter(tgt)
    n = source.n
    if pairs is None:
        pairs = [(p, q) for p in range(1, n + 1) for q in range(1, n + 1) if p != q]
    out = []
    deferred = []
    for p, q in pairs:
        want = expand_x(tgt, p, q, rwt)
        got = None
        for form in (lambda: expand_edges(source, p, q), lambda: expand_x(source, p, q, rws)):
            try:
                got = apply(h, form())
                break
            except NonUnitInverse:
                continue
        if got is None:
            deferred.append((p, q))
        else:
            out.append((p, q, "symbolic", got == want))
    if deferred:
        reports = oracle_flip_check(h, deferred, dims, trials, seed)
        for (p, q), r in zip(deferred, reports):
            out.append((p, q, "oracle", r["result"] == "PASS"))
    return out


def oracle_flip_check(h, pairs, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0):
    """Matrix check of flip compatibility for the given (p,q) pairs."""
    src, tgt = h.source, h.target
    rwt = build_rewriter(tgt)

    def assign(dim, s):
        base = random_assignment(rwt.basis, dim, s)
        tedges = basis_edge_matrices(tgt, base.matrices, dim)
        sedges = pull_back_edges(h, tedges, dim)
        # shared edges carry the same matrix on both sides
        mats = {edge(*e): m for e, m in {**sedges, **tedges}.items()}
        return MatrixAssignment(dim, mats, s)

    items = []
    for p, q in pairs:
        lhs, rhs = expand_edges(src, p, q), expand_edges(tgt, p, q)
        items.append((f"flip {src} at {h.quad}: t_{p}{q}", Elem(lhs), Elem(rhs)))
    return verify_identities(items, dims=dims, trials=trials, seed=seed, assign=assign)


def total_angle_transported(source, d, i):
    """Symbolic image of T_i over source equals T_i over the flipped triangulation.

    Returns True/False, or None when substitution needs a non-unit inverse.
    """
    h = flip_hom(source, d)
    try:
        img = apply(h, total_angle(source, i))
    except NonUnitInverse:
        return None
    return img == total_angle(h.target, i)


def flip_path(start, goal):
    """Shortest flip path, breadth first, trying diagonals in lexicographic order."""
    if start == goal:
        return [start]
    prev = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for d in sorted(cur.diagonals):
            nxt, _, _ = flip(cur, d)
            if nxt in prev:
                continue
            prev[nxt] = (cur, d)
            if nxt == goal:
                path = [(nxt, None)]
                while prev[path[-1][0]] is not None:
                    path.append(prev[path[-1][0]])
                steps = [t for t, _ in reversed(path)]
                return steps
            queue.append(nxt)
    raise ValueError("triangulations are not connected by flips")


class PsiChain:
    """Composite of flip homomorphisms along a path of triangulations."""

    def __init__(self, path):
        self.path = list(path)
        self.homs = []
        for a, b in zip(self.path, self.path[1:]):
            (d,) = a.diagonals - b.diagonals
            self.homs.append(flip_hom(a, d))

    @property
    def source(self):
        return self.path[0]

    @property
    def target(self):
        return self.path[-1]

    def __call__(self, p):
        """Symbolic image (over the target basis); may raise NonUnitInverse."""
        for h in self.homs:
            p = apply(h, p)
        return p

    def pull_back(self, target_basis_matrices, dim):
        """Source edge matrices induced by matrices on the target basis."""
        edges = basis_edge_matrices(self.target, target_basis_matrices, dim)
        for h in reversed(self.homs):
            edges = pull_back_edges(h, edges, dim)
        return edges

    def check(self, items, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0):
        """Verify psi(src) = tgt for (name, src over source basis, tgt over target basis).

        Each item is tried symbolically first; the rest share matrix trials.
        Returns (name, method, ok) triples.
        """
        out = []
        deferred = []
        for name, src, tgt in items:
            try:
                out.append((name, "symbolic", self(src) == tgt))
            except NonUnitInverse:
                deferred.append((name, src, tgt))
        if deferred:
            rwt = build_rewriter(self.target)
            rws = build_rewriter(self.source)

            def assign(dim, s):
                base = random_assignment(rwt.basis, dim, s)
                src_edges = self.pull_back(base.matrices, dim)
                mats = dict(base.matrices)
                lifted = {}
                for g in rws.basis:
                    lifted[_tag(g)] = src_edges[g.idx]
                mats.update(lifted)
                return MatrixAssignment(dim, mats, s)

            pairs = [(name, Elem(_retag(src)), Elem(tgt)) for name, src, tgt in deferred]
            reps = verify_identities(pairs, dims=dims, trials=trials, seed=seed, assign=assign)
            out += [(r["identity"], "oracle", r["result"] == "PASS") for r in reps]
        return out


# Source and target bases share edge names but carry different matrices in the
# oracle, so source letters are renamed into a private abstract family.
def _tag(g):
    from .wordcore import abstract

    i, j = g.idx
    return abstract(f"src_{i}_{j}")


def _retag(p):
    terms = {}
    for w, c in p.raw.items():
        terms[tuple(gen_id(_tag(gen_of(abs(x)))) * (1 if x > 0 else -1) for x in w)] = c
    return AlgebraElement(terms)


def psi_chain(start, goal):
    return PsiChain(flip_path(start, goal))


def basis_letters(tri):
    rw = build_rewriter(tri)
    return [(g, AlgebraElement.from_gen(g)) for g in rw.basis]


def round_trip(tri, d, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0):
    """Flip d and flip back: every basis letter must return to itself."""
    there, new, _ = flip(tri, d)
    chain = PsiChain([tri, there, tri])
    items = [(f"round trip {g}", p, p) for g, p in basis_letters(tri)]
    return chain.check(items, dims, trials, seed)
