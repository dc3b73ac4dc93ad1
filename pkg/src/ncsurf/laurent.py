"""Admissible sequences and noncommutative Laurent expansions."""

import sys
from fractions import Fraction

from .errors import EdgeNotInTriangulation
from .polygon import chord, crossing_diagonals, crosses, flip
from .presentation import build_rewriter, sector_word
from .wordcore import AlgebraElement, edge, gen_id, letter, reduce, word_inv, word_mul


def _crossing_rank(tri, p, q):
    return {c: r for r, c in enumerate(crossing_diagonals(tri, p, q))}


def enumerate_admissible(tri, i, j):
    """All (i,j,tri)-admissible sequences in depth-first order."""
    if i == j:
        raise ValueError("endpoints must differ")
    rank = _crossing_rank(tri, i, j)
    out = []
    path = [i]

    def odd(v, last):
        for w in tri.neighbors(v):
            r = rank.get(chord(v, w))
            if r is not None:
                if r <= last:
                    continue
                nl = r
            else:
                nl = last
            path.append(w)
            if w == j:
                out.append(tuple(path))
            else:
                even(w, nl)
            path.pop()

    def even(w, last):
        for u in tri.neighbors(w):
            r = rank.get(chord(w, u))
            if r is None or r <= last:
                continue
            path.append(u)
            odd(u, r)
            path.pop()

    odd(i, -1)
    return out


def x_monomial(seq):
    """x_{i1 i2} x_{i3 i2}^-1 x_{i3 i4} ... over edge symbols."""
    letters = []
    for s in range(len(seq) - 1):
        a, b = seq[s], seq[s + 1]
        letters.append(letter(edge(a, b)) if s % 2 == 0 else -gen_id(edge(b, a)))
    return reduce(letters)


def expand_paths(tri, p, q, letter_word):
    """Sum over admissible sequences of products of edge words.

    ``letter_word(a, b)`` gives the word for the oriented edge (a,b).  The
    sum is computed by memoised dynamic programming over the search states
    (vertex, last crossing, parity), so shared suffixes are multiplied once.
    Returns a raw dict word -> coefficient.
    """
    rank = _crossing_rank(tri, p, q)
    fwd = {}
    bwd = {}

    def lw(a, b):
        w = fwd.get((a, b))
        if w is None:
            w = fwd[(a, b)] = letter_word(a, b)
        return w

    def lw_inv(a, b):
        w = bwd.get((a, b))
        if w is None:
            w = bwd[(a, b)] = word_inv(lw(a, b))
        return w

    memo_f = {}
    memo_g = {}

    def prepend(w, d, out):
        lu = len(w)
        get = out.get
        for v, c in d.items():
            lv = len(v)
            k = 0
            while k < lu and k < lv and w[lu - 1 - k] == -v[k]:
                k += 1
            u = w[: lu - k] + v[k:] if k else w + v
            c = get(u, 0) + c
            if c:
                out[u] = c
            else:
                del out[u]

    def f(v, last):
        key = (v, last)
        res = memo_f.get(key)
        if res is not None:
            return res
        out = {}
        for w in tri.neighbors(v):
            r = rank.get(chord(v, w))
            if r is not None:
                if r <= last:
                    continue
                nl = r
            else:
                nl = last
            sub = g(w, nl)
            if sub:
                prepend(lw(v, w), sub, out)
        memo_f[key] = out
        return out

    def g(w, last):
        if w == q:
            return {(): 1}
        key = (w, last)
        res = memo_g.get(key)
        if res is not None:
            return res
        out = {}
        for u in tri.neighbors(w):
            r = rank.get(chord(w, u))
            if r is None or r <= last:
                continue
            sub = f(u, r)
            if sub:
                prepend(lw_inv(u, w), sub, out)
        memo_g[key] = out
        return out

    limit = sys.getrecursionlimit()
    need = 4 * (len(rank) + 4) + 100
    if need > limit:
        sys.setrecursionlimit(need)
    return f(p, -1)


def expand_edges(tri, p, q):
    """t^Delta_pq over oriented-edge symbols, before rewriting."""
    d = expand_paths(tri, p, q, lambda a, b: (letter(edge(a, b)),))
    return AlgebraElement._wrap(d)


def expand_x(tri, p, q, rw=None):
    """x_pq as an element of the group algebra of the triangle group."""
    if p == q:
        raise ValueError("endpoints must differ")
    rw = rw or build_rewriter(tri)
    d = expand_paths(tri, p, q, lambda a, b: rw.of(edge(a, b)))
    return AlgebraElement._wrap(d)


def expand_x_by_enumeration(tri, p, q, rw=None):
    """Same as expand_x, summing explicit monomials (slow reference)."""
    rw = rw or build_rewriter(tri)
    terms = {}
    for seq in enumerate_admissible(tri, p, q):
        w = rw.rewrite_word(x_monomial(seq))
        terms[w] = terms.get(w, 0) + 1
    return AlgebraElement(terms)


def y_monomial(tri, k, seq, rw=None):
    """y_{(k, i)} = y^{i1}_{k i2} y^{i3}_{i2 i4} ..."""
    rw = rw or build_rewriter(tri)
    full = (k,) + tuple(seq)
    w = ()
    for s in range(1, len(full) - 1, 2):
        w = word_mul(w, sector_word(tri, full[s - 1], full[s + 1], full[s], rw))
    return w


def expand_y(tri, i, j, k, rw=None):
    """y^i_{kj} as a sum over Adm(i,j); requires (i,k) to be an edge."""
    if not tri.has_edge(i, k):
        raise EdgeNotInTriangulation(f"({i},{k}) is not an edge of the triangulation")
    rw = rw or build_rewriter(tri)
    terms = {}
    for seq in enumerate_admissible(tri, i, j):
        w = y_monomial(tri, k, seq, rw)
        terms[w] = terms.get(w, 0) + 1
    return AlgebraElement(terms)


def ptolemy_eval(tri, values, target):
    """Commutative lambda-length of target from values on the edges of tri.

    ``values`` maps unordered edges (i<j) to positive rationals.  Flips the
    diagonal nearest p until {p,q} appears, using x_ik x_jl = x_ij x_kl + x_il x_jk.
    """
    p, q = target
    vals = {chord(*e): Fraction(v) for e, v in values.items()}
    cur = tri
    while not cur.has_edge(p, q):
        d = crossing_diagonals(cur, p, q)[0]
        cur, new, (i, j, k, l) = flip(cur, d)
        v = lambda a, b: vals[chord(a, b)]  # noqa: E731
        vals[new] = (v(i, j) * v(k, l) + v(i, l) * v(j, k)) / v(i, k)
    return vals[chord(p, q)]


def abelianize(p, values):
    """Evaluate p sending both orientations of an edge to values[{i,j}]."""
    from .wordcore import gen_of

    total = Fraction(0)
    for w, c in p.raw.items():
        term = Fraction(c)
        for x in w:
            val = Fraction(values[chord(*gen_of(x).idx)])
            term = term * val if x > 0 else term / val
        total += term
    return total


def exchange_identity_holds(tri, i, j, k, l, exp=None):
    """Check x_jl = x_jk x_ik^-1 x_il + x_ji x_ki^-1 x_kl symbolically.

    Only meaningful when (i,k) is an edge, so both inverses are units.
    ``exp`` is an optional cache (p,q) -> expansion.
    """
    from .wordcore import alg_inv_unit

    rw = build_rewriter(tri)
    cache = exp if exp is not None else {}

    def x(a, b):
        r = cache.get((a, b))
        if r is None:
            r = cache[(a, b)] = expand_x(tri, a, b, rw)
        return r

    rhs = x(j, k) * alg_inv_unit(x(i, k)) * x(i, l) + x(j, i) * alg_inv_unit(x(k, i)) * x(k, l)
    return x(j, l) == rhs


def triangle_identity_holds(tri, i, j, k, exp=None):
    """x_ij x_kj^-1 x_ki = x_ik x_jk^-1 x_ji, needs (j,k) an edge."""
    from .wordcore import alg_inv_unit

    rw = build_rewriter(tri)
    cache = exp if exp is not None else {}

    def x(a, b):
        r = cache.get((a, b))
        if r is None:
            r = cache[(a, b)] = expand_x(tri, a, b, rw)
        return r

    lhs = x(i, j) * alg_inv_unit(x(k, j)) * x(k, i)
    rhs = x(i, k) * alg_inv_unit(x(j, k)) * x(j, i)
    return lhs == rhs


def relation_checks(tri):
    """Every symbolically checkable triangle and exchange identity on tri.

    Triangle identities need {j,k} to be an edge, exchange identities need the
    diagonal {i,k} of a cyclic quadruple (i,j,k,l).  Returns (count, failures).
    """
    from itertools import permutations

    from .wordcore import alg_inv_unit

    rw = build_rewriter(tri)
    n = tri.n
    cache = {}

    def x(a, b):
        r = cache.get((a, b))
        if r is None:
            r = cache[(a, b)] = expand_x(tri, a, b, rw)
        return r

    inv = {e: alg_inv_unit(x(*e)) for e in tri.oriented_edges()}
    count, failures = 0, []
    for j, k in tri.oriented_edges():
        for i in range(1, n + 1):
            if i in (j, k):
                continue
            count += 1
            if x(i, j) * inv[(k, j)] * x(k, i) != x(i, k) * inv[(j, k)] * x(j, i):
                failures.append(("triangle", i, j, k))
    for i, k in tri.oriented_edges():
        if chord(i, k) not in tri.diagonals:
            continue
        for j, l in permutations(range(1, n + 1), 2):
            if not 0 < (j - i) % n < (k - i) % n < (l - i) % n:
                continue
            count += 1
            if x(j, l) != x(j, k) * inv[(i, k)] * x(i, l) + x(j, i) * inv[(k, i)] * x(k, l):
                failures.append(("exchange", i, j, k, l))
    return count, failures


__all__ = [
    "enumerate_admissible", "x_monomial", "expand_paths", "expand_edges", "expand_x",
    "expand_x_by_enumeration", "y_monomial", "expand_y", "ptolemy_eval", "abelianize",
    "exchange_identity_holds", "triangle_identity_holds", "relation_checks", "crosses",
]
