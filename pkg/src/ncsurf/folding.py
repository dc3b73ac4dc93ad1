"""Subgroup membership in free groups by Stallings folding.

Every edge of the folded graph carries a label in the ambient free group
and an annotation in the free group on the subgroup generators.  Folding
keeps the invariant ``eval(annotation) = p(src) * label * p(dst)^-1`` for a
vertex potential ``p`` with ``p(base) = 1``, so reading a word around a loop
at the base vertex also reads off its factorization.
"""

from .wordcore import reduce, word_inv, word_mul

BASE = 0


class _Edge:
    __slots__ = ("src", "lab", "dst", "ann")

    def __init__(self, src, lab, dst, ann):
        self.src, self.lab, self.dst, self.ann = src, lab, dst, ann


def _ann_mul(a, b):
    return word_mul(a, b)


class SubgroupGraph:
    def __init__(self, generators):
        self.generators = [reduce(g) for g in generators]
        self.edges = []
        nxt = 1
        for k, g in enumerate(self.generators):
            if not g:
                continue
            prev = BASE
            for pos, x in enumerate(g):
                last = pos == len(g) - 1
                dst = BASE if last else nxt
                if not last:
                    nxt += 1
                ann = ((k + 1),) if last else ()
                self._add(prev, x, dst, ann)
                prev = dst
        self._fold()

    def _add(self, src, x, dst, ann):
        # store with a positive label
        if x > 0:
            self.edges.append(_Edge(src, x, dst, ann))
        else:
            self.edges.append(_Edge(dst, -x, src, word_inv(ann)))

    def _outgoing(self, v):
        """(letter, edge, forward) triples leaving v."""
        for e in self.edges:
            if e.src == v:
                yield e.lab, e, True
            if e.dst == v:
                yield -e.lab, e, False

    def _fold(self):
        while True:
            pair = self._find_fold()
            if pair is None:
                return
            self._merge(*pair)

    def _find_fold(self):
        seen = {}
        for e in self.edges:
            for key, end in (((e.src, e.lab), e.dst), ((e.dst, -e.lab), e.src)):
                if key in seen and seen[key][0] is not e:
                    return seen[key], (e, key[1] > 0)
                seen.setdefault(key, (e, key[1] > 0))
        return None

    def _merge(self, first, second):
        e1, fwd1 = first
        e2, fwd2 = second
        # annotations and endpoints as read leaving the shared vertex
        a1 = e1.ann if fwd1 else word_inv(e1.ann)
        v1 = e1.dst if fwd1 else e1.src
        a2 = e2.ann if fwd2 else word_inv(e2.ann)
        v2 = e2.dst if fwd2 else e2.src
        self.edges.remove(e2)
        if v1 == v2:
            return
        if v2 == BASE:
            v1, v2, a1, a2 = v2, v1, a2, a1
        delta = word_mul(word_inv(a1), a2)
        for e in self.edges:
            if e.src == v2:
                e.src = v1
                e.ann = word_mul(delta, e.ann)
            if e.dst == v2:
                e.dst = v1
                e.ann = word_mul(e.ann, word_inv(delta))

    def read(self, w):
        """Annotation of the path labelled w from the base, or None."""
        v = BASE
        ann = ()
        for x in reduce(w):
            step = None
            for lab, e, fwd in self._outgoing(v):
                if lab == x:
                    step = (e, fwd)
                    break
            if step is None:
                return None
            e, fwd = step
            if fwd:
                ann = word_mul(ann, e.ann)
                v = e.dst
            else:
                ann = word_mul(ann, word_inv(e.ann))
                v = e.src
        if v != BASE:
            return None
        return ann


def stallings_membership(subgroup_generators, w):
    """Factor w over the subgroup generators, or return None.

    The factorization is a list of ``(index, exponent)`` pairs meaning
    ``prod(gens[index] ** exponent)``.
    """
    g = SubgroupGraph(subgroup_generators)
    ann = g.read(w)
    if ann is None:
        return None
    return [(abs(a) - 1, 1 if a > 0 else -1) for a in ann]


def multiply_factorization(generators, factorization):
    out = ()
    for k, e in factorization:
        g = reduce(generators[k])
        out = word_mul(out, g if e > 0 else word_inv(g))
    return out
