"""The acceptance battery: one self-contained check per numbered criterion.

Each check returns a dict with keys id, title, result ("PASS"/"FAIL"),
seconds and detail.  Shared by ``ncsurf suite`` and the test suite.
"""

import random
import sys
import time
from fractions import Fraction

from .laurent import (
    abelianize,
    expand_edges,
    expand_x,
    expand_y,
    ptolemy_eval,
    relation_checks,
)
from .mutation import flip_compatible
from .oracle import (
    QuasiPluckerMismatch,
    all_pass,
    plucker_symbols,
    quasi_plucker,
    random_assignment,
    total_angle_invariance,
    verify_identities,
    y_relation_pairs,
)
from .polygon import Triangulation, all_triangulations, chord, random_triangulation, starlike
from .presentation import big_triangle_relations, build_rewriter, retraction_tau, sector_word, substitute_word
from .surfaces.cylinder import CylinderModel, cylinder_check
from .surfaces.pn1 import lifted_triangulation, pn1_expand
from .surfaces.rank import Free, OneRelator, SurfaceInvariants, Trivial, annulus, polygon, triangle_group_type
from .surfaces.strip import strip_conserved, strip_relation_check
from .wordcore import AlgebraElement, abstract, element_from_string, letter, reduce, word_inv, word_mul

PENTAGON = Triangulation.of(5, [(1, 3), (1, 4)])
HEXAGON = Triangulation.of(6, [(1, 3), (3, 6), (4, 6)])

PENTAGON_X25 = "t(2,1)*t(4,1)^-1*t(4,5) + t(2,3)*t(1,3)^-1*t(1,5) + t(2,1)*t(3,1)^-1*t(3,4)*t(1,4)^-1*t(1,5)"
HEXAGON_X25 = (
    "t(2,3)*t(6,3)^-1*t(6,5) + t(2,1)*t(3,1)^-1*t(3,6)*t(4,6)^-1*t(4,5)"
    " + t(2,1)*t(3,1)^-1*t(3,4)*t(6,4)^-1*t(6,5) + t(2,3)*t(1,3)^-1*t(1,6)*t(4,6)^-1*t(4,5)"
    " + t(2,3)*t(1,3)^-1*t(1,6)*t(3,6)^-1*t(3,4)*t(6,4)^-1*t(6,5)"
)
# y^k_ij written as (i, j, k); one monomial per tuple of sectors
PENTAGON_Y = [[(1, 5, 4)], [(1, 3, 2), (3, 5, 1)], [(1, 4, 3), (4, 5, 1)]]
HEXAGON_Y = [
    [(1, 6, 3), (6, 5, 4)], [(1, 3, 2), (3, 5, 6)], [(1, 4, 3), (4, 5, 6)],
    [(1, 3, 2), (3, 6, 1), (6, 5, 4)], [(1, 3, 2), (3, 6, 1), (6, 4, 3), (4, 5, 6)],
]
HEXAGON_Y_AS_PRINTED = [(1, 4, 3), (4, 6, 5)]

PN1_X2 = "x+(2,1)*x(1)^-1*x-(1,2) + x-(2,1)*x(1)^-1*x+(1,2)"
PN1_X3 = (
    "x+(3,1)*x(1)^-1*x-(1,3) + x+(3,1)*x+(2,1)^-1*x-(2,1)*x+(2,1)^-1*x+(2,3)"
    " + x-(3,2)*x-(1,2)^-1*x(1)*x+(2,1)^-1*x+(2,3) + x-(3,2)*x-(1,2)^-1*x+(1,2)*x-(1,2)^-1*x-(1,3)"
    " + x+(3,1)*x+(2,1)^-1*x-(2,1)*x(1)^-1*x+(1,2)*x-(1,2)^-1*x-(1,3)"
)


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


def _y_element(tri, monomials, rw):
    terms = {}
    for mono in monomials:
        w = ()
        for i, j, k in mono:
            w = word_mul(w, sector_word(tri, i, j, k, rw))
        terms[w] = terms.get(w, 0) + 1
    return AlgebraElement(terms)


# -- criteria -----------------------------------------------------------------

def c1_pentagon(**_):
    t = time.perf_counter()
    rw = build_rewriter(PENTAGON)
    got = expand_x(PENTAGON, 2, 5, rw)
    want = rw.rewrite(element_from_string(PENTAGON_X25))
    dt = time.perf_counter() - t
    return got == want and dt < 1, {"terms": len(got), "runtime_ok": dt < 1}


def c2_hexagon(**_):
    t = time.perf_counter()
    rw = build_rewriter(HEXAGON)
    got = expand_x(HEXAGON, 2, 5, rw)
    want = rw.rewrite(element_from_string(HEXAGON_X25))
    dt = time.perf_counter() - t
    return got == want and dt < 1, {"terms": len(got), "runtime_ok": dt < 1}


def c3_y_expansions(**_):
    rp, rh = build_rewriter(PENTAGON), build_rewriter(HEXAGON)
    pent = expand_y(PENTAGON, 2, 5, 1, rp)
    hexa = expand_y(HEXAGON, 2, 5, 1, rh)
    pent_ok = pent == _y_element(PENTAGON, PENTAGON_Y, rp)
    hex_ok = hexa == _y_element(HEXAGON, HEXAGON_Y, rh)
    printed = HEXAGON_Y[:2] + [HEXAGON_Y_AS_PRINTED] + HEXAGON_Y[3:]
    literal = hexa == _y_element(HEXAGON, printed, rh)
    return pent_ok and hex_ok, {
        "pentagon_terms": len(pent), "hexagon_terms": len(hexa),
        "hexagon_with_corrected_third_term": hex_ok, "hexagon_as_printed": literal,
    }


def c4_relations(n_max=7, seed=0, **_):
    t = time.perf_counter()
    count, failures = 0, []
    tris = [T for n in range(3, n_max + 1) for T in all_triangulations(n)]
    tris += [random_triangulation(n, seed * 1000 + s) for n in (8, 9, 10) for s in range(50)]
    for T in tris:
        c, f = relation_checks(T)
        count += c
        failures += [(str(T),) + x for x in f]
    dt = time.perf_counter() - t
    return not failures and dt < 120, {"triangulations": len(tris), "identities": count,
                                       "failures": failures[:5], "runtime_ok": dt < 120}


def c5_flips(n_max=7, seed=0, **_):
    sym = orc = 0
    bad = []
    for n in range(4, n_max + 1):
        _progress(f"  flip compatibility n={n}")
        for T in all_triangulations(n):
            for d in sorted(T.diagonals):
                for p, q, method, ok in flip_compatible(T, d, seed=seed):
                    sym += method == "symbolic"
                    orc += method == "oracle"
                    if not ok:
                        bad.append((str(T), d, p, q))
    return not bad, {"symbolic": sym, "oracle": orc, "failures": bad[:5]}


def c6_commutative(n_max=7, seed=0, **_):
    rng = random.Random(seed)
    checks, bad = 0, []
    for n in range(3, n_max + 1):
        for T in all_triangulations(n):
            exps = {(p, q): expand_edges(T, p, q)
                    for p in range(1, n + 1) for q in range(1, n + 1) if p != q}
            edges = {chord(a, b) for a, b in T.oriented_edges()}
            for _ in range(20):
                vals = {e: Fraction(rng.randint(1, 12), rng.randint(1, 12)) for e in sorted(edges)}
                for (p, q), e in exps.items():
                    checks += 1
                    if abelianize(e, vals) != ptolemy_eval(T, vals, (p, q)):
                        bad.append((str(T), p, q))
    return not bad, {"checks": checks, "failures": bad[:5]}


def c7_total_angle(seed=0, **_):
    out = {}
    ok = True
    for n in (5, 6):
        reps = total_angle_invariance(n, dims=(2, 3), trials=5, seed=seed)
        out[f"n={n}"] = f"{sum(r['result'] == 'PASS' for r in reps)}/{len(reps)}"
        ok = ok and all_pass(reps)
    return ok, out


def c8_cylinder(**_):
    t = time.perf_counter()
    rep = cylinder_check(2, 20)
    dt = time.perf_counter() - t
    methods = {}
    for rec in rep["exchange"]:
        methods[rec["method"]] = methods.get(rec["method"], 0) + 1
    ok = rep["result"] == "PASS" and dt < 60
    return ok, {"positive": rep["positive"], "conserved_n": [min(rep["conserved"]), max(rep["conserved"])],
                "exchange_methods": methods, "U20_terms": rep["term_counts"][20], "runtime_ok": dt < 60}


def c9_strip(**_):
    recs = strip_relation_check(0, 5)
    rel_ok = all(r["ok"] for r in recs)
    cons = {}
    for sign in "+-":
        try:
            cons[sign] = strip_conserved(0, range(-3, 4), sign)["result"]
        except Exception as exc:  # ConservationViolated
            cons[sign] = f"FAIL ({exc})"
    ok = rel_ok and all(v == "PASS" for v in cons.values())
    return ok, {"relations": len(recs), "relations_ok": rel_ok, "H+": cons["+"], "H-": cons["-"]}


def c10_pn1(**_):
    T = lifted_triangulation(3, [(1,), (1, 2, "-")])
    x2, x3 = pn1_expand(3, T, 2), pn1_expand(3, T, 3)
    ok2 = x2 == element_from_string(PN1_X2)
    ok3 = x3 == element_from_string(PN1_X3)
    return ok2 and ok3, {"lift": str(T), "x2_terms": len(x2), "x3_terms": len(x3)}


def c11_retraction(**_):
    checked, bad = 0, []
    for n in range(4, 7):
        rels = big_triangle_relations(n)
        for T in all_triangulations(n):
            tau = retraction_tau(T)
            for w in rels:
                checked += 1
                if substitute_word(w, tau):
                    bad.append(str(T))
    return not bad, {"relators_checked": checked, "failures": bad[:5]}


RANK_CASES = [
    (SurfaceInvariants(2, 1, closed="sphere"), Trivial()),
    (SurfaceInvariants(2, 2, closed="sphere"), Free(2)),
    (SurfaceInvariants(2, 3, closed="sphere"), Free(5)),
    (SurfaceInvariants(2, 4, closed="sphere"), OneRelator(9)),
    (SurfaceInvariants(1, 1, closed="projective_plane"), Free(2)),
    (SurfaceInvariants(1, 2, closed="projective_plane"), OneRelator(5)),
    (SurfaceInvariants(0, 1, closed="torus"), OneRelator(5)),
    (SurfaceInvariants(0, 1, closed="klein_bottle"), OneRelator(5)),
    (SurfaceInvariants(1, 1, 1), Free(2)),
    (SurfaceInvariants(1, 2, 0), Free(3)),
    (SurfaceInvariants(1, 1, 1, 1), Free(1)),
    (SurfaceInvariants(1, 3, 3, 1), Free(7)),
]


def c12_rank(**_):
    bad = [str(inv) for inv, want in RANK_CASES if triangle_group_type(inv) != want]
    for n in range(3, 9):
        rank = len(build_rewriter(starlike(n, 1)).basis)
        if triangle_group_type(polygon(n)) != Free(rank) or rank != 3 * n - 4:
            bad.append(f"polygon {n}")
    for r in range(1, 6):
        rank = len(CylinderModel(r).rewriter.basis)
        if triangle_group_type(annulus(r)) != Free(rank) or rank != 3 * r + 3:
            bad.append(f"annulus r={r}")
    return not bad, {"cases": len(RANK_CASES), "failures": bad}


def c13_plucker(seed=0, **_):
    n = 5
    mismatches = 0
    for dim in (2, 3, 4):
        for s in range(3):
            a = random_assignment(plucker_symbols(n), dim, seed * 100 + 10 * dim + s)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    for k in range(1, n + 1):
                        if len({i, j, k}) == 3:
                            try:
                                quasi_plucker(a, i, j, k)
                            except QuasiPluckerMismatch:
                                mismatches += 1
    reps = verify_identities(y_relation_pairs(n), dims=(2, 3, 4), trials=5, seed=seed)
    return mismatches == 0 and all_pass(reps), {
        "boxed_row_mismatches": mismatches,
        "y_relations": f"{sum(r['result'] == 'PASS' for r in reps)}/{len(reps)}",
    }


def c14_properties(seed=0, count=1000, **_):
    from .folding import multiply_factorization, stallings_membership

    rng = random.Random(seed)
    gens = [abstract(f"g{i}") for i in range(3)]
    alphabet = [letter(g, e) for g in gens for e in (1, -1)]

    def rword(m):
        return tuple(rng.choice(alphabet) for _ in range(rng.randint(0, m)))

    def relem():
        return AlgebraElement({reduce(rword(4)): rng.randint(-3, 3) for _ in range(rng.randint(0, 3))})

    fails = {"reduction": 0, "ring": 0, "folding": 0}
    for _ in range(count):
        w = rword(12)
        r = reduce(w)
        if reduce(r) != r or reduce(r + word_inv(r)) != () or word_mul(r, word_inv(r)) != ():
            fails["reduction"] += 1
        p, q, s = relem(), relem(), relem()
        one = AlgebraElement.one()
        if ((p * q) * s != p * (q * s) or p * (q + s) != p * q + p * s or (p + q) * s != p * s + q * s
                or p * one != p or one * p != p or p - p != AlgebraElement.zero() or p + q != q + p):
            fails["ring"] += 1
        sub = [reduce(rword(4)) or (alphabet[0],) for _ in range(rng.randint(1, 3))]
        fac = [(rng.randrange(len(sub)), rng.choice((1, -1))) for _ in range(rng.randint(0, 5))]
        member = multiply_factorization(sub, fac)
        found = stallings_membership(sub, member)
        if found is None or multiply_factorization(sub, found) != member:
            fails["folding"] += 1
        probe = reduce(rword(8))
        found = stallings_membership(sub, probe)
        if found is not None and multiply_factorization(sub, found) != probe:
            fails["folding"] += 1
    return not any(fails.values()), {"instances": count, "failures": fails}


CRITERIA = [
    (1, "pentagon expansion", c1_pentagon),
    (2, "hexagon expansion", c2_hexagon),
    (3, "y-expansions", c3_y_expansions),
    (4, "triangle and exchange relations", c4_relations),
    (5, "flip compatibility", c5_flips),
    (6, "commutative Ptolemy oracle", c6_commutative),
    (7, "total-angle invariance", c7_total_angle),
    (8, "cylinder system r=2", c8_cylinder),
    (9, "strip system", c9_strip),
    (10, "punctured triangle P3(1)", c10_pn1),
    (11, "retraction", c11_retraction),
    (12, "rank calculator", c12_rank),
    (13, "quasi-Pluecker model", c13_plucker),
    (14, "property suite", c14_properties),
]


def run_criterion(k, n_max=7, seed=0):
    _, title, fn = CRITERIA[k - 1]
    t = time.perf_counter()
    try:
        ok, detail = fn(n_max=n_max, seed=seed)
    except Exception as exc:  # a crash is a failed criterion, reported with its cause
        ok, detail = False, {"error": f"{type(exc).__name__}: {exc}"}
    return {"id": k, "title": title, "result": "PASS" if ok else "FAIL",
            "seconds": round(time.perf_counter() - t, 2), "detail": detail}


def run_suite(n_max=7, seed=0, only=None, progress=True):
    out = []
    for k, title, _ in CRITERIA:
        if only and k not in only:
            continue
        if progress:
            _progress(f"criterion {k}: {title}")
        out.append(run_criterion(k, n_max, seed))
    return out
