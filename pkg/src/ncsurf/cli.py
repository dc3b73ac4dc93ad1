"""Command-line entry point: ``ncsurf <command> [flags]``.

Exit codes: 0 success or PASS, 1 a verification FAIL, 2 usage error.
"""

import argparse
import json
import os
import sys

from .errors import NcsurfError, ParseError

PASS, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- flag parsing -------------------------------------------------------------

def _pair(text):
    try:
        a, b = (int(x) for x in text.replace("-", ",").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'i,j', got {text!r}") from None
    return a, b


def _int_list(text):
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def _pn1_curve(text):
    """'i' for the loop at i, or 'i,j,+' / 'i,j,-'."""
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return (int(parts[0]),)
        if len(parts) == 3 and parts[2] in ("+", "-"):
            return int(parts[0]), int(parts[1]), parts[2]
    except ValueError:
        pass
    raise argparse.ArgumentTypeError(f"expected 'i' or 'i,j,+|-', got {text!r}")


def _default_seed():
    raw = os.environ.get("NCSURF_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"NCSURF_SEED must be an integer, got {raw!r}") from None


def _tri(text):
    from .polygon import parse_triangulation

    try:
        return parse_triangulation(text)
    except ParseError as exc:
        raise UsageError(f"bad triangulation: {exc}") from None


def _check_vertex(tri, *vs):
    for v in vs:
        if not 1 <= v <= tri.n:
            raise UsageError(f"vertex {v} is outside 1..{tri.n}")


# -- output -------------------------------------------------------------------

def _element_out(p):
    from .wordcore import format_element, to_json_obj

    return {"element": to_json_obj(p), "text": format_element(p), "terms": len(p)}


def _jsonable(x):
    from .wordcore import AlgebraElement, to_json_obj

    if isinstance(x, AlgebraElement):
        return to_json_obj(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def _emit(args, obj, text):
    if args.format == "json":
        print(json.dumps(_jsonable(obj), sort_keys=True))
    else:
        print(text)


def _verdict(ok):
    return "PASS" if ok else "FAIL"


# -- commands -----------------------------------------------------------------

def cmd_expand(args):
    from .laurent import expand_edges, expand_x

    tri = _tri(args.tri)
    p, q = args.edge
    _check_vertex(tri, p, q)
    if p == q:
        raise UsageError("edge endpoints must differ")
    p_ = expand_x(tri, p, q) if args.basis else expand_edges(tri, p, q)
    out = _element_out(p_)
    out.update(tri=str(tri), edge=[p, q], basis=bool(args.basis))
    _emit(args, out, f"x_{p}{q} = {out['text']}")
    return PASS


def cmd_expand_y(args):
    from .laurent import expand_y

    tri = _tri(args.tri)
    _check_vertex(tri, args.i, args.j, args.k)
    p = expand_y(tri, args.i, args.j, args.k)
    out = _element_out(p)
    out.update(tri=str(tri), i=args.i, j=args.j, k=args.k)
    _emit(args, out, f"y^{args.i}_{args.k}{args.j} = {out['text']}")
    return PASS


def cmd_flip_check(args):
    from .mutation import flip_compatible
    from .polygon import chord

    tri = _tri(args.tri)
    diags = sorted(tri.diagonals)
    if args.diag is not None:
        d = chord(*args.diag)
        if d not in tri.diagonals:
            raise UsageError(f"{args.diag[0]}-{args.diag[1]} is not a diagonal of {tri}")
        diags = [d]
    rows = []
    for d in diags:
        for p, q, method, ok in flip_compatible(tri, d, seed=args.seed):
            rows.append({"diagonal": list(d), "pair": [p, q], "method": method, "ok": ok})
    ok = all(r["ok"] for r in rows)
    counts = {m: sum(r["method"] == m for r in rows) for m in ("symbolic", "oracle")}
    out = {"tri": str(tri), "result": _verdict(ok), "checks": len(rows), "methods": counts,
           "failures": [r for r in rows if not r["ok"]]}
    _emit(args, out, f"flip-check {tri}: {out['result']} ({len(rows)} pairs, "
                     f"{counts['symbolic']} symbolic, {counts['oracle']} oracle)")
    return PASS if ok else FAIL


def cmd_angle_check(args):
    from .oracle import all_pass, total_angle_invariance

    if args.n < 3:
        raise UsageError("--n must be at least 3")
    reps = total_angle_invariance(args.n, dims=tuple(args.dims), trials=args.trials, seed=args.seed)
    ok = all_pass(reps)
    out = {"n": args.n, "result": _verdict(ok), "identities": len(reps),
           "failures": [r for r in reps if r["result"] != "PASS"]}
    _emit(args, out, f"angle-check n={args.n}: {out['result']} ({len(reps)} identities)")
    return PASS if ok else FAIL


def cmd_retraction_check(args):
    from .polygon import all_triangulations
    from .presentation import big_triangle_relations, retraction_tau, substitute_word

    rows = []
    for n in range(4, args.n_max + 1):
        rels = big_triangle_relations(n)
        for tri in all_triangulations(n):
            tau = retraction_tau(tri)
            bad = sum(1 for w in rels if substitute_word(w, tau))
            rows.append({"tri": str(tri), "relators": len(rels), "surviving": bad})
    ok = all(r["surviving"] == 0 for r in rows)
    out = {"n_max": args.n_max, "result": _verdict(ok), "triangulations": len(rows),
           "failures": [r for r in rows if r["surviving"]]}
    _emit(args, out, f"retraction-check n<={args.n_max}: {out['result']} ({len(rows)} triangulations)")
    return PASS if ok else FAIL


def cmd_cylinder(args):
    from .errors import ConservationViolated
    from .surfaces.cylinder import CylinderModel, CylinderRun, cylinder_check, cylinder_conserved
    from .wordcore import format_element

    if args.r < 1:
        raise UsageError("--r must be at least 1")
    if args.n is not None:
        p = CylinderModel(args.r).U(args.n)
        out = _element_out(p)
        out.update(r=args.r, n=args.n)
        _emit(args, out, f"U_{args.n} = {out['text']}")
        return PASS
    if args.n_max < 1:
        raise UsageError("--n-max must be at least 1")
    try:
        if args.check == "conserved":
            run = CylinderRun(args.r)
            counts = {n: len(run.U(n)) for n in range(1, args.n_max + 1)}
            positive = all(set(run.U(n).raw.values()) == {1} for n in counts)
            h, cons = cylinder_conserved(args.r, args.n_max, 1, run=run)
            rep = {"positive": positive, "h_candidate": h, "term_counts": counts,
                   "conserved": cons["checked"], "exchange": None,
                   "result": "PASS" if positive else "FAIL"}
        else:
            rep = cylinder_check(args.r, args.n_max)
    except ConservationViolated as exc:
        out = {"r": args.r, "result": "FAIL", "error": str(exc)}
        _emit(args, out, f"cylinder r={args.r}: FAIL ({exc})")
        return FAIL
    ok = rep["result"] == "PASS"
    out = {"r": args.r, "n_max": args.n_max, "check": args.check, "result": _verdict(ok),
           "positive": rep["positive"], "h_candidate": rep["h_candidate"],
           "term_counts": rep["term_counts"], "conserved": rep["conserved"], "exchange": rep["exchange"]}
    lines = [f"cylinder r={args.r} n<={args.n_max} check={args.check}: {out['result']}",
             f"H = {format_element(rep['h_candidate'])}",
             "conserved at n = " + ",".join(map(str, rep["conserved"])),
             "terms: " + " ".join(f"{n}:{c}" for n, c in rep["term_counts"].items())]
    if rep["exchange"]:
        lines.append("exchange (n/relation:method): " + " ".join(
            f"{e['n']}/{e['relation']}:{e['method']}{'' if e['ok'] else '!'}" for e in rep["exchange"]))
    _emit(args, out, "\n".join(lines))
    return PASS if ok else FAIL


def cmd_strip(args):
    from .errors import ConservationViolated, WindowTooSmall
    from .surfaces.strip import StripModel, strip_conserved, strip_relation_check

    if args.check is None:
        if args.j is None:
            raise UsageError("--j is required unless --check is given")
        try:
            model = StripModel(*args.window) if args.window else StripModel.around(args.i, args.j)
            p = model.expand(args.kind, args.i, args.j)
        except WindowTooSmall as exc:
            raise UsageError(str(exc)) from None
        out = _element_out(p)
        out.update(kind=args.kind, i=args.i, j=args.j, window=[model.lo, model.hi])
        _emit(args, out, f"{args.kind}_{args.i},{args.j} = {out['text']}")
        return PASS
    if args.check == "relations":
        recs = strip_relation_check(args.i, args.radius)
        ok = all(r["ok"] for r in recs)
        out = {"i": args.i, "radius": args.radius, "result": _verdict(ok), "checks": len(recs),
               "failures": [r for r in recs if not r["ok"]]}
        _emit(args, out, f"strip relations at i={args.i}, |i-j|<={args.radius}: {out['result']} ({len(recs)})")
        return PASS if ok else FAIL
    results = {}
    for sign in "+-":
        try:
            rep = strip_conserved(args.i, range(args.i - args.radius, args.i + args.radius + 1), sign)
            results[sign] = {"result": "PASS", "h": rep["h"]}
        except ConservationViolated as exc:
            results[sign] = {"result": "FAIL", "error": str(exc)}
    ok = all(v["result"] == "PASS" for v in results.values())
    out = {"i": args.i, "radius": args.radius, "result": _verdict(ok), "H": results}
    _emit(args, out, f"strip conservation at i={args.i}, j in i+-{args.radius}: {out['result']}")
    return PASS if ok else FAIL


def cmd_pn1(args):
    from .surfaces.pn1 import lifted_triangulation, pn1_expand

    n = args.n
    for c in args.arc + [args.curve]:
        if any(not 1 <= v <= n for v in c if isinstance(v, int)):
            raise UsageError(f"curve {c} leaves the vertex range 1..{n}")
    try:
        tri = lifted_triangulation(n, args.arc)
    except ValueError as exc:
        raise UsageError(f"the arcs do not lift to a triangulation: {exc}") from None
    c = args.curve
    p = pn1_expand(n, tri, c[0]) if len(c) == 1 else pn1_expand(n, tri, *c)
    out = _element_out(p)
    out.update(n=n, lift=str(tri))
    _emit(args, out, f"{out['text']}")
    return PASS


def cmd_rank(args):
    from .errors import IllegalSurface
    from .surfaces.rank import SurfaceInvariants, triangle_group_type

    try:
        inv = SurfaceInvariants(args.chi, args.marked, args.boundary, args.special, args.closed)
        t = triangle_group_type(inv)
    except IllegalSurface as exc:
        raise UsageError(str(exc)) from None
    _emit(args, {"type": str(t)}, str(t))
    return PASS


def cmd_oracle_verify(args):
    from .oracle import all_pass, verify_identities, verify_identity, y_relation_pairs
    from .wordcore import element_from_string

    dims = tuple(args.dims)
    if args.family == "y-relations":
        reps = verify_identities(y_relation_pairs(args.n), dims=dims, trials=args.trials, seed=args.seed)
    else:
        if args.lhs is None or args.rhs is None:
            raise UsageError("give --lhs and --rhs, or --family")
        try:
            lhs, rhs = element_from_string(args.lhs), element_from_string(args.rhs)
        except (ParseError, ValueError) as exc:
            raise UsageError(f"cannot parse element: {exc}") from None
        reps = [verify_identity(lhs, rhs, dims=dims, trials=args.trials, seed=args.seed, name="lhs = rhs")]
    ok = all_pass(reps)
    out = {"result": _verdict(ok), "reports": reps}
    text = "\n".join(f"{r['result']}  {r['identity']}" for r in reps)
    _emit(args, out, text)
    return PASS if ok else FAIL


def cmd_suite(args):
    from .acceptance import run_suite

    rows = run_suite(n_max=args.n_max, seed=args.seed, only=args.only, progress=not args.quiet)
    ok = all(r["result"] == "PASS" for r in rows)
    text = "\n".join(f"[{r['result']}] {r['id']:>2} {r['title']} ({r['seconds']}s)" for r in rows)
    text += f"\nsuite: {_verdict(ok)} ({sum(r['result'] == 'PASS' for r in rows)}/{len(rows)})"
    _emit(args, {"result": _verdict(ok), "criteria": rows}, text)
    return PASS if ok else FAIL


# -- parser -------------------------------------------------------------------

def build_parser():
    from .surfaces.rank import CLOSED_NAMES

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None, help="default: $NCSURF_SEED or 0")

    ap = argparse.ArgumentParser(prog="ncsurf", description="Noncommutative surface cluster computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("expand", cmd_expand, "Laurent expansion of x_pq")
    p.add_argument("--tri", required=True, help="'n=5;diag=1-3,1-4'")
    p.add_argument("--edge", required=True, type=_pair, help="p,q")
    p.add_argument("--basis", action="store_true", help="rewrite over the free basis")

    p = add("expand-y", cmd_expand_y, "expansion of y^i_kj; (i,k) must be an edge")
    p.add_argument("--tri", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("flip-check", cmd_flip_check, "flip compatibility of all expansions")
    p.add_argument("--tri", required=True)
    p.add_argument("--diag", type=_pair, help="only this diagonal")

    p = add("angle-check", cmd_angle_check, "total-angle invariance over all triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dims", type=_int_list, default=[2, 3])
    p.add_argument("--trials", type=int, default=5)

    p = add("retraction-check", cmd_retraction_check, "retraction kills the big-triangle relators")
    p.add_argument("--n-max", type=int, default=6)

    p = add("cylinder", cmd_cylinder, "annulus system: U_n, conservation, recursion")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--n", type=int, help="print U_n only")
    p.add_argument("--check", choices=("conserved", "all"), default="all",
                   help="conserved: positivity and conservation; all: also the exchange recursion")

    p = add("strip", cmd_strip, "strip system: U_ij, V_ij and their relations")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--kind", choices=("U", "V"), default="U")
    p.add_argument("--window", type=_pair, help="lo,hi")
    p.add_argument("--check", choices=("relations", "conserved"))
    p.add_argument("--radius", type=int, default=5)

    p = add("pn1", cmd_pn1, "expansions on the punctured polygon via the double cover")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--arc", type=_pn1_curve, action="append", default=[],
                   help="triangulation arc: 'i' (loop) or 'i,j,+|-'; repeatable")
    p.add_argument("--curve", type=_pn1_curve, required=True)

    p = add("rank", cmd_rank, "type of the triangle group of a marked surface")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--marked", type=int, required=True)
    p.add_argument("--boundary", type=int, default=0)
    p.add_argument("--special", type=int, default=0)
    p.add_argument("--closed", choices=CLOSED_NAMES)

    p = add("oracle-verify", cmd_oracle_verify, "matrix identity test")
    p.add_argument("--lhs")
    p.add_argument("--rhs")
    p.add_argument("--family", choices=("y-relations",))
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--dims", type=_int_list, default=[2, 3])
    p.add_argument("--trials", type=int, default=5)

    p = add("suite", cmd_suite, "acceptance battery")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--only", type=_int_list)
    p.add_argument("--quiet", action="store_true")
    return ap


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    try:
        if args.seed is None:
            args.seed = _default_seed()
        return args.fn(args)
    except UsageError as exc:
        print(f"ncsurf {args.command}: {exc}", file=sys.stderr)
        return USAGE
    except NcsurfError as exc:
        print(f"ncsurf {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAIL


if __name__ == "__main__":
    sys.exit(main())
