"""The infinite strip with marked points i_- (bottom) and i_+ (top), i in Z.

The triangulation has verticals (i_-, i_+) and near-diagonals (i_-, (i+1)_+).
A window of columns [lo, hi] is a 2n-gon, n = hi - lo + 1, listed as
lo_-, ..., hi_-, hi_+, ..., lo_+.  Edge symbols:

    (i_-, i_+) -> U_ii            (i_+, i_-) -> V_ii
    (i_-, (i+1)_+) -> U_{i,i+1}   ((i+1)_+, i_-) -> V_{i+1,i}
    ((j+1)_+, j_+) -> A_j^-1      (j_+, (j+1)_+) -> Abar_j^-1
    ((j+1)_-, j_-) -> B_j^-1      (j_-, (j+1)_-) -> Bbar_j^-1

U_ij is the curve i_- -> j_+ and V_ij the curve i_+ -> j_-.
"""

from dataclasses import dataclass
from functools import cached_property

from ..errors import ConservationViolated, WindowTooSmall
from ..presentation import solve_relations
from ..wordcore import AlgebraElement, letter, strip_gen
from .unfold import UnfoldedPolygon


def _g(kind, i, e=1):
    return (letter(strip_gen(kind, i), e),)


def project(a, b):
    (i, sa), (j, sb) = a, b
    if i == j and sa != sb:
        return _g("Uii" if sa == "-" else "Vii", i)
    if sa == "-" and sb == "+" and j == i + 1:
        return _g("Ui,i+1", i)
    if sa == "+" and sb == "-" and i == j + 1:
        return _g("derived", j)
    if sa == sb and abs(i - j) == 1:
        lo = min(i, j)
        if sa == "+":
            return _g("A" if i > j else "Abar", lo, -1)
        return _g("B" if i > j else "Bbar", lo, -1)
    raise ValueError(f"({a}, {b}) is not an edge of the strip triangulation")


@dataclass(frozen=True)
class StripModel:
    lo: int
    hi: int

    def __post_init__(self):
        if self.hi - self.lo < 1:
            raise WindowTooSmall("a window needs at least two columns")

    @classmethod
    def around(cls, *cols, margin=1):
        return cls(min(cols) - margin, max(cols) + margin)

    @property
    def columns(self):
        return range(self.lo, self.hi + 1)

    def contains(self, *cols):
        return all(self.lo <= c <= self.hi for c in cols)

    @cached_property
    def polygon(self):
        lo, hi = self.lo, self.hi
        labels = [(i, "-") for i in range(lo, hi + 1)] + [(i, "+") for i in range(hi, lo - 1, -1)]
        diags = [((i, "-"), (i, "+")) for i in range(lo + 1, hi)]
        diags += [((i, "-"), (i + 1, "+")) for i in range(lo, hi)]
        return UnfoldedPolygon(labels, diags, project)

    def symbols(self):
        out = [strip_gen(k, i) for k in ("Uii", "Vii") for i in self.columns]
        out += [strip_gen(k, i) for k in ("Ui,i+1", "derived", "A", "Abar", "B", "Bbar")
                for i in range(self.lo, self.hi)]
        return out

    @cached_property
    def rewriter(self):
        unknowns = [strip_gen(k, i) for k in ("derived", "Bbar") for i in range(self.lo, self.hi)]
        rw = solve_relations(self.symbols(), self.polygon.triangle_relators(), unknowns)
        rw.basis = tuple(sorted(rw.basis))
        return rw

    def gen(self, kind, i, exp=1):
        w = self.rewriter.rewrite_word(_g(kind, i, exp))
        return AlgebraElement.from_word(w)

    def A(self, j):
        return self.gen("A", j)

    def Abar(self, j):
        return self.gen("Abar", j)

    def B(self, j):
        return self.gen("B", j)

    def Bbar(self, j):
        return self.gen("Bbar", j)

    def expand(self, kind, i, j):
        """U_ij (kind "U") or V_ij (kind "V") over the window basis."""
        if kind not in ("U", "V"):
            raise ValueError("kind must be 'U' or 'V'")
        if not self.contains(i, j):
            raise WindowTooSmall(f"columns {i}, {j} are outside [{self.lo}, {self.hi}]")
        src, dst = ((i, "-"), (j, "+")) if kind == "U" else ((i, "+"), (j, "-"))
        return self.polygon.expand(src, dst, self.rewriter)

    def U(self, i, j):
        return self.expand("U", i, j)

    def V(self, i, j):
        return self.expand("V", i, j)

    def total_angle(self, i, sign):
        """Total angle at i_+ or i_-; needs both neighbouring columns in the window."""
        if not self.contains(i - 1, i + 1):
            raise WindowTooSmall(f"the angle at column {i} needs columns {i - 1}..{i + 1}")
        return self.polygon.total_angle((i, sign), self.rewriter)


def strip_expand(kind, i, j, window=None):
    """U_ij or V_ij; the default window is the crossing support plus one column."""
    model = StripModel(*window) if window is not None else StripModel.around(i, j)
    return model.expand(kind, i, j)


def strip_relations(model, i, j):
    """The four strip relations at (i, j) as (name, lhs, rhs) triples.

    U_{i+1,j} A_j V_{j+1,i} = B_i^-1 + U_{i+1,j+1} Abar_j V_ji
    V_{i+1,j} B_j U_{j+1,i} = A_i^-1 + V_{i+1,j+1} Bbar_j U_ji
    U_ij A_j V_{j+1,i} = U_{i,j+1} Abar_j V_ji
    V_ij B_j U_{j+1,i} = V_{i,j+1} Bbar_j U_ji
    """
    U, V, m = model.U, model.V, model
    return [
        ("UAV exchange", U(i + 1, j) * m.A(j) * V(j + 1, i),
         m.gen("B", i, -1) + U(i + 1, j + 1) * m.Abar(j) * V(j, i)),
        ("VBU exchange", V(i + 1, j) * m.B(j) * U(j + 1, i),
         m.gen("A", i, -1) + V(i + 1, j + 1) * m.Bbar(j) * U(j, i)),
        ("UAV balance", U(i, j) * m.A(j) * V(j + 1, i), U(i, j + 1) * m.Abar(j) * V(j, i)),
        ("VBU balance", V(i, j) * m.B(j) * U(j + 1, i), V(i, j + 1) * m.Bbar(j) * U(j, i)),
    ]


def strip_relation_check(i, radius=5, model=None):
    """All four relations at (i, j) for |i - j| <= radius."""
    model = model or StripModel(i - radius - 1, i + radius + 2)
    out = []
    for j in range(i - radius, i + radius + 1):
        for name, lhs, rhs in strip_relations(model, i, j):
            out.append({"i": i, "j": j, "relation": name, "ok": lhs == rhs})
    return out


def strip_conserved(i, j_range, sign="+", model=None):
    """Check U_{j,i-1} A_{i-1} + U_{j,i+1} Abar_i = U_ji H for j in j_range.

    With sign "-" the twin V_{j,i-1} B_{i-1} + V_{j,i+1} Bbar_i = V_ji H is
    checked instead.  H is the total angle at i_+ (resp. i_-), a sum of
    single-generator monomials.  Raises ConservationViolated on failure.
    """
    js = list(j_range)
    model = model or StripModel.around(i, *js)
    h = model.total_angle(i, sign)
    for j in js:
        if sign == "+":
            lhs = model.U(j, i - 1) * model.A(i - 1) + model.U(j, i + 1) * model.Abar(i)
            rhs = model.U(j, i) * h
        else:
            lhs = model.V(j, i - 1) * model.B(i - 1) + model.V(j, i + 1) * model.Bbar(i)
            rhs = model.V(j, i) * h
        if lhs != rhs:
            raise ConservationViolated(j, f"H{sign} at column {i}")
    return {"i": i, "sign": sign, "j": js, "h": h, "h_terms": len(h), "result": "PASS"}


__all__ = [
    "StripModel", "project", "strip_expand", "strip_relations", "strip_relation_check",
    "strip_conserved",
]
