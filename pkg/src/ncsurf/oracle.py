"""Generic-matrix evaluation for rational identities.

Symbols are sent to random invertible k x k matrices with small integer
entries and identities are compared as exact rational matrices.  A pass is
probabilistic evidence; a failure is a proof of non-identity.  Expression
trees carry explicit inversion nodes and exist only to be evaluated.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import QuasiPluckerMismatch, SingularAtAssignment
from .wordcore import AlgebraElement, Gen, abstract, gen_id, gen_of

ENTRY_RANGE = (-9, 9)
DEFAULT_DIMS = (2, 3)
DEFAULT_TRIALS = 5


def identity(k):
    return DomainMatrix.eye(k, QQ).to_dense()


def zero(k):
    return DomainMatrix.zeros((k, k), QQ).to_dense()


def same(m1, m2):
    """Exact equality, independent of sparse or dense storage."""
    return m1.to_dense() == m2.to_dense()


def scalar(k, c):
    c = Fraction(c)
    return identity(k) * QQ(c.numerator, c.denominator)


def invert(m):
    if m.det() == 0:
        raise SingularAtAssignment("matrix is singular at this assignment")
    return m.inv()


def to_rows(m):
    """Matrix as a list of rows of Fractions."""
    return [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in m.to_list()]


# -- expression trees ---------------------------------------------------------

class Expr:
    __slots__ = ()

    def __add__(self, other):
        return Add((self, as_expr(other)))

    def __radd__(self, other):
        return Add((as_expr(other), self))

    def __sub__(self, other):
        return Add((self, Neg(as_expr(other))))

    def __rsub__(self, other):
        return Add((as_expr(other), Neg(self)))

    def __mul__(self, other):
        return Mul((self, as_expr(other)))

    def __rmul__(self, other):
        return Mul((as_expr(other), self))

    def __neg__(self):
        return Neg(self)

    def inv(self):
        return Inv(self)


@dataclass(frozen=True, eq=False)
class Sym(Expr):
    gen: Gen


@dataclass(frozen=True, eq=False)
class Const(Expr):
    value: Fraction


@dataclass(frozen=True, eq=False)
class Elem(Expr):
    """An AlgebraElement leaf."""

    element: AlgebraElement


@dataclass(frozen=True, eq=False)
class Add(Expr):
    args: tuple


@dataclass(frozen=True, eq=False)
class Mul(Expr):
    args: tuple


@dataclass(frozen=True, eq=False)
class Inv(Expr):
    arg: Expr


@dataclass(frozen=True, eq=False)
class Neg(Expr):
    arg: Expr


def as_expr(x):
    if isinstance(x, Expr):
        return x
    if isinstance(x, AlgebraElement):
        return Elem(x)
    if isinstance(x, Gen):
        return Sym(x)
    if isinstance(x, (int, Fraction)):
        return Const(Fraction(x))
    raise TypeError(f"cannot make an expression from {type(x).__name__}")


def expr_symbols(e, out=None):
    """Generators appearing in an expression (or element)."""
    out = set() if out is None else out
    e = as_expr(e)
    if isinstance(e, Sym):
        out.add(e.gen)
    elif isinstance(e, Elem):
        for w in e.element.raw:
            out.update(gen_of(abs(x)) for x in w)
    elif isinstance(e, (Add, Mul)):
        for a in e.args:
            expr_symbols(a, out)
    elif isinstance(e, (Inv, Neg)):
        expr_symbols(e.arg, out)
    return out


# -- assignments --------------------------------------------------------------

@dataclass
class MatrixAssignment:
    dim: int
    matrices: dict = field(default_factory=dict)
    seed: object = None

    def __getitem__(self, g):
        return self.matrices[g if isinstance(g, Gen) else gen_of(g)]

    def __contains__(self, g):
        return g in self.matrices


def _draw(rng, k):
    lo, hi = ENTRY_RANGE
    while True:
        m = DomainMatrix([[QQ(rng.randint(lo, hi)) for _ in range(k)] for _ in range(k)], (k, k), QQ)
        if m.det() != 0:
            return m


def random_assignment(symbols, k, seed):
    """Invertible k x k integer matrices for ``symbols``, reproducible per seed."""
    if k < 1:
        raise ValueError("dimension must be positive")
    rng = random.Random(seed)
    mats = {}
    for g in sorted(set(symbols)):
        mats[g] = _draw(rng, k)
    return MatrixAssignment(k, mats, seed)


def derive_assignment(base, mapping):
    """Assignment for new symbols, each the value of an expression under base."""
    ev = Evaluator(base)
    return MatrixAssignment(base.dim, {g: ev(e) for g, e in mapping.items()}, base.seed)


class Evaluator:
    """Evaluates words, elements and expressions at a fixed assignment."""

    def __init__(self, assignment):
        self.a = assignment
        self.k = assignment.dim
        self._letters = {}
        self._words = {(): identity(self.k)}
        self._nodes = {}

    def letter(self, x):
        m = self._letters.get(x)
        if m is None:
            if x > 0:
                m = self.a[gen_of(x)]
            else:
                m = invert(self.letter(-x))
            self._letters[x] = m
        return m

    def word(self, w):
        m = self._words.get(w)
        if m is None:
            m = self.word(w[:-1]) * self.letter(w[-1])
            self._words[w] = m
        return m

    def element(self, p):
        acc = zero(self.k)
        for w, c in p.raw.items():
            m = self.word(w)
            acc = acc + (m if c == 1 else m * QQ(c))
        return acc

    def __call__(self, e):
        if isinstance(e, AlgebraElement):
            return self.element(e)
        if isinstance(e, Gen):
            return self.letter(gen_id(e))
        key = id(e)
        hit = self._nodes.get(key)
        if hit is not None and hit[0] is e:
            return hit[1]
        m = self._eval(e)
        self._nodes[key] = (e, m)
        return m

    def _eval(self, e):
        if isinstance(e, Sym):
            return self.letter(gen_id(e.gen))
        if isinstance(e, Const):
            return scalar(self.k, e.value)
        if isinstance(e, Elem):
            return self.element(e.element)
        if isinstance(e, Add):
            acc = zero(self.k)
            for a in e.args:
                acc = acc + self(a)
            return acc
        if isinstance(e, Mul):
            acc = identity(self.k)
            for a in e.args:
                acc = acc * self(a)
            return acc
        if isinstance(e, Inv):
            return invert(self(e.arg))
        if isinstance(e, Neg):
            return -self(e.arg)
        raise TypeError(f"not an expression: {e!r}")


def evaluate(e, assignment):
    """Exact matrix value of an element or expression tree."""
    return Evaluator(assignment)(e)


# -- identity testing ---------------------------------------------------------

def trial_seed(seed, dim, trial, attempt=0):
    return ((seed * 1_000_003 + dim) * 1009 + trial) * 101 + attempt


def verify_identities(pairs, symbols=None, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0,
                      assign=None, max_resample=20):
    """Check many (name, lhs, rhs) at shared assignments.

    ``assign(dim, seed)`` may replace the default random assignment on
    ``symbols`` (for instance to derive edge matrices from a reference
    basis).  Returns one report per pair.
    """
    pairs = [(name, as_expr(lhs), as_expr(rhs)) for name, lhs, rhs in pairs]
    if symbols is None and assign is None:
        symbols = set()
        for _, lhs, rhs in pairs:
            expr_symbols(lhs, symbols)
            expr_symbols(rhs, symbols)
    if assign is None:
        def assign(dim, s):
            return random_assignment(symbols, dim, s)
    status = {name: None for name, _, _ in pairs}
    for dim in dims:
        for t in range(trials):
            open_ = [p for p in pairs if status[p[0]] is None]
            if not open_:
                break
            for attempt in range(max_resample):
                s = trial_seed(seed, dim, t, attempt)
                try:
                    ev = Evaluator(assign(dim, s))
                    outcome = [(name, same(ev(lhs), ev(rhs))) for name, lhs, rhs in open_]
                    break
                except SingularAtAssignment:
                    continue
            else:
                raise SingularAtAssignment(f"no nonsingular assignment after {max_resample} draws")
            for name, ok in outcome:
                if not ok:
                    status[name] = s
    return [
        {
            "identity": name,
            "dims": list(dims),
            "trials": trials,
            "result": "PASS" if status[name] is None else "FAIL",
            "witness_seed": status[name],
        }
        for name, _, _ in pairs
    ]


def verify_identity(lhs, rhs, symbols=None, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0,
                    name="identity", assign=None):
    return verify_identities([(name, lhs, rhs)], symbols, dims, trials, seed, assign)[0]


def all_pass(reports):
    return all(r["result"] == "PASS" for r in reports)


# -- quasi-Pluecker coordinates -----------------------------------------------

def plucker_symbol(row, i):
    return abstract(f"a{row}_{i}")


def plucker_symbols(n):
    return [plucker_symbol(r, i) for r in (1, 2) for i in range(1, n + 1)]


def _sgn(x):
    return (x > 0) - (x < 0)


def quasiminor_expr(i, j, boxed_row):
    """Positive 2x2 quasiminor of columns (i, j) with the entry of column j boxed."""
    a = lambda r, c: Sym(plucker_symbol(r, c))  # noqa: E731
    if boxed_row == 1:
        body = a(1, j) - a(1, i) * a(2, i).inv() * a(2, j)
        s = _sgn(i - j)
    else:
        body = a(2, j) - a(2, i) * a(1, i).inv() * a(1, j)
        s = _sgn(j - i)
    return body if s > 0 else -body


def quasi_plucker_expr(i, j, k, boxed_row=1):
    return quasiminor_expr(k, i, boxed_row).inv() * quasiminor_expr(k, j, boxed_row)


def quasi_plucker(assignment, i, j, k):
    """Q_ij^k at an assignment of a_{1c}, a_{2c}; both boxed rows must agree."""
    ev = Evaluator(assignment)
    top = ev(quasi_plucker_expr(i, j, k, 1))
    bottom = ev(quasi_plucker_expr(i, j, k, 2))
    if not same(top, bottom):
        raise QuasiPluckerMismatch(f"Q^{k}_{i}{j} differs between the two boxed rows")
    return top


def phi_x(i, j, sign):
    """Image of x_ij under the plus (row 1 boxed) or minus (row 2 boxed) map."""
    return quasiminor_expr(i, j, 1 if sign == "+" else 2)


def y_relation_pairs(n):
    """The sector relations on [n] in the quasi-Pluecker model."""
    Q = quasi_plucker_expr
    one = Const(Fraction(1))
    out = []
    rng = range(1, n + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                if len({i, j, k}) < 3:
                    continue
                out.append((f"y^{k}_{i}{j} y^{k}_{j}{i} = 1", Q(i, j, k) * Q(j, i, k), one))
                out.append((f"y^{k}_{i}{j} y^{i}_{j}{k} y^{j}_{k}{i} = 1", Q(i, j, k) * Q(j, k, i) * Q(k, i, j), one))
                for l in rng:
                    if l in (i, j, k):
                        continue
                    out.append((f"y^{l}_{i}{j} y^{l}_{j}{k} y^{l}_{k}{i} = 1",
                                Q(i, j, l) * Q(j, k, l) * Q(k, i, l), one))
    for i, j, k, l in _cyclic_quadruples(n):
        out.append((f"y^{j}_{i}{l} = y^{k}_{i}{j} y^{i}_{j}{l} + y^{k}_{i}{l}",
                    Q(i, l, j), Q(i, j, k) * Q(j, l, i) + Q(i, l, k)))
    return out


def _cyclic_quadruples(n):
    """All (i,j,k,l) of distinct labels in clockwise cyclic order."""
    from itertools import permutations

    for q in permutations(range(1, n + 1), 4):
        m = q.index(min(q))
        r = q[m:] + q[:m]
        if list(r) == sorted(r):
            yield q


def kernel_remark_pair(i, j, k, sign="-"):
    """x_ij x_kj^-1 + 1 - x_ik x_jk^-1 under the plus or minus quasiminor map, against 0."""
    x = lambda a, b: phi_x(a, b, sign)  # noqa: E731
    lhs = x(i, j) * x(k, j).inv() + Const(Fraction(1)) - x(i, k) * x(j, k).inv()
    return (f"phi{sign}(x_{i}{j} x_{k}{j}^-1 + 1 - x_{i}{k} x_{j}{k}^-1) = 0", lhs, Const(Fraction(0)))


# -- total angles -------------------------------------------------------------

def total_angle_expr(tri, i, x):
    """Sum over faces at i of x_ji^-1 x_jk x_ik^-1, with x(a,b) an expression."""
    from .polygon import faces_at

    terms = []
    for f in faces_at(tri, i):
        j, k = [v for v in f if v != i]
        terms.append(x(j, i).inv() * x(j, k) * x(i, k).inv())
    return Add(tuple(terms))


def total_angle_invariance(n, dims=DEFAULT_DIMS, trials=DEFAULT_TRIALS, seed=0, ref=None):
    """Compare T_i^Delta for every triangulation with T_i^{i-,i+} at shared assignments.

    Each trial assigns random matrices to the free basis of a reference
    triangulation and sets every x_ab to the value of its expansion there, so
    all total angles are evaluated in one model.  T_i^{i-,i+} is the angle of
    the degenerate triangle (i-, i, i+); Delta-independence follows from every
    T_i^Delta agreeing with it.
    """
    from .laurent import expand_x
    from .polygon import all_triangulations, starlike
    from .presentation import build_rewriter

    ref = ref or starlike(n, 1)
    rw = build_rewriter(ref)
    xs = {(a, b): Elem(expand_x(ref, a, b, rw)) for a in range(1, n + 1) for b in range(1, n + 1) if a != b}
    x = lambda a, b: xs[(a, b)]  # noqa: E731

    def assign(dim, s):
        return random_assignment(rw.basis, dim, s)

    pairs = []
    for tri in all_triangulations(n):
        for i in range(1, n + 1):
            prev, nxt = (i - 2) % n + 1, i % n + 1
            local = x(prev, i).inv() * x(prev, nxt) * x(i, nxt).inv()
            pairs.append((f"T_{i}[{tri}] = T_{i}^({prev},{nxt})", total_angle_expr(tri, i, x), local))
    return verify_identities(pairs, dims=dims, trials=trials, seed=seed, assign=assign)
