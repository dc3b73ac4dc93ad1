"""Free groups and their integral group algebras.

Generators are interned: every :class:`Gen` gets a positive integer id the
first time it is seen, and a letter is a signed id (``+id`` for the generator,
``-id`` for its inverse).  A :data:`Word` is a reduced tuple of letters and an
:class:`AlgebraElement` is a finite map from words to nonzero integers.
"""

import json
import re
import threading
from dataclasses import dataclass

from .errors import NotAUnit, ParseError

FAMILIES = ("polygon", "cylinder", "strip", "pn1", "abstract")
_FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}

CYLINDER_KINDS = ("x", "xbar", "c", "cbar", "d", "dbar")
STRIP_KINDS = ("A", "Abar", "B", "Bbar", "Uii", "Vii", "Ui,i+1", "derived")
PN1_KINDS = ("+", "-", "loop")


@dataclass(frozen=True)
class Gen:
    """A generator symbol.  Ordered by family, then kind, then indices."""

    family: str
    kind: str
    idx: tuple = ()

    def sort_key(self):
        return (_FAMILY_RANK[self.family], self.kind, self.idx)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return format_gen(self)

    def __repr__(self):
        return f"Gen({format_gen(self)!r})"


def edge(i, j):
    """Polygon oriented edge t(i,j)."""
    if i == j:
        raise ValueError(f"edge endpoints must differ, got ({i},{j})")
    return Gen("polygon", "t", (int(i), int(j)))


def cyl(kind, n=None):
    if kind not in CYLINDER_KINDS:
        raise ValueError(f"unknown cylinder kind {kind!r}")
    if kind in ("d", "dbar"):
        return Gen("cylinder", kind, ())
    return Gen("cylinder", kind, (int(n),))


def strip_gen(kind, i):
    if kind not in STRIP_KINDS:
        raise ValueError(f"unknown strip kind {kind!r}")
    return Gen("strip", kind, (int(i),))


def pn1_gen(sign, i, j=None):
    if sign == "loop" or j is None or i == j:
        return Gen("pn1", "loop", (int(i),))
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return Gen("pn1", sign, (int(i), int(j)))


_ABSTRACT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def abstract(name):
    if not _ABSTRACT_RE.match(name):
        raise ValueError(f"bad generator name {name!r}")
    g = Gen("abstract", "name", (name,))
    try:
        other = parse_gen(name)
    except ParseError:
        other = g
    if other != g:
        raise ValueError(f"name {name!r} collides with the {other.family} symbol family")
    return g


def format_gen(g):
    f, k, ix = g.family, g.kind, g.idx
    if f == "polygon":
        return f"t({ix[0]},{ix[1]})"
    if f == "cylinder":
        return k if k in ("d", "dbar") else f"{k}{ix[0]}"
    if f == "strip":
        i = ix[0]
        if k == "Uii":
            return f"U{i},{i}"
        if k == "Vii":
            return f"V{i},{i}"
        if k == "Ui,i+1":
            return f"U{i},{i + 1}"
        if k == "derived":
            return f"V{i + 1},{i}"
        return f"{k}{i}"
    if f == "pn1":
        if k == "loop":
            return f"x({ix[0]})"
        return f"x{k}({ix[0]},{ix[1]})"
    return ix[0]


_GEN_PATTERNS = [
    (re.compile(r"t\((\d+),(\d+)\)\Z"), lambda m: edge(int(m[1]), int(m[2]))),
    (re.compile(r"x([+-])\((\d+),(\d+)\)\Z"), lambda m: pn1_gen(m[1], int(m[2]), int(m[3]))),
    (re.compile(r"x\((\d+)\)\Z"), lambda m: pn1_gen("loop", int(m[1]))),
    (re.compile(r"(xbar|x|cbar|c)(-?\d+)\Z"), lambda m: cyl(m[1], int(m[2]))),
    (re.compile(r"(dbar|d)\Z"), lambda m: cyl(m[1])),
    (re.compile(r"(Abar|A|Bbar|B)(-?\d+)\Z"), lambda m: strip_gen(m[1], int(m[2]))),
    (re.compile(r"([UV])(-?\d+),(-?\d+)\Z"), lambda m: _strip_uv(m[1], int(m[2]), int(m[3]))),
]


def _strip_uv(letter, i, j):
    if i == j:
        return strip_gen("Uii" if letter == "U" else "Vii", i)
    if letter == "U" and j == i + 1:
        return strip_gen("Ui,i+1", i)
    if letter == "V" and i == j + 1:
        return strip_gen("derived", j)
    raise ParseError(f"{letter}{i},{j} is not a strip generator")


def parse_gen(text):
    text = text.strip()
    for pat, build in _GEN_PATTERNS:
        m = pat.match(text)
        if m:
            return build(m)
    if _ABSTRACT_RE.match(text):
        return Gen("abstract", "name", (text,))
    raise ParseError(f"unrecognised generator symbol {text!r}")


# -- interning ---------------------------------------------------------------

_lock = threading.Lock()
_ids = {}
_gens = [None]


def gen_id(g):
    i = _ids.get(g)
    if i is None:
        with _lock:
            i = _ids.get(g)
            if i is None:
                i = len(_gens)
                _gens.append(g)
                _ids[g] = i
    return i


def gen_of(letter_):
    return _gens[abs(letter_)]


def letter(g, exp=1):
    if exp not in (1, -1):
        raise ValueError(f"exponent must be +1 or -1, got {exp}")
    return gen_id(g) * exp


# -- words -------------------------------------------------------------------


def _as_letter(item):
    if isinstance(item, int):
        if item == 0:
            raise ValueError("0 is not a letter")
        return item
    if isinstance(item, Gen):
        return gen_id(item)
    g, e = item
    return letter(g, e)


def reduce(letters):
    """Free reduction of a raw letter sequence.

    Items may be signed ints, Gen objects or (Gen, exponent) pairs.
    """
    out = []
    for item in letters:
        x = _as_letter(item)
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word(*items):
    return reduce(items)


def word_mul(u, v):
    lu, lv = len(u), len(v)
    k = 0
    while k < lu and k < lv and u[lu - 1 - k] == -v[k]:
        k += 1
    if k:
        return u[: lu - k] + v[k:]
    return u + v


def word_inv(u):
    return tuple(-x for x in reversed(u))


def word_letters(w):
    return [(gen_of(x), 1 if x > 0 else -1) for x in w]


def _letter_key(x):
    return (_gens[abs(x)].sort_key(), 0 if x > 0 else 1)


def word_key(w):
    """Shortlex key."""
    return (len(w), tuple(_letter_key(x) for x in w))


def format_word(w):
    if not w:
        return "1"
    parts = []
    for x in w:
        s = format_gen(gen_of(x))
        parts.append(s if x > 0 else s + "^-1")
    return "*".join(parts)


_TOKEN_RE = re.compile(r"\s*([^\s*^]+)(\^(-?1))?\s*")


def parse_word(text):
    """Parse ``t(2,1)*t(4,1)^-1*t(4,5)``; ``1`` or empty is the identity."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    pos = 0
    for chunk in text.split("*"):
        m = _TOKEN_RE.fullmatch(chunk)
        if not m:
            raise ParseError(f"bad letter {chunk!r}", pos)
        g = parse_gen(m[1])
        out.append(letter(g, int(m[3]) if m[3] else 1))
        pos += len(chunk) + 1
    return reduce(out)


# -- group algebra -----------------------------------------------------------


class AlgebraElement:
    """Integer combination of reduced words.  Immutable."""

    __slots__ = ("_t", "_h")

    def __init__(self, terms=None):
        d = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for w, c in items:
                w = reduce(w)
                c = d.get(w, 0) + int(c)
                if c:
                    d[w] = c
                else:
                    d.pop(w, None)
        self._t = d
        self._h = None

    @classmethod
    def _wrap(cls, d):
        obj = cls.__new__(cls)
        obj._t = d
        obj._h = None
        return obj

    @classmethod
    def zero(cls):
        return cls._wrap({})

    @classmethod
    def one(cls):
        return cls._wrap({(): 1})

    @classmethod
    def from_word(cls, w, coeff=1):
        return cls._wrap({tuple(w): coeff} if coeff else {})

    @classmethod
    def from_gen(cls, g, exp=1):
        return cls._wrap({(letter(g, exp),): 1})

    @property
    def raw(self):
        """The underlying word -> coefficient dict (do not mutate)."""
        return self._t

    def terms(self):
        return sorted(self._t.items(), key=lambda kv: word_key(kv[0]))

    def words(self):
        return [w for w, _ in self.terms()]

    def coefficients(self):
        return set(self._t.values())

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, int):
            other = AlgebraElement.from_word((), other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._h is None:
            self._h = hash(frozenset(self._t.items()))
        return self._h

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraElement._wrap(_add(self._t, other._t, 1))

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraElement._wrap(_add(self._t, other._t, -1))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return AlgebraElement._wrap({w: -c for w, c in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return AlgebraElement._wrap({w: c * other for w, c in self._t.items()} if other else {})
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return AlgebraElement._wrap(_mul(self._t, other._t))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __repr__(self):
        return f"AlgebraElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _coerce(x):
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, int):
        return AlgebraElement.from_word((), x)
    if isinstance(x, tuple):
        return AlgebraElement.from_word(x)
    return None


def _add(a, b, sign):
    if len(a) < len(b) and sign == 1:
        a, b = b, a
    out = dict(a)
    for w, c in b.items():
        c = out.get(w, 0) + sign * c
        if c:
            out[w] = c
        else:
            del out[w]
    return out


def _mul(a, b):
    out = {}
    get = out.get
    for u, cu in a.items():
        lu = len(u)
        for v, cv in b.items():
            lv = len(v)
            k = 0
            while k < lu and k < lv and u[lu - 1 - k] == -v[k]:
                k += 1
            w = u[: lu - k] + v[k:] if k else u + v
            c = get(w, 0) + cu * cv
            if c:
                out[w] = c
            else:
                del out[w]
    return out


def alg_add(p, q):
    return p + q


def alg_mul(p, q):
    return p * q


def alg_neg(p):
    return -p


def alg_equal(p, q):
    return p == q


def alg_inv_unit(p):
    if len(p) != 1:
        raise NotAUnit(f"element with {len(p)} terms is not a unit")
    (w, c), = p.raw.items()
    if c not in (1, -1):
        raise NotAUnit(f"coefficient {c} is not a unit")
    return AlgebraElement._wrap({word_inv(w): c})


def left_mul_word(w, p):
    """Return w * p for a single word w."""
    if not w:
        return p
    return AlgebraElement._wrap(_mul({w: 1}, p.raw))


def substitute(p, image, cache=None):
    """Apply the ring map sending each letter to ``image(letter)``.

    ``image`` receives a positive letter and returns an AlgebraElement.
    Negative letters use the unit inverse of the image, so NotAUnit
    propagates when the image is a genuine sum.
    """
    if cache is None:
        cache = {}

    def img(x):
        r = cache.get(x)
        if r is None:
            r = image(x) if x > 0 else alg_inv_unit(img(-x))
            cache[x] = r
        return r

    total = {}
    for w, c in p.raw.items():
        acc = {(): c}
        for x in w:
            acc = _mul(acc, img(x).raw)
            if not acc:
                break
        for u, cu in acc.items():
            cu = total.get(u, 0) + cu
            if cu:
                total[u] = cu
            else:
                del total[u]
    return AlgebraElement._wrap(total)


def format_element(p):
    if not p:
        return "0"
    out = []
    for w, c in p.terms():
        body = format_word(w)
        if c == 1:
            s = body
        elif c == -1:
            s = "-" + body
        else:
            s = f"{c}*{body}" if w else str(c)
        out.append(s)
    return " + ".join(out).replace("+ -", "- ")


def element_from_string(text):
    """Parse a '+'-separated sum of words, e.g. ``t(1,2) + t(2,1)*t(3,1)^-1``.

    Each summand may carry an integer prefix ``k*``.
    """
    total = AlgebraElement.zero()
    text = text.strip()
    if text == "0":
        return total
    pieces = re.split(r"\s([+-])\s", text)
    signs = [1] + [1 if s == "+" else -1 for s in pieces[1::2]]
    for sign, chunk in zip(signs, pieces[0::2]):
        chunk = chunk.strip()
        coeff = sign
        m = re.match(r"(-?\d+)\*(.*)\Z", chunk)
        if m:
            coeff, chunk = sign * int(m[1]), m[2]
        elif chunk.startswith("-"):
            coeff, chunk = -sign, chunk[1:]
        if re.fullmatch(r"-?\d+", chunk):
            total = total + AlgebraElement.from_word((), coeff * int(chunk))
        else:
            total = total + AlgebraElement.from_word(parse_word(chunk), coeff)
    return total


# -- JSON ----------------------------------------------------------------------


def to_json_obj(p):
    return {
        "terms": [
            {
                "coeff": str(c),
                "word": [{"gen": format_gen(gen_of(x)), "exp": 1 if x > 0 else -1} for x in w],
            }
            for w, c in p.terms()
        ]
    }


def serialize(p):
    return json.dumps(to_json_obj(p), separators=(",", ":"))


_INT_RE = re.compile(r"-?\d+\Z")


def deserialize(text):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.pos) from None
    return from_json_obj(obj)


def from_json_obj(obj):
    if not isinstance(obj, dict) or set(obj) != {"terms"}:
        raise ParseError("expected an object with a single 'terms' key", "$")
    terms = obj["terms"]
    if not isinstance(terms, list):
        raise ParseError("'terms' must be a list", "$.terms")
    acc = {}
    for ti, t in enumerate(terms):
        where = f"$.terms[{ti}]"
        if not isinstance(t, dict) or set(t) != {"coeff", "word"}:
            raise ParseError("term must have exactly 'coeff' and 'word'", where)
        c = t["coeff"]
        if not isinstance(c, str) or not _INT_RE.match(c):
            raise ParseError("coeff must be a decimal integer string", where + ".coeff")
        ws = t["word"]
        if not isinstance(ws, list):
            raise ParseError("word must be a list", where + ".word")
        letters = []
        for li, lt in enumerate(ws):
            lw = f"{where}.word[{li}]"
            if not isinstance(lt, dict) or set(lt) != {"gen", "exp"}:
                raise ParseError("letter must have exactly 'gen' and 'exp'", lw)
            if lt["exp"] not in (1, -1) or isinstance(lt["exp"], bool):
                raise ParseError("exp must be 1 or -1", lw + ".exp")
            if not isinstance(lt["gen"], str):
                raise ParseError("gen must be a string", lw + ".gen")
            try:
                g = parse_gen(lt["gen"])
            except ParseError as e:
                raise ParseError(str(e), lw + ".gen") from None
            letters.append(letter(g, lt["exp"]))
        w = reduce(letters)
        v = acc.get(w, 0) + int(c)
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)
    return AlgebraElement._wrap(acc)
