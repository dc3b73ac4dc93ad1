import pytest
from hypothesis import given
from strategies import elements, raw_words, words

from ncsurf.errors import NotAUnit, ParseError
from ncsurf.wordcore import (
    AlgebraElement,
    abstract,
    alg_inv_unit,
    cyl,
    deserialize,
    edge,
    element_from_string,
    format_gen,
    format_word,
    parse_gen,
    parse_word,
    pn1_gen,
    reduce,
    serialize,
    strip_gen,
    substitute,
    word_inv,
    word_mul,
)


@pytest.mark.parametrize("g, text", [
    (edge(2, 5), "t(2,5)"),
    (cyl("x", 3), "x3"),
    (cyl("cbar", 2), "cbar2"),
    (cyl("d"), "d"),
    (strip_gen("A", -1), "A-1"),
    (strip_gen("Uii", 4), "U4,4"),
    (strip_gen("Ui,i+1", 4), "U4,5"),
    (strip_gen("derived", 4), "V5,4"),
    (pn1_gen("+", 2, 1), "x+(2,1)"),
    (pn1_gen("loop", 1), "x(1)"),
    (abstract("src_1_2"), "src_1_2"),
])
def test_symbol_round_trip(g, text):
    assert format_gen(g) == text
    assert parse_gen(text) == g


def test_abstract_names_cannot_shadow_families():
    with pytest.raises(ValueError):
        abstract("d")
    with pytest.raises(ValueError):
        abstract("x3")


def test_bad_symbols():
    with pytest.raises(ParseError):
        parse_gen("x+")
    with pytest.raises(ParseError):
        parse_gen("U1,3")


def test_word_reduction_example():
    assert format_word(parse_word("t(1,2)*t(2,3)^-1*t(2,3)")) == "t(1,2)"


def test_json_shape_is_fixed():
    p = element_from_string("2*t(1,2) - t(2,1)^-1")
    assert serialize(p) == (
        '{"terms":[{"coeff":"2","word":[{"gen":"t(1,2)","exp":1}]},'
        '{"coeff":"-1","word":[{"gen":"t(2,1)","exp":-1}]}]}'
    )
    assert deserialize(serialize(p)) == p


def test_unit_inverse():
    p = element_from_string("-t(1,2)*t(3,2)^-1")
    assert p * alg_inv_unit(p) == AlgebraElement.one()
    with pytest.raises(NotAUnit):
        alg_inv_unit(element_from_string("t(1,2) + t(2,1)"))
    with pytest.raises(NotAUnit):
        alg_inv_unit(element_from_string("2*t(1,2)"))


@given(raw_words)
def test_reduce_is_idempotent(w):
    r = reduce(w)
    assert reduce(r) == r
    assert all(r[k] != -r[k + 1] for k in range(len(r) - 1))


@given(words, words, words)
def test_group_laws(u, v, w):
    assert word_mul(word_mul(u, v), w) == word_mul(u, word_mul(v, w))
    assert word_mul(u, word_inv(u)) == ()
    assert word_inv(word_mul(u, v)) == word_mul(word_inv(v), word_inv(u))


@given(elements, elements, elements)
def test_ring_axioms(p, q, s):
    one, zero = AlgebraElement.one(), AlgebraElement.zero()
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert (p + q) * s == p * s + q * s
    assert p + q == q + p
    assert p * one == p == one * p
    assert p - p == zero and p * zero == zero


@given(elements)
def test_text_and_json_round_trip(p):
    assert element_from_string(str(p)) == p
    assert deserialize(serialize(p)) == p


@given(elements, elements)
def test_substitute_is_a_ring_map(p, q):
    from strategies import GENS

    from ncsurf.wordcore import gen_id

    images = {gen_id(GENS[0]): element_from_string("g1*g2"), gen_id(GENS[1]): element_from_string("g0^-1"),
              gen_id(GENS[2]): element_from_string("-g2")}
    f = lambda x: images[x]  # noqa: E731
    assert substitute(p * q, f) == substitute(p, f) * substitute(q, f)
    assert substitute(p + q, f) == substitute(p, f) + substitute(q, f)
