from hypothesis import given
from hypothesis import strategies as st
from strategies import LETTERS, words

from ncsurf.folding import multiply_factorization, stallings_membership
from ncsurf.wordcore import parse_word, reduce

gen_lists = st.lists(words.filter(bool), min_size=1, max_size=3)


def test_small_examples():
    a, b = parse_word("g0"), parse_word("g1")
    gens = [reduce(a + a), b]
    assert stallings_membership(gens, reduce(a + b + a)) is None
    assert stallings_membership(gens, a) is None
    w = reduce(a + a + b + a + a)
    fac = stallings_membership(gens, w)
    assert fac == [(0, 1), (1, 1), (0, 1)]
    assert multiply_factorization(gens, fac) == w
    assert stallings_membership(gens, ()) == []


@given(gen_lists, st.lists(st.tuples(st.integers(0, 2), st.sampled_from((1, -1))), max_size=6))
def test_products_of_generators_are_members(gens, fac):
    fac = [(k % len(gens), e) for k, e in fac]
    w = multiply_factorization(gens, fac)
    found = stallings_membership(gens, w)
    assert found is not None
    assert multiply_factorization(gens, found) == w


@given(gen_lists, words)
def test_membership_answers_are_sound(gens, w):
    found = stallings_membership(gens, w)
    if found is not None:
        assert multiply_factorization(gens, found) == w


@given(st.sampled_from(LETTERS), words)
def test_whole_free_group(x, w):
    gens = [(abs(x),)] + [(abs(y),) for y in LETTERS if abs(y) != abs(x)]
    assert stallings_membership(gens, w) is not None
