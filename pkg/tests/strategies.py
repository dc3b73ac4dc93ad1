from hypothesis import strategies as st

from ncsurf.wordcore import AlgebraElement, abstract, letter, reduce

GENS = [abstract(f"g{i}") for i in range(3)]
LETTERS = [letter(g, e) for g in GENS for e in (1, -1)]

raw_words = st.lists(st.sampled_from(LETTERS), max_size=10).map(tuple)
words = raw_words.map(reduce)
elements = st.dictionaries(words, st.integers(-4, 4), max_size=4).map(AlgebraElement)
