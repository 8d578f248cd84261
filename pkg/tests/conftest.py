import random

import pytest
from hypothesis import strategies as st

from unknotting.braid import BraidWord, components
from unknotting.corpus import builtin_corpus


@pytest.fixture(scope="session")
def corpus():
    return {r.name: r for r in builtin_corpus()}


def words(max_index=4, max_len=12, min_len=0):
    letter = st.integers(1, max_index).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, min_size=min_len, max_size=max_len).map(lambda ls: BraidWord(tuple(ls)))


def knot_words(max_index=4, max_len=12):
    return words(max_index, max_len, min_len=1).filter(lambda w: components(w) == 1)


def random_knot_word(rng: random.Random, max_index=4, max_len=14) -> BraidWord:
    while True:
        n = rng.randint(1, max_len)
        w = BraidWord(tuple(rng.choice([1, -1]) * rng.randint(1, max_index) for _ in range(n)))
        if components(w) == 1:
            return w
