from itertools import product

from hypothesis import given, settings
from hypothesis import strategies as st

from deccrystal.insertion import insert_word
from deccrystal.plactic import (dec_equivalent, dec_equivalent_fast,
                                equivalence_class, equivalence_classes,
                                one_step_rewrites, rewrite_components)
from deccrystal.words import parse_word

words = st.lists(st.integers(min_value=1, max_value=6), min_size=1,
                 max_size=4).map(tuple)


def test_rewrites_preserve_insertion_tableau():
    for w in product(range(1, 7), repeat=3):
        p = insert_word(w)[0]
        for u in one_step_rewrites(w):
            assert insert_word(u)[0] == p


def test_rewrites_are_symmetric():
    for w in product(range(1, 7), repeat=3):
        for u in one_step_rewrites(w):
            assert w in one_step_rewrites(u)


def test_golden_rewrite_chain():
    chain = ["1 6 4 3 1' 2 2 4", "6 1 4 3 1' 2 2 4", "6 4 1 3 1' 2 2 4",
             "6 4 1 1 3 2' 2 4", "6 4 1 1 2 3 2' 4", "6 4 1 1 2 3 4 2'"]
    steps = [parse_word(s) for s in chain]
    for a, b in zip(steps, steps[1:]):
        assert b in one_step_rewrites(a)


@given(words, words)
@settings(max_examples=40)
def test_equivalence_matches_insertion(u, v):
    same = insert_word(u)[0] == insert_word(v)[0]
    assert dec_equivalent(u, v) == same
    assert dec_equivalent_fast(u, v) == same


def test_classes_partition_all_words():
    all_words = list(product(range(1, 7), repeat=3))
    comps = {frozenset(c) for c in rewrite_components(all_words)}
    fibers = {frozenset(ws) for ws in equivalence_classes(all_words).values()}
    assert comps == fibers
    assert sum(len(c) for c in comps) == len(all_words)


def test_equivalence_class_contains_word():
    w = parse_word("2 1 1'")
    cls = equivalence_class(w)
    assert w in cls
    assert all(insert_word(u)[0] == insert_word(w)[0] for u in cls)
