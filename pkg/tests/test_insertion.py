from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deccrystal.insertion import (dec_insert, insert_word, inverse_insertion,
                                  monoid_product)
from deccrystal.tableaux import (EMPTY_TABLEAU, ShiftedTableau,
                                 enumerate_primed_dectab,
                                 is_primed_decomposition_tableau,
                                 is_standard_recording, strict_partitions)
from deccrystal.words import parse_word, word_str

words4 = st.lists(st.integers(min_value=1, max_value=8), min_size=1,
                  max_size=6).map(tuple)


def _tab(*rows: str) -> ShiftedTableau:
    return ShiftedTableau([parse_word(r) for r in rows])


def test_single_insertions():
    base = _tab("4 2 2 1' 3 4 6")
    one = parse_word("1")[0]
    assert dec_insert(one, base)[0] == _tab("4 3 2 1 1 4 6", "2'")
    four_p = parse_word("4'")[0]
    assert dec_insert(four_p, base)[0] == _tab("4 4 2 1' 3 4 6", "2'")


def test_insert_word_golden():
    p, q = insert_word(parse_word("4' 4 3 3 2' 3' 3 2' 1'"))
    assert p == _tab("4 3 3 3 4", "2 2' 3", "1'")
    assert q == _tab("1 2' 3 6 8", "4 5' 9'", "7")


def test_insert_empty_word():
    assert insert_word(()) == (EMPTY_TABLEAU, EMPTY_TABLEAU)


@given(words4)
@settings(max_examples=60)
def test_images_are_valid_pairs(w):
    p, q = insert_word(w)
    assert p.shape == q.shape
    assert is_primed_decomposition_tableau(p)
    assert is_standard_recording(q)


@given(words4)
@settings(max_examples=60)
def test_inverse_round_trips(w):
    p, q = insert_word(w)
    assert inverse_insertion(p, q) == w


def test_inverse_rejects_bad_pairs():
    p, q = insert_word(parse_word("2 1 1"))
    with pytest.raises(ValueError):
        inverse_insertion(p, _tab("1 2"))  # shape mismatch
    with pytest.raises(ValueError):
        inverse_insertion(p, _tab("1 1 2"))  # not a recording tableau


def test_exhaustive_bijection_small():
    seen = {}
    for w in product(range(1, 5), repeat=3):
        pair = insert_word(w)
        assert pair not in seen, (word_str(w), word_str(seen[pair]))
        seen[pair] = w


def test_reinsertion_is_identity():
    for shape in strict_partitions(4, max_len=2):
        for t in enumerate_primed_dectab(shape, 2):
            assert insert_word(t.revrow_word())[0] == t


def test_monoid_product():
    a = _tab("2")
    b = _tab("1")
    ab = monoid_product(a, b)
    assert ab == insert_word(parse_word("2 1"))[0]
    assert monoid_product(a, EMPTY_TABLEAU) == a
    assert monoid_product(EMPTY_TABLEAU, b) == b
