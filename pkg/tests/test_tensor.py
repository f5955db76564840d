from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from deccrystal.tensor import Leaf, Pair, word_element
from deccrystal.words import (BAR1, FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS, ZERO,
                              e_word, f_word, is_primed, operator_indices)

words3 = st.lists(st.integers(min_value=1, max_value=6), min_size=1,
                  max_size=5).map(tuple)


def _agrees(word, n, flavor, indices):
    el = word_element(word, n, flavor)
    for i in indices:
        for name, wop in (("e", e_word), ("f", f_word)):
            got = getattr(el, name)(i)
            got = None if got is None else got.letters()
            assert got == wop(word, i, n), (word, flavor, name, i)


@given(words3)
def test_combinators_match_signature_rule(w):
    _agrees(w, 3, FLAVOR_QPLUS, operator_indices(3, FLAVOR_QPLUS))
    _agrees(w, 3, FLAVOR_GL, operator_indices(3, FLAVOR_GL))
    if not any(is_primed(x) for x in w):
        _agrees(w, 3, FLAVOR_Q, operator_indices(3, FLAVOR_Q))


def test_exhaustive_two_letter_factors():
    for w in product(range(1, 5), repeat=2):
        _agrees(w, 2, FLAVOR_QPLUS, (BAR1, ZERO, 1))


@given(words3.filter(lambda w: len(w) >= 2))
def test_bracketing_is_immaterial(w):
    right = word_element(w, 3, bracket="right")
    left = word_element(w, 3, bracket="left")
    for i in operator_indices(3, FLAVOR_QPLUS):
        for name in ("e", "f"):
            a = getattr(right, name)(i)
            b = getattr(left, name)(i)
            assert (None if a is None else a.letters()) == \
                (None if b is None else b.letters())


def test_string_statistics():
    el = word_element((2, 2, 4), 2)
    assert el.weight() == (2, 1)
    assert el.epsilon(1) == 1 and el.phi(1) == 2


def test_pair_structure():
    el = word_element((2, 4, 6), 3)
    assert isinstance(el, Pair)
    assert isinstance(el.left, Leaf)
    assert el.letters() == (2, 4, 6)


def test_unknown_bracket_rejected():
    with pytest.raises(ValueError):
        word_element((2, 4), 2, bracket="middle")
