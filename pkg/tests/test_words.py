from hypothesis import given
from hypothesis import strategies as st

from deccrystal.words import (BAR1, ZERO, ceil_of, e_word, f_word, i_pairing,
                              is_primed, letter_str, operator_indices,
                              parse_letter, parse_word, primed,
                              string_lengths, unprimed, weight_of, word_str)

letters = st.integers(min_value=1, max_value=8)
words = st.lists(letters, max_size=6).map(tuple)


def test_letter_encoding():
    assert primed(3) == 5 and unprimed(3) == 6
    assert ceil_of(5) == 3 and ceil_of(6) == 3
    assert is_primed(5) and not is_primed(6)
    assert letter_str(5) == "3'" and letter_str(6) == "3"
    assert parse_letter("3'") == 5 and parse_letter("3") == 6


def test_parse_word_forms():
    assert parse_word("4' 4 3") == (7, 8, 6)
    assert parse_word("4'43") == (7, 8, 6)
    assert parse_word("") == ()


@given(words)
def test_word_str_round_trips(w):
    assert parse_word(word_str(w)) == w


def test_weight_counts_ceilings():
    assert weight_of(parse_word("4' 4 3 3 2' 3' 3 2' 1'"), 4) == (1, 2, 4, 2)


def test_operator_indices():
    assert operator_indices(3, "gl") == (1, 2)
    assert operator_indices(3, "q") == (BAR1, 1, 2)
    assert operator_indices(3, "q_plus") == (BAR1, ZERO, 1, 2)


def test_pairing_matches_bracket_cancellation():
    # value k+1 opens, value k closes; in "2 1 2" the 1 matches the first 2
    # and the trailing 2 stays unmatched
    rights, lefts = i_pairing(parse_word("2 1 2"), 1)
    assert (rights, lefts) == ((), (2,))


def test_signature_operators_on_strings():
    w = parse_word("2 1 2")
    assert e_word(w, 1, 2) == parse_word("2 1 1")
    assert f_word(w, 1, 2) is None
    assert f_word(parse_word("1 2 1"), 1, 2) == parse_word("2 2 1")


def test_zero_operators():
    assert e_word(parse_word("1' 2"), ZERO, 2) == parse_word("1 2")
    assert e_word(parse_word("1 2"), ZERO, 2) is None
    assert f_word(parse_word("1 2"), ZERO, 2) == parse_word("1' 2")
    assert f_word(parse_word("2 1"), ZERO, 2) == parse_word("2 1'")
    assert f_word(parse_word("2 1'"), ZERO, 2) is None


def test_bar1_operators():
    assert e_word(parse_word("2 2"), BAR1, 2) == parse_word("1 2")
    assert e_word(parse_word("1 2"), BAR1, 2) is None
    assert f_word(parse_word("1 1"), BAR1, 2) == parse_word("2 1")
    assert f_word(parse_word("2 1"), BAR1, 2) is None


@given(words, st.sampled_from([BAR1, ZERO, 1, 2, 3]))
def test_e_and_f_are_partial_inverses(w, i):
    n = 4
    c = e_word(w, i, n)
    if c is not None:
        assert f_word(c, i, n) == w
    c = f_word(w, i, n)
    if c is not None:
        assert e_word(c, i, n) == w


@given(words, st.sampled_from([1, 2, 3]))
def test_string_lengths_match_weight_difference(w, i):
    n = 4
    eps, ph = string_lengths(w, i, n)
    wt = weight_of(w, n)
    assert ph - eps == wt[i - 1] - wt[i]
