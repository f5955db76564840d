import pytest

from deccrystal.tableaux import (EMPTY_TABLEAU, ShiftedTableau,
                                 enumerate_dectab, enumerate_primed_dectab,
                                 enumerate_shtab, enumerate_standard_recording,
                                 hat_lowest_tableau, highest_tableau,
                                 is_decomposition_tableau,
                                 is_decomposition_tableau_slow, is_hook_word,
                                 is_primed_decomposition_tableau,
                                 is_standard_recording, lowest_tableau,
                                 middle_index, parse_shape, shifted_cells,
                                 strict_partitions, tableau_e, tableau_f)
from deccrystal.words import BAR1, ZERO, parse_word


def _tab(*rows: str) -> ShiftedTableau:
    return ShiftedTableau([parse_word(r) for r in rows])


def test_shape_and_cells():
    assert parse_shape("3,2") == (3, 2)
    assert parse_shape("") == ()
    assert shifted_cells((3, 2)) == [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)]
    with pytest.raises(ValueError):
        parse_shape("2,2")


def test_entry_addressing():
    t = _tab("4 3 3 3 4", "2 2' 3", "1'")
    assert t.shape == (5, 3, 1)
    assert t.entry(1, 1) == parse_word("4")[0]
    assert t.entry(2, 3) == parse_word("2'")[0]
    assert t.entry(3, 3) == parse_word("1'")[0]


def test_reading_words():
    t = _tab("4 3 3 3 4", "2 2' 3", "1'")
    assert t.reading_word() == parse_word("1' 2 2' 3 4 3 3 3 4")
    assert t.revrow_word() == tuple(reversed(t.reading_word()))


def test_json_round_trip():
    t = _tab("4 3 3 3 4", "2 2' 3", "1'")
    assert ShiftedTableau.from_json(t.to_json()) == t
    assert ShiftedTableau.from_json(EMPTY_TABLEAU.to_json()) == EMPTY_TABLEAU


def test_hook_words():
    assert is_hook_word(tuple(parse_word("4 2 2 1 3")))
    assert not is_hook_word(tuple(parse_word("2 3 1")))
    assert middle_index(tuple(parse_word("4 2 2 1 3"))) == 4


def test_decomposition_condition_matches_oracle():
    from itertools import product
    shape = (3, 2)
    count = 0
    for fill in product(range(1, 4), repeat=5):
        rows = (fill[:3], fill[3:])
        t = ShiftedTableau([tuple(2 * x for x in row) for row in rows])
        assert is_decomposition_tableau(t) == is_decomposition_tableau_slow(t)
        count += is_decomposition_tableau(t)
    assert count == len(list(enumerate_dectab(shape, 3)))


def test_enumerations_are_consistent():
    for shape in strict_partitions(4):
        plain = list(enumerate_dectab(shape, 3))
        primed = list(enumerate_primed_dectab(shape, 3))
        assert all(is_decomposition_tableau(t) for t in plain)
        assert all(is_primed_decomposition_tableau(t) for t in primed)
        assert {t for t in primed if t == t.unprimed()} == set(plain)
        assert len(set(primed)) == len(primed)


def test_recording_family():
    recs = list(enumerate_standard_recording((2, 1)))
    assert recs and all(is_standard_recording(t) for t in recs)
    assert len(recs) == len(set(recs))
    assert all(sorted(t.unprimed().reading_word()) == [2, 4, 6] for t in recs)


def test_extreme_tableaux():
    assert highest_tableau((3, 1)) == _tab("2 1 1", "1")
    assert lowest_tableau((3, 1), 3) == _tab("3 3 3", "2")
    assert hat_lowest_tableau((3, 1), 3) == _tab("3 3 3'", "2'")
    assert highest_tableau((3, 1)).weight(3) == (3, 1, 0)


def test_semistandard_enumeration():
    # one-row shapes: primed diagonals double nothing on a single cell
    assert len(list(enumerate_shtab((1,), 3, primed_diagonal=False))) == 3
    assert len(list(enumerate_shtab((1,), 3, primed_diagonal=True))) == 6


def test_tableau_operators_stay_in_family():
    for t in enumerate_primed_dectab((2, 1), 2):
        for i in (BAR1, ZERO, 1):
            for op in (tableau_e, tableau_f):
                out = op(t, i, 2)
                assert out is None or is_primed_decomposition_tableau(out)


def test_strict_partitions():
    assert strict_partitions(4) == [(4,), (3, 1)]
    assert strict_partitions(6, max_len=2) == [(6,), (5, 1), (4, 2)]
