from hypothesis import given, settings
from hypothesis import strategies as st

from deccrystal.characters import (MonomialPolynomial, character,
                                   expand_in_schur_q, schur_p, schur_q)
from deccrystal.tableaux import (enumerate_dectab, enumerate_primed_dectab,
                                 strict_partitions)

shapes = st.sampled_from([sh for size in range(1, 6)
                          for sh in strict_partitions(size, max_len=3)])


def test_polynomial_arithmetic():
    a = MonomialPolynomial(2, {(1, 0): 1, (0, 1): 1})
    b = MonomialPolynomial(2, {(1, 0): 1})
    assert (a - b).coefficient((0, 1)) == 1
    assert (a - a).is_zero()
    assert a.scale(2).coefficient((1, 0)) == 2
    assert (a + b).coefficient((1, 0)) == 2


def test_symmetry_detection():
    sym = MonomialPolynomial(2, {(1, 0): 1, (0, 1): 1})
    asym = MonomialPolynomial(2, {(1, 0): 1})
    assert sym.is_symmetric() and not asym.is_symmetric()


def test_schur_polynomials_are_symmetric():
    for shape in ((1,), (2,), (2, 1), (3, 1)):
        assert schur_p(shape, 3).is_symmetric()
        assert schur_q(shape, 3).is_symmetric()


@given(shapes)
@settings(max_examples=20, deadline=None)
def test_family_characters(shape):
    n = 3
    p = character((t.weight(n) for t in enumerate_dectab(shape, n)), n)
    q = character((t.weight(n) for t in enumerate_primed_dectab(shape, n)), n)
    assert p == schur_p(shape, n)
    assert q == schur_q(shape, n)
    assert q == p.scale(2 ** len(shape))


@given(shapes)
@settings(max_examples=20, deadline=None)
def test_expansion_recovers_shape(shape):
    assert expand_in_schur_q(schur_q(shape, 3)) == {shape: 1}


def test_expansion_of_a_sum():
    poly = schur_q((2, 1), 3) + schur_q((3,), 3).scale(2)
    assert expand_in_schur_q(poly) == {(2, 1): 1, (3,): 2}


def test_json_export():
    poly = schur_q((1,), 2)
    data = poly.to_json()
    assert isinstance(data, list) and data
