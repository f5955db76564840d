from itertools import product

import pytest

from deccrystal.crystals import (ClosureError, CrystalGraph, epsilon,
                                 find_isomorphism, height, is_highest,
                                 is_lowest, phi, sigma, sigma_longest,
                                 tableau_ops, twisted_bar, twisted_bar_prime,
                                 twisted_zero, word_ops)
from deccrystal.tableaux import (ShiftedTableau, enumerate_primed_dectab,
                                 hat_lowest_tableau, highest_tableau)
from deccrystal.words import parse_word


def _tab(*rows: str) -> ShiftedTableau:
    return ShiftedTableau([parse_word(r) for r in rows])


def _all_words(n, length):
    return [w for w in product(range(1, 2 * n + 1), repeat=length)]


def test_sigma_reverses_strings():
    ops = word_ops(3)
    for w in _all_words(3, 3):
        v = sigma(ops, w, 1)
        assert epsilon(ops, v, 1) == phi(ops, w, 1)
        assert phi(ops, v, 1) == epsilon(ops, w, 1)
        assert sigma(ops, v, 1) == w


def test_sigma_longest_is_invertible():
    ops = word_ops(3)
    for w in _all_words(3, 2):
        assert sigma_longest(ops, sigma_longest(ops, w), inverse=True) == w


def test_twisted_operators_are_partial_inverses():
    ops = word_ops(3)
    for w in _all_words(3, 2):
        for op, rng in ((twisted_bar, (1, 2)), (twisted_bar_prime, (1, 2)),
                        (twisted_zero, (1, 2, 3))):
            for i in rng:
                up = op(ops, w, i, lower=False)
                if up is not None:
                    assert op(ops, up, i, lower=True) == w
                down = op(ops, w, i, lower=True)
                if down is not None:
                    assert op(ops, down, i, lower=False) == w


def test_twisted_bar_prime_rejects_top_index():
    ops = word_ops(3)
    with pytest.raises(ValueError):
        twisted_bar_prime(ops, (2, 2), 3)


def test_extremes_on_a_tableau_crystal():
    ops = tableau_ops(3)
    shape = (2, 1)
    verts = list(enumerate_primed_dectab(shape, 3))
    graph = CrystalGraph(verts, ops)
    assert len(graph.components()) == 1
    his = [v for v in verts if is_highest(ops, v)]
    los = [v for v in verts if is_lowest(ops, v)]
    assert his == [highest_tableau(shape)]
    assert los == [hat_lowest_tableau(shape, 3)]


def test_rank_steps_along_edges():
    graph = CrystalGraph(_all_words(2, 2), word_ops(2))
    ranks = graph.rank()
    for (src, _i), dst in graph.edges.items():
        assert ranks[dst] == ranks[src] + 1
    for comp in graph.components():
        assert min(ranks[t] for t in comp) == 0


def test_closure_and_escape():
    seed = (2, 4)
    graph = CrystalGraph.closure([seed], word_ops(2))
    assert seed in graph.index
    with pytest.raises(ClosureError):
        CrystalGraph([(2, 4)], word_ops(2))


def test_graph_exports():
    graph = CrystalGraph(_all_words(2, 1), word_ops(2))
    assert "digraph" in graph.to_dot()
    assert "vertices" in graph.to_json()


def test_isomorphic_components():
    words = _all_words(2, 3)
    graph = CrystalGraph(words, word_ops(2))
    comps = graph.components()
    sizes = {}
    for comp in comps:
        sizes.setdefault(len(comp), []).append(comp)
    twins = next((v for v in sizes.values() if len(v) >= 2), None)
    assert twins is not None
    iso = find_isomorphism(graph, twins[0], graph, twins[1])
    assert iso is not None and len(iso) == len(twins[0])


def test_height():
    assert height((2, 1, 0)) == 2 + 3
    assert height((0, 0, 0)) == 0
