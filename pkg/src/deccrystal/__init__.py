"""Primed decomposition tableaux, their crystal operators and characters."""

from .words import (BAR1, FLAVOR_GL, FLAVOR_Q, FLAVOR_QPLUS, ZERO, Word,
                    ceil_of, e_word, f_word, i_pairing, is_primed, letter_str,
                    operator_indices, parse_letter, parse_word, primed,
                    string_lengths, unprime_word, unprimed, weight_of,
                    word_str)
from .tensor import Leaf, Pair, word_element
from .tableaux import (EMPTY_TABLEAU, ShiftedTableau, border_strips,
                       enumerate_dectab, enumerate_primed_dectab,
                       enumerate_shtab, enumerate_standard_recording,
                       hat_lowest_tableau, highest_tableau, is_hook_word,
                       is_decomposition_tableau,
                       is_primed_decomposition_tableau, is_semistandard,
                       is_standard_recording, lowest_tableau, middle_index,
                       parse_shape, strict_partitions, tableau_e, tableau_f,
                       tableau_from_revrow)
from .insertion import (InsertionStep, dec_insert, insert_word,
                        inverse_insertion, monoid_product)
from .crystals import (ClosureError, CrystalGraph, OperatorFamily, epsilon,
                       find_isomorphism, height, is_highest, is_lowest, phi,
                       sigma, sigma_longest, tableau_ops, twisted_bar,
                       twisted_bar_prime, twisted_zero, word_ops)
from .characters import (MonomialPolynomial, character, expand_in_schur_q,
                         schur_p, schur_q)
from .plactic import (CapExceededError, dec_equivalent, dec_equivalent_fast,
                      equivalence_class, equivalence_classes,
                      one_step_rewrites, rewrite_components)

__all__ = [name for name in dir() if not name.startswith("_")]
