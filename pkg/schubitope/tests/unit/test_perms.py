# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

import itertools
import unittest

from schubitope import constants
from schubitope import exceptions
from schubitope import perms


def _perm(text):
    return perms.Permutation.parse(text)


def _comp(*parts):
    return perms.Composition(parts)


class PermutationTestCase(unittest.TestCase):
    def test_parse_digits_and_commas(self):
        self.assertEqual((3, 1, 2), _perm("312").entries)
        self.assertEqual(_perm("312"), perms.Permutation.parse("3,1,2"))

    def test_parse_rejects_non_bijection(self):
        with self.assertRaises(exceptions.InvalidPermutationException) as cm:
            _perm("1134")
        self.assertEqual("perm", cm.exception.field)

    def test_parse_rejects_garbage(self):
        with self.assertRaises(exceptions.InvalidPermutationException) as cm:
            perms.Permutation.parse("12a", "u")
        self.assertEqual("u", cm.exception.field)

    def test_str_uses_commas_above_nine(self):
        w = perms.Permutation.longest(10)
        self.assertEqual("10,9,8,7,6,5,4,3,2,1", str(w))
        self.assertEqual(w, perms.Permutation.parse(str(w)))

    def test_length_counts_inversions(self):
        self.assertEqual(0, perms.Permutation.identity(4).length())
        self.assertEqual(6, perms.Permutation.longest(4).length())
        self.assertEqual(6, _perm("315624").length())

    def test_inverse(self):
        self.assertEqual(_perm("312"), _perm("231").inverse())
        w = _perm("315624")
        self.assertTrue(w.inverse().inverse() == w)

    def test_right_multiply_swaps_positions(self):
        self.assertEqual(_perm("321"), _perm("231").right_multiply(1))

    def test_left_multiply_swaps_values(self):
        self.assertEqual(_perm("132"), _perm("231").left_multiply(1))

    def test_simple_index_is_checked(self):
        self.assertRaises(exceptions.DomainException,
                          perms.Permutation.simple, 3, 3)

    def test_from_word(self):
        self.assertEqual(_perm("321"),
                         perms.Permutation.from_word((1, 2, 1), 3))
        self.assertTrue(perms.Permutation.from_word((), 3).is_identity())

    def test_reduced_word_round_trip(self):
        for w in perms.all_permutations(4):
            word = perms.reduced_word(w)
            self.assertEqual(w.length(), len(word))
            self.assertEqual(w, perms.Permutation.from_word(word, 4))

    def test_act(self):
        self.assertEqual((2, 0, 1, 3, 2, 0, 1),
                         perms.act((3, 2, 2, 1, 1, 0, 0), _perm("2641375")))
        self.assertRaises(exceptions.DimensionMismatchException,
                          perms.act, (1, 2), _perm("123"))


class BruhatTestCase(unittest.TestCase):
    def test_small_comparisons(self):
        self.assertTrue(perms.bruhat_leq(_perm("132"), _perm("231")))
        self.assertFalse(perms.bruhat_leq(_perm("312"), _perm("231")))
        self.assertTrue(perms.bruhat_leq(_perm("312"), _perm("321")))
        self.assertFalse(perms.bruhat_leq(_perm("321"), _perm("312")))

    def test_agrees_with_subword_property(self):
        all_perms = list(perms.all_permutations(4))
        for u, w in itertools.product(all_perms, all_perms):
            self.assertEqual(perms.bruhat_leq_subword(u, w),
                             perms.bruhat_leq(u, w), "%s <= %s" % (u, w))

    def test_degree_mismatch(self):
        self.assertRaises(exceptions.DimensionMismatchException,
                          perms.bruhat_leq, _perm("12"), _perm("123"))

    def test_covers(self):
        self.assertEqual([_perm("231"), _perm("312")],
                         sorted(perms.bruhat_covers(_perm("321"))))
        self.assertEqual([], perms.bruhat_covers(_perm("123")))

    def test_lower_interval(self):
        self.assertEqual(6, len(perms.lower_interval(_perm("321"))))
        self.assertEqual([_perm("123"), _perm("132"), _perm("213"),
                          _perm("231")],
                         perms.lower_interval(_perm("231")))

    def test_lower_interval_matches_definition(self):
        w = _perm("3412")
        expected = sorted(u for u in perms.all_permutations(4)
                          if perms.bruhat_leq(u, w))
        self.assertEqual(expected, perms.lower_interval(w))


class CompositionTestCase(unittest.TestCase):
    def test_parse(self):
        self.assertEqual(_comp(1, 0, 3), perms.Composition.parse("1,0,3"))
        self.assertEqual("1,0,3", str(_comp(1, 0, 3)))

    def test_rejects_negative_parts(self):
        with self.assertRaises(exceptions.InvalidCompositionException) as cm:
            perms.Composition.parse("1,-1", "skyline")
        self.assertEqual("skyline", cm.exception.field)

    def test_ascents_and_swap(self):
        alpha = _comp(1, 0, 3)
        self.assertEqual([2], alpha.ascents())
        self.assertEqual(_comp(1, 3, 0), alpha.swap(2))
        self.assertFalse(alpha.is_partition())
        self.assertTrue(perms.lambda_of(alpha).is_partition())

    def test_w_of(self):
        self.assertEqual("2641375",
                         str(perms.w_of(_comp(2, 0, 1, 3, 2, 0, 1))))
        self.assertEqual("231", str(perms.w_of(_comp(1, 0, 3))))
        self.assertTrue(perms.w_of(_comp(3, 1, 0)).is_identity())

    def test_w_of_sorts_lambda(self):
        for alpha in perms.all_compositions(3, 2):
            w = perms.w_of(alpha)
            self.assertEqual(alpha, perms.lambda_of(alpha).act(w))

    def test_sorting_word(self):
        alpha = _comp(0, 1, 2)
        word = perms.sorting_word(alpha)
        self.assertEqual((1, 2, 1), word)
        self.assertEqual(perms.w_of(alpha),
                         perms.Permutation.from_word(word, 3))

    def test_sorting_word_choices_give_same_permutation(self):
        for alpha in perms.all_compositions(4, 2):
            first = perms.sorting_word(alpha, constants.CHAIN_FIRST)
            last = perms.sorting_word(alpha, constants.CHAIN_LAST)
            self.assertEqual(perms.Permutation.from_word(first, 4),
                             perms.Permutation.from_word(last, 4))

    def test_unknown_choice(self):
        self.assertRaises(exceptions.DomainException, perms.sorting_word,
                          _comp(0, 1), "middle")

    def test_composition_order(self):
        alpha = _comp(1, 0, 3)
        self.assertTrue(perms.composition_leq(_comp(1, 3, 0), alpha))
        self.assertTrue(perms.composition_leq(alpha, alpha))
        self.assertFalse(perms.composition_leq(_comp(0, 1, 3), alpha))
        self.assertFalse(perms.composition_leq(_comp(1, 1, 2), alpha))

    def test_composition_order_matches_swaps(self):
        for alpha in perms.all_compositions(3, 2):
            for beta in perms.all_compositions(3, 2):
                self.assertEqual(
                    perms.composition_leq_searles(beta, alpha),
                    perms.composition_leq(beta, alpha),
                    "%s <= %s" % (beta, alpha))

    def test_vertex_compositions(self):
        expected = [_comp(1, 0, 3), _comp(1, 3, 0), _comp(3, 0, 1),
                    _comp(3, 1, 0)]
        alpha = _comp(1, 0, 3)
        self.assertEqual(expected, perms.vertex_compositions(alpha))
        self.assertEqual(expected, perms.vertex_compositions_recursive(alpha))
        self.assertEqual(
            expected, perms.vertex_compositions_recursive(
                alpha, constants.CHAIN_LAST))

    def test_vertex_compositions_of_partition(self):
        self.assertEqual([_comp(2, 1, 0)],
                         perms.vertex_compositions(_comp(2, 1, 0)))
