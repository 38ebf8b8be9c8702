# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

import itertools

from schubitope import config
from schubitope import diagrams
from schubitope import exceptions
from schubitope import fillings
from schubitope import perms
from schubitope import utils
from schubitope.tests.unit import fixtures


def _perm(text):
    return perms.Permutation.parse(text)


class FillColumnTestCase(fixtures.TempDirTestCase):
    def test_greedy_placement(self):
        col = diagrams.Column(6, [2, 3, 4, 5, 6])
        self.assertEqual({2: 2, 3: 3, 4: 4, 5: 1, 6: 6},
                         fillings.fill_column(col, _perm("324615")).entries)
        self.assertEqual({2: 2, 3: 3, 4: 1, 5: 5, 6: 6},
                         fillings.fill_column(col, _perm("325614")).entries)

    def test_first_column_of_large_diagram(self):
        col = diagrams.Column(6, [2, 3, 4, 6])
        filling = fillings.fill_column(col, _perm("315624"))
        self.assertEqual({2: 1, 3: 3, 4: 2, 6: 5}, filling.entries)
        self.assertTrue(filling.is_flagged())
        self.assertTrue(filling.is_column_strict())
        self.assertFalse(filling.is_increasing())

    def test_skips_values_without_room(self):
        col = diagrams.Column(3, [1, 3])
        filling = fillings.fill_column(col, (3, 2))
        self.assertEqual({3: 3}, filling.entries)
        self.assertEqual([1], filling.empty_rows())
        self.assertEqual(u"·\n.\n3", filling.render_text())

    def test_rejects_repeated_word(self):
        col = diagrams.Column(3, [1, 3])
        self.assertRaises(exceptions.DomainException,
                          fillings.fill_column, col, (1, 1))
        self.assertRaises(exceptions.DomainException,
                          fillings.fill_column, col, (4,))

    def test_column_filling_validation(self):
        col = diagrams.Column(3, [1, 3])
        self.assertRaises(exceptions.InvalidDiagramException,
                          fillings.ColumnFilling, col, {2: 1})
        self.assertRaises(exceptions.DomainException,
                          fillings.ColumnFilling, col, {1: 0})

    def test_column_filling_json_round_trip(self):
        col = diagrams.Column(6, [2, 3, 4, 6])
        filling = fillings.fill_column(col, _perm("315624"))
        doc = filling.to_json_dict()
        self.assertEqual([2, 3, 4, 6], doc["rows"])
        self.assertEqual(filling, fillings.ColumnFilling.from_json_dict(doc))


class FillDiagramTestCase(fixtures.TempDirTestCase):
    def test_large_diagram_filling(self):
        filling = fillings.fill_diagram(fixtures.LARGE_DIAGRAM,
                                        _perm(fixtures.LARGE_PERM))
        self.assertEqual(fixtures.LARGE_FILLING, filling.entries)
        self.assertEqual(18, filling.size)
        self.assertEqual(fixtures.LARGE_VERTEX, filling.counts())

    def test_vertex_vector(self):
        self.assertEqual(fixtures.LARGE_VERTEX, fillings.vertex_vector(
            fixtures.LARGE_DIAGRAM, _perm(fixtures.LARGE_PERM)))
        for text, x in fixtures.SMALL_VERTEX_BY_PERM.items():
            self.assertEqual(x, fillings.vertex_vector(
                fixtures.SMALL_DIAGRAM, _perm(text)), text)

    def test_small_diagram_fillings(self):
        self.assertEqual(6, len(fixtures.SMALL_FILLING_BY_PERM))
        for text, entries in fixtures.SMALL_FILLING_BY_PERM.items():
            filling = fillings.fill_diagram(fixtures.SMALL_DIAGRAM,
                                            _perm(text))
            self.assertEqual(entries, filling.entries, text)
            self.assertEqual(fixtures.SMALL_VERTEX_BY_PERM[text],
                             filling.counts(), text)

    def test_fillings_are_flagged_and_strict(self):
        for w in perms.all_permutations(3):
            filling = fillings.fill_diagram(fixtures.SMALL_DIAGRAM, w)
            self.assertTrue(filling.is_flagged())
            self.assertTrue(filling.is_column_strict())
            self.assertEqual(len(fixtures.SMALL_DIAGRAM), filling.size)

    def test_degree_mismatch(self):
        self.assertRaises(exceptions.DimensionMismatchException,
                          fillings.fill_diagram, fixtures.SMALL_DIAGRAM,
                          _perm("1234"))

    def test_render_text(self):
        filling = fillings.fill_diagram(fixtures.SMALL_DIAGRAM, _perm("213"))
        self.assertEqual(u"1 . .\n. . .\n2 2 2", filling.render_text())

    def test_json_round_trip(self):
        filling = fillings.fill_diagram(fixtures.SMALL_DIAGRAM, _perm("132"))
        doc = filling.to_json_dict()
        self.assertEqual([[1, 1, 1], [3, 1, 3], [3, 2, 1], [3, 3, 1]],
                         doc["entries"])
        self.assertEqual(filling, fillings.DiagramFilling.from_json_dict(doc))

    def test_from_json_dict_rejects_entries_off_the_diagram(self):
        doc = {"diagram": fixtures.SMALL_DIAGRAM.to_json_dict(),
               "entries": [[2, 2, 1]]}
        self.assertRaises(exceptions.InvalidDiagramException,
                          fillings.DiagramFilling.from_json_dict, doc)


class RankTestCase(fixtures.TempDirTestCase):
    def test_rank_examples(self):
        self.assertEqual(2, fillings.rank_filling(
            diagrams.Column(5, [1, 4, 5]), {1, 3}))
        self.assertEqual(1, fillings.rank_filling(
            diagrams.Column(5, [3]), {1, 3}))
        self.assertEqual(1, fillings.rank_max_filling(
            diagrams.Column(3, [2]), {1, 2}))
        self.assertEqual(0, fillings.rank_max_filling(
            diagrams.Column(3, [1]), {2}))

    def test_rank_diagram(self):
        self.assertEqual(7, fillings.rank_diagram(
            fixtures.WORD_EXAMPLE_DIAGRAM, fixtures.WORD_EXAMPLE_SUBSET))

    def test_rank_oracles_agree(self):
        n = 5
        for c_mask in utils.iter_masks(n):
            col = diagrams.Column(n, utils.subset_from_mask(c_mask, n))
            for s_mask in utils.iter_masks(n):
                subset = utils.subset_from_mask(s_mask, n)
                greedy = fillings.rank_filling(col, subset)
                self.assertEqual(fillings.rank_brute(col, subset), greedy)
                self.assertEqual(fillings.rank_max_filling(col, subset),
                                 greedy)

    def test_rank_is_order_independent(self):
        n = 5
        for c_mask in utils.iter_masks(n):
            col = diagrams.Column(n, utils.subset_from_mask(c_mask, n))
            for s_mask in utils.iter_masks(n):
                subset = utils.subset_from_mask(s_mask, n)
                if len(subset) > 4:
                    continue
                expected = fillings.rank_filling(col, subset)
                for order in itertools.permutations(sorted(subset)):
                    self.assertEqual(expected, fillings.rank_filling(
                        col, subset, order))

    def test_rank_order_must_cover_subset(self):
        self.assertRaises(exceptions.InvalidSubsetException,
                          fillings.rank_filling, diagrams.Column(3, [3]),
                          {1, 2}, (1,))

    def test_debug_order_check(self):
        path = self.write_file("debug.ini",
                               "[debug]\ncheck_rank_order = true\n")
        config.use_config_files([config.get_default_config_path(), path])
        column = diagrams.Column(5, [1, 4, 5])
        self.assertEqual(2, fillings.rank_filling(column, {1, 3}))
        self.assertEqual(3, fillings.rank_filling(column, {1, 3, 5}))
        self.assertEqual(2, fillings.rank_filling(column, {3, 4}))


class SortStandardizeTestCase(fixtures.TempDirTestCase):
    def setUp(self):
        super(SortStandardizeTestCase, self).setUp()
        self.column = diagrams.Column(8, [1, 3, 4, 5, 7, 8])
        self.filling = fillings.ColumnFilling(
            self.column, {3: 3, 4: 1, 7: 6, 8: 2})

    def test_sort(self):
        result = fillings.sort_filling(self.filling)
        self.assertEqual({3: 1, 4: 2, 7: 3, 8: 6}, result.entries)
        self.assertTrue(result.is_increasing())

    def test_standardize(self):
        result = fillings.standardize(fillings.sort_filling(self.filling))
        self.assertEqual({1: 1, 3: 2, 4: 3, 7: 6}, result.entries)

    def test_standardized_filling_is_greedy(self):
        result = fillings.standardize(fillings.sort_filling(self.filling))
        self.assertEqual(fillings.fill_column(self.column, (1, 2, 3, 6)),
                         result)

    def test_sort_rejects_unflagged(self):
        filling = fillings.ColumnFilling(diagrams.Column(3, [1]), {1: 2})
        self.assertRaises(exceptions.InvariantViolationException,
                          fillings.sort_filling, filling)

    def test_standardize_rejects_unsorted(self):
        self.assertRaises(exceptions.InvariantViolationException,
                          fillings.standardize, self.filling)
