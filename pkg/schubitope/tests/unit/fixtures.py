# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Shared diagrams and their known fillings."""

import os
import shutil
import tempfile
import unittest

from schubitope import config
from schubitope import diagrams
from schubitope import utils

# 18 boxes, n = 6, filled by w = 315624
LARGE_DIAGRAM = diagrams.Diagram(6, [
    (1, 5),
    (2, 1), (2, 2), (2, 3), (2, 5),
    (3, 1), (3, 6),
    (4, 1), (4, 2), (4, 3), (4, 4), (4, 6),
    (5, 2), (5, 6),
    (6, 1), (6, 2), (6, 4), (6, 5)])
LARGE_PERM = "315624"
LARGE_FILLING = {
    (1, 5): 1,
    (2, 1): 1, (2, 2): 1, (2, 3): 1, (2, 5): 2,
    (3, 1): 3, (3, 6): 3,
    (4, 1): 2, (4, 2): 3, (4, 3): 3, (4, 4): 3, (4, 6): 1,
    (5, 2): 5, (5, 6): 5,
    (6, 1): 5, (6, 2): 6, (6, 4): 1, (6, 5): 3}
LARGE_VERTEX = (6, 2, 6, 0, 3, 1)

# D = {(1,1), (3,1), (3,2), (3,3)}, the skyline of (1, 0, 3)
SMALL_DIAGRAM = diagrams.Diagram(3, [(1, 1), (3, 1), (3, 2), (3, 3)])
SMALL_VERTICES = [(1, 0, 3), (1, 3, 0), (3, 0, 1), (3, 1, 0)]
SMALL_VERTEX_BY_PERM = {
    "123": (3, 1, 0),
    "132": (3, 0, 1),
    "213": (1, 3, 0),
    "231": (1, 3, 0),
    "312": (1, 0, 3),
    "321": (1, 0, 3),
}
SMALL_FILLING_BY_PERM = {
    "123": {(1, 1): 1, (3, 1): 2, (3, 2): 1, (3, 3): 1},
    "132": {(1, 1): 1, (3, 1): 3, (3, 2): 1, (3, 3): 1},
    "213": {(1, 1): 1, (3, 1): 2, (3, 2): 2, (3, 3): 2},
    "231": {(1, 1): 1, (3, 1): 2, (3, 2): 2, (3, 3): 2},
    "312": {(1, 1): 1, (3, 1): 3, (3, 2): 3, (3, 3): 3},
    "321": {(1, 1): 1, (3, 1): 3, (3, 2): 3, (3, 3): 3},
}

WORD_EXAMPLE_DIAGRAM = diagrams.Diagram(5, [
    (1, 1), (2, 4), (2, 5), (3, 2), (3, 4), (4, 1), (5, 1), (5, 3), (5, 4)])
WORD_EXAMPLE_SUBSET = frozenset([1, 3])
WORD_EXAMPLE_WORDS = [u"★())", u"(★", u"(()", u"()★)", u"()("]
WORD_EXAMPLE_THETAS = [2, 1, 1, 2, 1]

KEY_103_TERMS = [
    (3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1), (2, 0, 2),
    (1, 3, 0), (1, 2, 1), (1, 1, 2), (1, 0, 3)]


class TempDirTestCase(unittest.TestCase):
    """Provides a scratch directory and restores the shared config."""

    def setUp(self):
        super(TempDirTestCase, self).setUp()
        self.tmp_dir = tempfile.mkdtemp()
        config.reset_app_config()

    def tearDown(self):
        config.reset_app_config()
        shutil.rmtree(self.tmp_dir, ignore_errors=True)
        super(TempDirTestCase, self).tearDown()

    def write_file(self, name, content):
        path = os.path.join(self.tmp_dir, name)
        with open(path, "wb") as f:
            f.write(content.encode("utf-8"))
        return path

    def write_json(self, name, doc):
        return self.write_file(name, utils.to_json(doc))
