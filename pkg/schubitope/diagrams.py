# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Diagrams: finite sets of boxes in an n x n grid.

Boxes are 1-indexed (row, col) pairs with rows counted from the top.
"""

import logging

from schubitope import exceptions
from schubitope import perms
from schubitope import utils

LOG = logging.getLogger(__name__)

BOX_SYMBOL = u"□"
EMPTY_SYMBOL = "."


class Column(object):
    __slots__ = ("_n", "_rows")

    def __init__(self, n, rows):
        if not utils.is_integer(n) or n < 0:
            raise exceptions.InvalidDiagramException(
                "Grid size must be a non-negative integer: %r" % (n,))
        rows = frozenset(rows)
        for i in rows:
            if not utils.is_integer(i) or i < 1 or i > n:
                raise exceptions.InvalidDiagramException(
                    "Row %r is outside of [1, %d]" % (i, n))
        self._n = n
        self._rows = rows

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    def sorted_rows(self):
        return sorted(self._rows)

    def __len__(self):
        return len(self._rows)

    def __contains__(self, row):
        return row in self._rows

    def __eq__(self, other):
        return (isinstance(other, Column) and self._n == other._n and
                self._rows == other._rows)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, self._rows))

    def __repr__(self):
        return "Column(n=%d, rows=%s)" % (self._n, self.sorted_rows())

    def as_diagram(self, j=1):
        """The single-column diagram with this column at position j."""
        return Diagram(self._n, [(i, j) for i in self._rows])


class Diagram(object):
    __slots__ = ("_n", "_boxes")

    def __init__(self, n, boxes):
        if not utils.is_integer(n) or n < 0:
            raise exceptions.InvalidDiagramException(
                "Grid size must be a non-negative integer: %r" % (n,))
        boxes = list(boxes)
        seen = set()
        for box in boxes:
            box = tuple(box)
            if (len(box) != 2 or not all(utils.is_integer(c) for c in box) or
                    not 1 <= box[0] <= n or not 1 <= box[1] <= n):
                raise exceptions.InvalidDiagramException(
                    "Box %r is outside of the %dx%d grid" % (box, n, n))
            if box in seen:
                raise exceptions.InvalidDiagramException(
                    "Duplicate box %r" % (box,))
            seen.add(box)
        self._n = n
        self._boxes = frozenset(seen)

    @classmethod
    def from_columns(cls, n, columns):
        boxes = []
        for j, rows in enumerate(columns):
            boxes.extend((i, j + 1) for i in rows)
        return cls(n, boxes)

    @classmethod
    def from_json_dict(cls, doc):
        n = utils.require_int(doc, "n", "diagram")
        boxes = utils.require_list(doc, "boxes", "diagram")
        for box in boxes:
            if not isinstance(box, list) or len(box) != 2:
                raise exceptions.InvalidDiagramException(
                    "Boxes must be [row, col] pairs, got %r" % (box,))
        return cls(n, [tuple(box) for box in boxes])

    @property
    def n(self):
        return self._n

    @property
    def boxes(self):
        """Boxes in row-major order."""
        return sorted(self._boxes)

    def __len__(self):
        return len(self._boxes)

    def __contains__(self, box):
        return tuple(box) in self._boxes

    def __eq__(self, other):
        return (isinstance(other, Diagram) and self._n == other._n and
                self._boxes == other._boxes)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._n, self._boxes))

    def __repr__(self):
        return "Diagram(n=%d, boxes=%s)" % (self._n, self.boxes)

    def column(self, j):
        return column(self, j)

    def columns(self):
        return [column(self, j) for j in range(1, self._n + 1)]

    def row_lengths(self):
        lengths = [0] * self._n
        for i, _ in self._boxes:
            lengths[i - 1] += 1
        return lengths

    def as_composition(self):
        """Returns alpha when this diagram is the skyline D(alpha)."""
        lengths = self.row_lengths()
        for i, length in enumerate(lengths):
            for j in range(1, length + 1):
                if (i + 1, j) not in self._boxes:
                    return None
        return perms.Composition(lengths)

    def render_text(self, cell=None):
        lines = []
        for i in range(1, self._n + 1):
            symbols = []
            for j in range(1, self._n + 1):
                if (i, j) not in self._boxes:
                    symbols.append(EMPTY_SYMBOL)
                elif cell is None:
                    symbols.append(BOX_SYMBOL)
                else:
                    symbols.append(cell(i, j))
            lines.append(" ".join(symbols))
        return "\n".join(lines)

    def to_json_dict(self):
        return {"n": self._n, "boxes": [list(box) for box in self.boxes]}


def column(diagram, j):
    if not utils.is_integer(j) or j < 1 or j > diagram.n:
        raise exceptions.DomainException(
            "Column %r is outside of [1, %d]" % (j, diagram.n),
            field="column")
    return Column(diagram.n, [i for i, c in diagram.boxes if c == j])


def rothe(w):
    """D(w) = {(i, j) : j < w_i and w^-1(j) > i}."""
    inverse = w.inverse()
    n = w.degree
    boxes = [(i, j) for i in range(1, n + 1) for j in range(1, w(i))
             if inverse(j) > i]
    return Diagram(n, boxes)


def skyline(alpha, field="alpha"):
    n = alpha.degree
    for part in alpha.parts:
        if part > n:
            raise exceptions.InvalidCompositionException(
                "Part %d exceeds the grid size %d" % (part, n), field=field)
    return Diagram(n, [(i + 1, j) for i, part in enumerate(alpha.parts)
                       for j in range(1, part + 1)])


def random_diagram(n, rng, density=0.5):
    return Diagram(n, [(i, j) for i in range(1, n + 1)
                       for j in range(1, n + 1) if rng.random() < density])


def load_diagram(path):
    return Diagram.from_json_dict(utils.read_json_file(path, "diagram"))
