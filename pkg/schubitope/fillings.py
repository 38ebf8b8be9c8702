# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Greedy fillings of diagram columns and the Schubert matroid ranks.

Every entry v of a word pi is placed, in order, into the topmost empty box
of the column whose row index is at least v. Entries finding no such box
are skipped. The number of placed entries is the rank r_C(S) when pi is
any ordering of S.
"""

import logging
import random

from schubitope import config
from schubitope import diagrams
from schubitope import exceptions
from schubitope import matroids
from schubitope import utils

LOG = logging.getLogger(__name__)

EMPTY_BOX_SYMBOL = u"·"


class ColumnFilling(object):
    """A partial assignment of integers to the boxes of a column.

    Values are kept in an array indexed by row; None marks an empty box.
    """
    __slots__ = ("_column", "_values")

    def __init__(self, column, entries=None):
        values = [None] * (column.n + 1)
        for row, value in (entries or {}).items():
            if row not in column:
                raise exceptions.InvalidDiagramException(
                    "Row %r is not a box of the column" % (row,),
                    field="filling")
            if not utils.is_integer(value) or value < 1:
                raise exceptions.DomainException(
                    "Filling values must be positive integers: %r" % (value,),
                    field="filling")
            values[row] = value
        self._column = column
        self._values = tuple(values)

    @property
    def column(self):
        return self._column

    @property
    def n(self):
        return self._column.n

    @property
    def entries(self):
        """Mapping row -> value of the occupied boxes."""
        return dict((row, v) for row, v in enumerate(self._values)
                    if v is not None)

    def value(self, row):
        return self._values[row]

    def occupied_rows(self):
        return [row for row, v in enumerate(self._values) if v is not None]

    def empty_rows(self):
        return [row for row in self._column.sorted_rows()
                if self._values[row] is None]

    def ordered_values(self):
        """Values read from top to bottom."""
        return [v for v in self._values if v is not None]

    @property
    def size(self):
        return len(self.occupied_rows())

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, ColumnFilling) and
                self._column == other._column and
                self._values == other._values)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._column, self._values))

    def __repr__(self):
        return "ColumnFilling(%s)" % self.entries

    def is_flagged(self):
        return all(v <= row for row, v in self.entries.items())

    def is_column_strict(self):
        values = self.ordered_values()
        return len(set(values)) == len(values)

    def is_increasing(self):
        values = self.ordered_values()
        return all(a < b for a, b in zip(values, values[1:]))

    def counts(self):
        counts = [0] * self.n
        for v in self.ordered_values():
            if v <= self.n:
                counts[v - 1] += 1
        return counts

    def render_text(self):
        lines = []
        for row in range(1, self.n + 1):
            if row not in self._column:
                lines.append(diagrams.EMPTY_SYMBOL)
            elif self._values[row] is None:
                lines.append(EMPTY_BOX_SYMBOL)
            else:
                lines.append(str(self._values[row]))
        return "\n".join(lines)

    def to_json_dict(self):
        return {"n": self.n, "rows": self._column.sorted_rows(),
                "entries": [[row, v] for row, v in
                            sorted(self.entries.items())]}

    @classmethod
    def from_json_dict(cls, doc):
        n = utils.require_int(doc, "n", "filling")
        rows = utils.require_list(doc, "rows", "filling")
        entries = utils.require_list(doc, "entries", "filling")
        column = diagrams.Column(n, rows)
        return cls(column, dict((row, v) for row, v in entries))


class DiagramFilling(object):
    """Independent column fillings of a diagram."""

    def __init__(self, diagram, columns):
        if len(columns) != diagram.n:
            raise exceptions.DimensionMismatchException(
                diagram.n, len(columns))
        self._diagram = diagram
        self._columns = tuple(columns)

    @property
    def diagram(self):
        return self._diagram

    @property
    def columns(self):
        return self._columns

    @property
    def entries(self):
        """Mapping (row, col) -> value of the occupied boxes."""
        entries = {}
        for j, filling in enumerate(self._columns):
            for row, v in filling.entries.items():
                entries[(row, j + 1)] = v
        return entries

    @property
    def size(self):
        return sum(f.size for f in self._columns)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return (isinstance(other, DiagramFilling) and
                self._diagram == other._diagram and
                self._columns == other._columns)

    def __ne__(self, other):
        return not self == other

    def is_flagged(self):
        return all(f.is_flagged() for f in self._columns)

    def is_column_strict(self):
        return all(f.is_column_strict() for f in self._columns)

    def counts(self):
        counts = [0] * self._diagram.n
        for filling in self._columns:
            for k, c in enumerate(filling.counts()):
                counts[k] += c
        return tuple(counts)

    def render_text(self):
        def _cell(i, j):
            value = self._columns[j - 1].value(i)
            return EMPTY_BOX_SYMBOL if value is None else str(value)
        return self._diagram.render_text(cell=_cell)

    def to_json_dict(self):
        return {"diagram": self._diagram.to_json_dict(),
                "entries": [[row, col, v] for (row, col), v in
                            sorted(self.entries.items())]}

    @classmethod
    def from_json_dict(cls, doc):
        if not isinstance(doc, dict):
            raise exceptions.DomainException(
                "Expected a JSON object", field="filling")
        diagram = diagrams.Diagram.from_json_dict(doc.get("diagram"))
        per_column = [{} for _ in range(diagram.n)]
        for entry in utils.require_list(doc, "entries", "filling"):
            if not isinstance(entry, list) or len(entry) != 3:
                raise exceptions.DomainException(
                    "Entries must be [row, col, value] triples",
                    field="filling")
            row, col, value = entry
            if (row, col) not in diagram:
                raise exceptions.InvalidDiagramException(
                    "Entry at (%r, %r) is not a box" % (row, col),
                    field="filling")
            per_column[col - 1][row] = value
        return cls(diagram, [ColumnFilling(diagram.column(j + 1), e)
                             for j, e in enumerate(per_column)])


def _check_word(pi, n):
    pi = tuple(pi)
    if len(set(pi)) != len(pi):
        raise exceptions.DomainException(
            "Filling word has repeated entries: %s" % list(pi), field="perm")
    for v in pi:
        if not utils.is_integer(v) or v < 1 or v > n:
            raise exceptions.DomainException(
                "Filling word entry %r is not in [1, %d]" % (v, n),
                field="perm")
    return pi


def fill_column(column, pi):
    pi = _check_word(pi, column.n)
    rows = column.sorted_rows()
    values = [None] * (column.n + 1)
    for v in pi:
        for row in rows:
            if row >= v and values[row] is None:
                values[row] = v
                break
    return ColumnFilling(column, dict((row, v) for row, v in
                                      enumerate(values) if v is not None))


def fill_diagram(diagram, w):
    if w.degree != diagram.n:
        raise exceptions.DimensionMismatchException(diagram.n, w.degree)
    return DiagramFilling(diagram, [fill_column(c, w.entries)
                                    for c in diagram.columns()])


def vertex_vector(diagram, w):
    """x(w): x_k counts the appearances of k in the filling F_w(D)."""
    return fill_diagram(diagram, w).counts()


def _check_rank_order():
    return config.get_app_config().get_bool_value(
        "check_rank_order", "debug", False)


def rank_filling(column, subset, order=None):
    """r_C(S) as the size of the greedy filling by an ordering of S."""
    subset = frozenset(subset)
    if order is None:
        order = sorted(subset)
    elif frozenset(order) != subset or len(order) != len(subset):
        raise exceptions.InvalidSubsetException(
            "%s is not an ordering of %s" % (list(order), sorted(subset)))
    rank = fill_column(column, order).size
    if _check_rank_order() and len(subset) > 1:
        shuffled = list(subset)
        random.shuffle(shuffled)
        for other in (sorted(subset, reverse=True), shuffled):
            other_rank = fill_column(column, other).size
            if other_rank != rank:
                raise exceptions.InvariantViolationException(
                    "Filling rank of %s depends on the order of %s: "
                    "%d != %d" % (column, sorted(subset), rank, other_rank))
    return rank


def rank_brute(column, subset):
    """r_C(S) = max #(S & B) over the bases of SM_n(C)."""
    return matroids.matroid_rank(column.rows, column.n, subset)


def rank_max_filling(column, subset):
    """Maximum size of a column-strict flagged filling with values in S."""
    subset = sorted(frozenset(subset))
    matroids.check_enumeration_size(column.n, len(column))
    rows = column.sorted_rows()
    best = [0]

    def _search(index, used, placed):
        if placed + len(rows) - index <= best[0]:
            return
        if index == len(rows):
            best[0] = placed
            return
        row = rows[index]
        for v in subset:
            if v <= row and v not in used:
                used.add(v)
                _search(index + 1, used, placed + 1)
                used.remove(v)
        _search(index + 1, used, placed)

    _search(0, set(), 0)
    return best[0]


def rank_diagram(diagram, subset):
    """r_D(S) = r_1(S) + ... + r_n(S) over the columns of D."""
    subset = frozenset(subset)
    return sum(rank_filling(c, subset) for c in diagram.columns())


def sort_filling(filling):
    """Rearranges the entries increasingly from top to bottom."""
    if not filling.is_flagged() or not filling.is_column_strict():
        raise exceptions.InvariantViolationException(
            "Sorting requires a flagged column-strict filling: %r" % filling)
    rows = filling.occupied_rows()
    values = sorted(filling.ordered_values())
    result = ColumnFilling(filling.column, dict(zip(rows, values)))
    if not result.is_flagged():
        raise exceptions.InvariantViolationException(
            "Sorted filling is not flagged: %r" % result)
    return result


def standardize(filling):
    """Moves every entry, smallest first, to the topmost empty box above it
    whose row index is at least the entry.
    """
    if not filling.is_flagged() or not filling.is_increasing():
        raise exceptions.InvariantViolationException(
            "Standardization requires a flagged increasing filling: %r" %
            filling)
    entries = filling.entries
    rows = filling.column.sorted_rows()
    for current, value in sorted(entries.items(), key=lambda e: e[1]):
        for row in rows:
            if row >= current:
                break
            if row >= value and row not in entries:
                del entries[current]
                entries[row] = value
                break
    result = ColumnFilling(filling.column, entries)
    if not result.is_flagged() or not result.is_increasing():
        raise exceptions.InvariantViolationException(
            "Standardized filling is not flagged and increasing: %r" %
            result)
    return result
