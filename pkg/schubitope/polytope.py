# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Halfspace description and vertices of the Schubitope S_D.

S_D is cut out of R^n by sum(x) = #D and, for every proper nonempty
S of [n], sum_{i in S} x_i <= theta_D(S). Its vertices are the vectors
x(w) of the greedy fillings F_w(D), w in S_n.
"""

import collections
import logging

from oslo_utils import timeutils
import six

from schubitope import config
from schubitope import constants
from schubitope import diagrams
from schubitope import exceptions
from schubitope import fillings
from schubitope import matroids
from schubitope import perms
from schubitope import utils

LOG = logging.getLogger(__name__)

OPEN = "("
CLOSE = ")"
STAR = u"★"


class ParenWord(object):
    __slots__ = ("_symbols",)

    def __init__(self, symbols):
        symbols = tuple(symbols)
        for s in symbols:
            if s not in (OPEN, CLOSE, STAR):
                raise exceptions.DomainException(
                    "Unknown word symbol %r" % (s,), field="word")
        self._symbols = symbols

    @property
    def symbols(self):
        return self._symbols

    def __len__(self):
        return len(self._symbols)

    def __eq__(self, other):
        return (isinstance(other, ParenWord) and
                self._symbols == other._symbols)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._symbols)

    def __str__(self):
        return "".join(self._symbols)

    def __repr__(self):
        return "ParenWord(%s)" % str(self)

    def matched_pairs(self):
        """Pairs matched inside-out: a close pairs with the latest open."""
        pending = 0
        pairs = 0
        for s in self._symbols:
            if s == OPEN:
                pending += 1
            elif s == CLOSE and pending:
                pending -= 1
                pairs += 1
        return pairs

    def stars(self):
        return sum(1 for s in self._symbols if s == STAR)

    def value(self):
        return self.matched_pairs() + self.stars()


class HRep(object):
    """sum(x) = total and sum_{i in S} x_i <= bounds(S).

    Bounds are keyed by the bitmask of S and iterated in increasing
    bitmask order.
    """

    def __init__(self, n, total, bounds):
        if not utils.is_integer(n) or n < 0:
            raise exceptions.DomainException(
                "Dimension must be a non-negative integer: %r" % (n,),
                field="n")
        if not utils.is_integer(total):
            raise exceptions.DomainException(
                "Total must be an integer: %r" % (total,), field="total")
        full = utils.full_mask(n)
        checked = {}
        for mask, bound in bounds.items():
            if not utils.is_integer(mask) or mask <= 0 or mask >= full:
                raise exceptions.InvalidSubsetException(
                    "Bounds are stored for proper nonempty subsets only: %s"
                    % sorted(utils.subset_from_mask(mask, n)))
            if not utils.is_integer(bound) or bound < 0:
                raise exceptions.DomainException(
                    "Bounds must be non-negative integers: %r" % (bound,),
                    field="bounds")
            checked[mask] = bound
        self._n = n
        self._total = total
        self._bounds = checked

    @property
    def n(self):
        return self._n

    @property
    def total(self):
        return self._total

    @property
    def bounds(self):
        return dict(self._bounds)

    def __len__(self):
        return len(self._bounds)

    def __eq__(self, other):
        return (isinstance(other, HRep) and self._n == other._n and
                self._total == other._total and
                self._bounds == other._bounds)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "HRep(n=%d, total=%d, %d bounds)" % (
            self._n, self._total, len(self._bounds))

    def items(self):
        """(mask, bound) pairs in increasing bitmask order."""
        return sorted(self._bounds.items())

    def bound(self, subset):
        return self._bounds.get(utils.mask_from_subset(subset, self._n))

    def is_complete(self):
        return len(self._bounds) == max(0, (1 << self._n) - 2)

    def set_function(self):
        """f with f(empty) = 0, f([n]) = total and f(S) = bounds(S)."""
        full = utils.full_mask(self._n)

        def _f(subset):
            mask = utils.mask_from_subset(subset, self._n)
            if mask == 0:
                return 0
            if mask == full:
                return self._total
            return self._bounds[mask]
        return _f

    def to_json_dict(self):
        return {"n": self._n, "total": self._total,
                "bounds": [{"S": sorted(utils.subset_from_mask(m, self._n)),
                            "b": b} for m, b in self.items()]}

    @classmethod
    def from_json_dict(cls, doc):
        n = utils.require_int(doc, "n", "hrep")
        total = utils.require_int(doc, "total", "hrep")
        bounds = {}
        for entry in utils.require_list(doc, "bounds", "hrep"):
            subset = utils.require_list(entry, "S", "hrep")
            bound = utils.require_int(entry, "b", "hrep")
            mask = utils.mask_from_subset(subset, n)
            if len(set(subset)) != len(subset) or mask in bounds:
                raise exceptions.InvalidSubsetException(
                    "Repeated subset %s" % subset, field="hrep")
            bounds[mask] = bound
        return cls(n, total, bounds)

    @classmethod
    def from_hform(cls, text):
        lines = [line.split() for line in text.splitlines() if line.strip()]
        try:
            n, total = [int(v) for v in lines[0]]
            bounds = {}
            for fields in lines[1:]:
                mask, bound = [int(v) for v in fields]
                bounds[mask] = bound
        except (IndexError, ValueError):
            raise exceptions.DomainException(
                "Malformed H-format document", field="hrep")
        return cls(n, total, bounds)


def column_word(diagram, j, subset):
    col = diagrams.column(diagram, j)
    subset = frozenset(subset)
    symbols = []
    for i in range(1, diagram.n + 1):
        if i in col:
            symbols.append(STAR if i in subset else CLOSE)
        elif i in subset:
            symbols.append(OPEN)
    return ParenWord(symbols)


def _check_subset(subset, n):
    subset = frozenset(subset)
    utils.mask_from_subset(subset, n)
    return subset


def theta_columns(diagram, subset):
    subset = _check_subset(subset, diagram.n)
    return [column_word(diagram, j, subset).value()
            for j in range(1, diagram.n + 1)]


def theta(diagram, subset):
    return sum(theta_columns(diagram, subset))


def hrep(diagram):
    n = diagram.n
    config.enforce_limit("halfspace description degree", n,
                         "max_hrep_degree", 10)
    bounds = {}
    for mask in utils.iter_proper_masks(n):
        bounds[mask] = theta(diagram, utils.subset_from_mask(mask, n))
    LOG.debug("Computed %d theta bounds for n=%d", len(bounds), n)
    return HRep(n, len(diagram), bounds)


def member(h, point):
    point = tuple(point)
    if len(point) != h.n:
        raise exceptions.DimensionMismatchException(h.n, len(point))
    return violated_bound(h, point) is None and sum(point) == h.total


def violated_bound(h, point):
    """First (mask, lhs, bound) with sum_{i in S} p_i > bound(S), or None."""
    for mask, bound in h.items():
        lhs = sum(point[i] for i in range(h.n) if mask >> i & 1)
        if lhs > bound:
            return mask, lhs, bound
    return None


def edmonds_vertex(f, w):
    """x_{w_k} = f({w_1..w_k}) - f({w_1..w_{k-1}})."""
    x = [0] * w.degree
    prefix = set()
    previous = f(frozenset(prefix))
    for v in w.entries:
        prefix.add(v)
        current = f(frozenset(prefix))
        x[v - 1] = current - previous
        previous = current
    return tuple(x)


def is_submodular(f, n):
    """Local exchange test f(S+i) + f(S+j) >= f(S+i+j) + f(S).

    Returns the first violating (S, i, j) in bitmask order, or None.
    """
    values = [f(utils.subset_from_mask(m, n)) for m in utils.iter_masks(n)]
    for mask in utils.iter_masks(n):
        for i in range(n):
            if mask >> i & 1:
                continue
            for j in range(i + 1, n):
                if mask >> j & 1:
                    continue
                with_i = mask | 1 << i
                with_j = mask | 1 << j
                if (values[with_i] + values[with_j] <
                        values[with_i | 1 << j] + values[mask]):
                    return utils.subset_from_mask(mask, n), i + 1, j + 1
    return None


def rank_function(diagram):
    def _f(subset):
        return fillings.rank_diagram(diagram, subset)
    return _f


def theta_function(diagram):
    def _f(subset):
        return theta(diagram, subset)
    return _f


class BaseVertexEnumerator(object):
    def vertices(self, diagram):
        raise NotImplementedError()


class SweepVertexEnumerator(BaseVertexEnumerator):
    """Deduplicated x(w) over all of S_n."""

    def vertices(self, diagram):
        config.enforce_limit("permutation sweep degree", diagram.n,
                             "max_sweep_degree", 8)
        result = set()
        count = 0
        for w in perms.all_permutations(diagram.n):
            result.add(fillings.vertex_vector(diagram, w))
            count += 1
        LOG.debug("Swept %d permutations, %d distinct vertices",
                  count, len(result))
        return sorted(result)


class SkylineVertexEnumerator(BaseVertexEnumerator):
    """V(alpha) = {lambda(alpha).sigma : sigma <= w(alpha)} for D(alpha)."""

    def vertices(self, diagram):
        alpha = diagram.as_composition()
        if alpha is None:
            raise exceptions.InvalidDiagramException(
                "The skyline method requires a skyline diagram")
        return sorted(c.parts for c in perms.vertex_compositions(alpha))


def get_vertex_enumerator(kind=constants.ENUMERATOR_SWEEP):
    if kind == constants.ENUMERATOR_SWEEP:
        return SweepVertexEnumerator()
    elif kind == constants.ENUMERATOR_SKYLINE:
        return SkylineVertexEnumerator()
    else:
        raise exceptions.DomainException(
            "Invalid vertex enumeration method: %s" % kind, field="method")


def vertices(diagram, method=None):
    enumerator = get_vertex_enumerator(method or constants.ENUMERATOR_SWEEP)
    with timeutils.StopWatch() as watch:
        result = enumerator.vertices(diagram)
    LOG.debug("Vertex enumeration took %.3fs", watch.elapsed())
    return result


def vertex_fibers(diagram):
    """Maps every vertex x to the sorted permutations w with x(w) = x."""
    config.enforce_limit("permutation sweep degree", diagram.n,
                         "max_sweep_degree", 8)
    fibers = collections.defaultdict(list)
    for w in perms.all_permutations(diagram.n):
        fibers[fillings.vertex_vector(diagram, w)].append(w)
    return collections.OrderedDict(
        (x, sorted(fibers[x])) for x in sorted(fibers))


def column_vertex_sums(diagram):
    """{sum_j v_j : v_j a vertex of P(SM_n(D_j))}."""
    sums = set([(0,) * diagram.n])
    for col in diagram.columns():
        column_vertices = matroids.matroid_polytope_vertices(col)
        sums = set(tuple(a + b for a, b in zip(s, v))
                   for s in sums for v in column_vertices)
    return sorted(sums)


def vertex_set_to_json_dict(points):
    return {"vertices": [[_json_number(c) for c in p]
                         for p in sorted(tuple(p) for p in points)]}


def vertex_set_from_json_dict(doc):
    points = []
    for point in utils.require_list(doc, "vertices", "vertices"):
        if not isinstance(point, list):
            raise exceptions.DomainException(
                "Vertices must be coordinate lists", field="vertices")
        points.append(tuple(_parse_number(c) for c in point))
    return sorted(points)


def _json_number(value):
    if utils.is_integer(value):
        return value
    formatted = utils.format_rational(value)
    return int(formatted) if "/" not in formatted else formatted


def _parse_number(value):
    if utils.is_integer(value):
        return value
    if isinstance(value, six.string_types):
        return utils.parse_rational(value, "vertices")
    raise exceptions.DomainException(
        "Coordinates must be integers or \"p/q\" strings: %r" % (value,),
        field="vertices")
