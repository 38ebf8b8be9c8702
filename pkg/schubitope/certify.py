# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

"""Exact certification that a point set is the vertex set of an HRep.

All arithmetic uses fractions.Fraction; no floating point is involved.
"""

import fractions
import itertools
import logging

from schubitope import config
from schubitope import constants
from schubitope import exceptions
from schubitope import perms
from schubitope import polytope
from schubitope import utils

LOG = logging.getLogger(__name__)

CHECK_MEMBERSHIP = "membership"
CHECK_EXTREMALITY = "extremality"
CHECK_COMPLETENESS = "completeness"

METHOD_GREEDY = "greedy"
METHOD_TIGHT = "tight"

_ZERO = fractions.Fraction(0)
_ONE = fractions.Fraction(1)


def _pivot(tableau, cost, row_index, col_index):
    pivot_row = tableau[row_index]
    factor = pivot_row[col_index]
    pivot_row = [x / factor for x in pivot_row]
    tableau[row_index] = pivot_row
    for i, row in enumerate(tableau):
        if i != row_index and row[col_index] != 0:
            f = row[col_index]
            tableau[i] = [x - f * y for x, y in zip(row, pivot_row)]
    f = cost[col_index]
    if f != 0:
        cost[:] = [x - f * y for x, y in zip(cost, pivot_row)]


def feasible_solution(rows, rhs):
    """Finds y >= 0 with rows . y = rhs, or returns None.

    Phase I of the simplex method on a tableau with one artificial
    variable per row; Bland's rule rules out cycling.
    """
    m = len(rows)
    num_vars = len(rows[0]) if rows else 0
    width = num_vars + m
    tableau = []
    for i in range(m):
        row = [fractions.Fraction(x) for x in rows[i]]
        b = fractions.Fraction(rhs[i])
        if b < 0:
            row = [-x for x in row]
            b = -b
        artificial = [_ZERO] * m
        artificial[i] = _ONE
        tableau.append(row + artificial + [b])
    basis = [num_vars + i for i in range(m)]
    cost = [_ZERO] * num_vars + [_ONE] * m + [_ZERO]
    for row in tableau:
        cost = [c - x for c, x in zip(cost, row)]

    pivots = 0
    while True:
        entering = None
        for j in range(width):
            if cost[j] < 0:
                entering = j
                break
        if entering is None:
            break
        leaving = None
        best = None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[width] / row[entering]
                if (best is None or ratio < best or
                        (ratio == best and basis[i] < basis[leaving])):
                    best = ratio
                    leaving = i
        if leaving is None:
            raise exceptions.InvariantViolationException(
                "Unbounded phase I objective")
        _pivot(tableau, cost, leaving, entering)
        basis[leaving] = entering
        pivots += 1
    LOG.debug("Phase I finished after %d pivots", pivots)

    if cost[width] != 0:
        return None
    solution = [_ZERO] * num_vars
    for i, j in enumerate(basis):
        if j < num_vars:
            solution[j] = tableau[i][width]
    for row, b in zip(rows, rhs):
        if sum(a * y for a, y in zip(row, solution)) != b:
            raise exceptions.InvariantViolationException(
                "Phase I returned an inconsistent solution")
    return solution


def find_convex_combination(point, candidates):
    """Coefficients l >= 0 with sum(l) = 1 and sum(l_q q) = point."""
    candidates = [tuple(q) for q in candidates]
    if not candidates:
        return None
    n = len(point)
    for q in candidates:
        if len(q) != n:
            raise exceptions.DimensionMismatchException(n, len(q))
    rows = [[q[k] for q in candidates] for k in range(n)]
    rows.append([1] * len(candidates))
    rhs = list(point) + [1]
    return feasible_solution(rows, rhs)


def extreme_points(points):
    """The points of P that are not convex combinations of the others."""
    points = sorted(set(tuple(p) for p in points))
    result = []
    for p in points:
        others = [q for q in points if q != p]
        if find_convex_combination(p, others) is None:
            result.append(p)
    return result


def solve_exact(matrix, rhs):
    """Gaussian elimination over the rationals.

    Returns the unique solution of a square system or None when singular.
    """
    size = len(matrix)
    augmented = [[fractions.Fraction(x) for x in row] +
                 [fractions.Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(size):
        pivot = None
        for r in range(col, size):
            if augmented[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return None
        augmented[col], augmented[pivot] = augmented[pivot], augmented[col]
        factor = augmented[col][col]
        augmented[col] = [x / factor for x in augmented[col]]
        for r in range(size):
            if r != col and augmented[r][col] != 0:
                f = augmented[r][col]
                augmented[r] = [x - f * y for x, y in
                                zip(augmented[r], augmented[col])]
    return [row[size] for row in augmented]


def _normalize(point):
    return tuple(int(c) if fractions.Fraction(c).denominator == 1
                 else fractions.Fraction(c) for c in point)


def _greedy_vertices(h):
    f = h.set_function()
    return sorted(set(polytope.edmonds_vertex(f, w)
                      for w in perms.all_permutations(h.n)))


def _tight_vertices(h):
    n = h.n
    items = h.items()
    count = _binomial(len(items), n - 1)
    config.enforce_limit("tight constraint combinations", count,
                         "max_tight_combinations", 250000)
    found = set()
    for chosen in itertools.combinations(items, n - 1):
        matrix = [[1] * n]
        rhs = [h.total]
        for mask, bound in chosen:
            matrix.append([1 if mask >> i & 1 else 0 for i in range(n)])
            rhs.append(bound)
        solution = solve_exact(matrix, rhs)
        if solution is not None and polytope.member(h, solution):
            found.add(_normalize(solution))
    LOG.debug("Examined %d tight constraint systems", count)
    return sorted(found)


def _binomial(n, k):
    if k < 0 or k > n:
        return 0
    result = 1
    for i in range(k):
        result = result * (n - i) // (i + 1)
    return result


def _is_bounded(h):
    n = h.n
    if n <= 1:
        return True
    full = utils.full_mask(n)
    for i in range(n):
        single = 1 << i
        co_single = full ^ single
        if (h.bound(utils.subset_from_mask(single, n)) is None or
                h.bound(utils.subset_from_mask(co_single, n)) is None):
            return False
    return True


def hrep_vertices(h):
    """Vertices of the H-polytope and the method used to find them."""
    config.enforce_limit("certification degree", h.n, "max_certify_degree",
                         6)
    if h.n == 0:
        return [()] if h.total == 0 else [], METHOD_GREEDY
    if h.is_complete() and polytope.is_submodular(h.set_function(),
                                                  h.n) is None:
        return _greedy_vertices(h), METHOD_GREEDY
    return _tight_vertices(h), METHOD_TIGHT


def lattice_points(h):
    """All integer points of the H-polytope, sorted."""
    n = h.n
    if n == 0:
        return [()] if h.total == 0 else []
    if not _is_bounded(h):
        raise exceptions.DomainException(
            "Lattice points need singleton and co-singleton bounds",
            field="hrep")
    full = utils.full_mask(n)
    ranges = []
    for i in range(n):
        single = 1 << i
        upper = h.total if n == 1 else h.bound(
            utils.subset_from_mask(single, n))
        lower = h.total if n == 1 else h.total - h.bound(
            utils.subset_from_mask(full ^ single, n))
        ranges.append(range(lower, upper + 1))
    size = 1
    for r in ranges[:-1]:
        size *= len(r)
    config.enforce_limit("lattice point enumeration", size,
                         "max_lattice_points", 200000)
    points = []
    for head in itertools.product(*ranges[:-1]):
        last = h.total - sum(head)
        point = head + (last,)
        if last in ranges[-1] and polytope.member(h, point):
            points.append(point)
    return points


class CertificationCheck(object):
    def __init__(self, name, passed, witness=None):
        self.name = name
        self.passed = passed
        self.witness = witness

    def to_json_dict(self):
        return {"name": self.name, "passed": self.passed,
                "witness": self.witness}


class CertificationReport(object):
    def __init__(self, checks, method):
        self.checks = checks
        self.method = method

    @property
    def status(self):
        if all(c.passed for c in self.checks):
            return constants.STATUS_PASS
        return constants.STATUS_FAIL

    @property
    def passed(self):
        return self.status == constants.STATUS_PASS

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c

    def to_json_dict(self):
        return {"status": self.status, "method": self.method,
                "checks": [c.to_json_dict() for c in self.checks]}


def _format_point(point):
    return [utils.format_rational(c) if not utils.is_integer(c) else c
            for c in point]


def _check_membership(h, points):
    for p in points:
        if sum(p) != h.total:
            return CertificationCheck(CHECK_MEMBERSHIP, False, {
                "point": _format_point(p), "subset": list(range(1, h.n + 1)),
                "sum": utils.format_rational(sum(p)), "bound": h.total})
        violated = polytope.violated_bound(h, p)
        if violated is not None:
            mask, lhs, bound = violated
            return CertificationCheck(CHECK_MEMBERSHIP, False, {
                "point": _format_point(p),
                "subset": sorted(utils.subset_from_mask(mask, h.n)),
                "sum": utils.format_rational(lhs), "bound": bound})
    return CertificationCheck(CHECK_MEMBERSHIP, True)


def _check_extremality(points):
    for p in points:
        others = [q for q in points if q != p]
        combination = find_convex_combination(p, others)
        if combination is not None:
            return CertificationCheck(CHECK_EXTREMALITY, False, {
                "point": _format_point(p),
                "combination": [
                    {"point": _format_point(q),
                     "coefficient": utils.format_rational(c)}
                    for q, c in zip(others, combination) if c != 0]})
    return CertificationCheck(CHECK_EXTREMALITY, True)


def _check_completeness(h, points):
    if not _is_bounded(h):
        return CertificationCheck(CHECK_COMPLETENESS, False, {
            "reason": "missing singleton or co-singleton bounds"}), None
    expected, method = hrep_vertices(h)
    given = set(points)
    for v in expected:
        if v not in given:
            return CertificationCheck(CHECK_COMPLETENESS, False, {
                "vertex": _format_point(v)}), method
    return CertificationCheck(CHECK_COMPLETENESS, True), method


def certify_vertices(h, points):
    """Checks that P lies in H, that every p in P is extreme in P and that
    every vertex of H belongs to P.
    """
    points = sorted(set(_normalize(p) for p in points))
    for p in points:
        if len(p) != h.n:
            raise exceptions.DimensionMismatchException(h.n, len(p))
    membership = _check_membership(h, points)
    extremality = _check_extremality(points)
    completeness, method = _check_completeness(h, points)
    report = CertificationReport([membership, extremality, completeness],
                                 method)
    LOG.debug("Certification of %d points against %r: %s",
              len(points), h, report.status)
    return report
