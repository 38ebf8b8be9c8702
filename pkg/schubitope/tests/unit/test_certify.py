# Copyright 2026 Schubitope Developers
# All Rights Reserved.
# Licensed under the AGPLv3, see LICENCE file for details.

import fractions

from schubitope import certify
from schubitope import constants
from schubitope import diagrams
from schubitope import exceptions
from schubitope import perms
from schubitope import polynomials
from schubitope import polytope
from schubitope.tests.unit import fixtures

# x1^2 x2 + x1^2 x3 + x1 x2^2 + x1 x2 x3 + x2^2 x3
SCHUBERT_1432_EXPONENTS = [(2, 1, 0, 0), (2, 0, 1, 0), (1, 2, 0, 0),
                           (1, 1, 1, 0), (0, 2, 1, 0)]


class ExactLinearAlgebraTestCase(fixtures.TempDirTestCase):
    def test_feasible_solution(self):
        solution = certify.feasible_solution([[1, 1], [1, -1]], [2, 0])
        self.assertEqual([1, 1], solution)

    def test_infeasible(self):
        self.assertIsNone(certify.feasible_solution([[1, 1]], [-1]))
        self.assertIsNone(certify.feasible_solution([[1, 0], [0, 1]],
                                                    [1, -1]))

    def test_convex_combination(self):
        others = [p for p in SCHUBERT_1432_EXPONENTS if p != (1, 1, 1, 0)]
        coefficients = certify.find_convex_combination((1, 1, 1, 0), others)
        self.assertIsNotNone(coefficients)
        self.assertEqual(1, sum(coefficients))
        self.assertTrue(all(c >= 0 for c in coefficients))
        point = [sum(c * q[k] for c, q in zip(coefficients, others))
                 for k in range(4)]
        self.assertEqual([1, 1, 1, 0], point)

    def test_convex_combination_dimension(self):
        self.assertRaises(exceptions.DimensionMismatchException,
                          certify.find_convex_combination, (1, 0), [(1,)])
        self.assertIsNone(certify.find_convex_combination((1, 0), []))

    def test_extreme_points(self):
        self.assertEqual(
            [(0, 2, 1, 0), (1, 2, 0, 0), (2, 0, 1, 0), (2, 1, 0, 0)],
            certify.extreme_points(SCHUBERT_1432_EXPONENTS))

    def test_solve_exact(self):
        self.assertEqual([2, 1], certify.solve_exact([[1, 1], [1, -1]],
                                                     [3, 1]))
        self.assertEqual([fractions.Fraction(1, 2)],
                         certify.solve_exact([[2]], [1]))
        self.assertIsNone(certify.solve_exact([[1, 1], [2, 2]], [1, 2]))


class HRepVerticesTestCase(fixtures.TempDirTestCase):
    def test_greedy_method(self):
        h = polytope.hrep(fixtures.SMALL_DIAGRAM)
        points, method = certify.hrep_vertices(h)
        self.assertEqual(fixtures.SMALL_VERTICES, points)
        self.assertEqual(certify.METHOD_GREEDY, method)

    def test_tight_method(self):
        # x_i <= 1 and every three coordinates sum to at most 2
        h = polytope.HRep(4, 2, {1: 1, 2: 1, 4: 1, 8: 1,
                                 7: 2, 11: 2, 13: 2, 14: 2})
        points, method = certify.hrep_vertices(h)
        self.assertEqual(certify.METHOD_TIGHT, method)
        self.assertEqual([(0, 0, 1, 1), (0, 1, 0, 1), (0, 1, 1, 0),
                          (1, 0, 0, 1), (1, 0, 1, 0), (1, 1, 0, 0)], points)

    def test_lattice_points(self):
        h = polytope.hrep(fixtures.SMALL_DIAGRAM)
        self.assertEqual(sorted(fixtures.KEY_103_TERMS),
                         certify.lattice_points(h))

    def test_lattice_points_need_bounds(self):
        with self.assertRaises(exceptions.DomainException) as cm:
            certify.lattice_points(polytope.HRep(3, 2, {1: 1}))
        self.assertEqual("hrep", cm.exception.field)


class CertifyVerticesTestCase(fixtures.TempDirTestCase):
    def setUp(self):
        super(CertifyVerticesTestCase, self).setUp()
        self.h = polytope.hrep(fixtures.SMALL_DIAGRAM)

    def test_passes(self):
        report = certify.certify_vertices(self.h, fixtures.SMALL_VERTICES)
        self.assertTrue(report.passed)
        self.assertEqual(constants.STATUS_PASS, report.status)
        self.assertEqual(certify.METHOD_GREEDY, report.method)
        doc = report.to_json_dict()
        self.assertEqual(["membership", "extremality", "completeness"],
                         [c["name"] for c in doc["checks"]])

    def test_segment(self):
        h = polytope.hrep(diagrams.Diagram(2, [(2, 1)]))
        self.assertEqual(1, h.total)
        self.assertTrue(certify.certify_vertices(h, [(1, 0), (0, 1)]).passed)

    def test_missing_vertex(self):
        report = certify.certify_vertices(self.h, fixtures.SMALL_VERTICES[1:])
        self.assertFalse(report.passed)
        check = report.check(certify.CHECK_COMPLETENESS)
        self.assertFalse(check.passed)
        self.assertEqual({"vertex": [1, 0, 3]}, check.witness)
        self.assertTrue(report.check(certify.CHECK_MEMBERSHIP).passed)

    def test_interior_point(self):
        report = certify.certify_vertices(
            self.h, fixtures.SMALL_VERTICES + [(2, 1, 1)])
        check = report.check(certify.CHECK_EXTREMALITY)
        self.assertFalse(check.passed)
        self.assertEqual([2, 1, 1], check.witness["point"])
        self.assertTrue(report.check(certify.CHECK_COMPLETENESS).passed)

    def test_point_outside(self):
        report = certify.certify_vertices(
            self.h, fixtures.SMALL_VERTICES + [(4, 0, 0)])
        check = report.check(certify.CHECK_MEMBERSHIP)
        self.assertFalse(check.passed)
        self.assertEqual([1], check.witness["subset"])
        self.assertEqual(3, check.witness["bound"])

    def test_dimension_mismatch(self):
        self.assertRaises(exceptions.DimensionMismatchException,
                          certify.certify_vertices, self.h, [(1, 3)])

    def test_key_newton_polytope(self):
        alpha = perms.Composition((1, 0, 3))
        exponents = polynomials.newton_exponents(
            polynomials.key_polynomial(alpha))
        points = certify.extreme_points(exponents)
        self.assertEqual(sorted(c.parts for c in
                                perms.vertex_compositions(alpha)), points)
        h = polytope.hrep(diagrams.skyline(alpha))
        self.assertTrue(certify.certify_vertices(h, points).passed)
        for e in exponents:
            self.assertTrue(polytope.member(h, e))
