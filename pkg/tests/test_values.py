"""
Tests for repeated values, distinct values, value maps and fiber probes.
"""

import unittest

from algebra import Polynomial, S, T, X, Y
from errors import UsageError, ZeroPolynomialError
from geometry import FiberKind, PointSet, distinct_values, fiber_probe, map_values, repeated_values

GRID = PointSet((i, j) for i in range(1, 4) for j in range(1, 4))
DISTANCE = (X - S) ** 2 + (Y - T) ** 2


class TestRepeatedValues(unittest.TestCase):

    def test_unit_distances(self):
        report = repeated_values(DISTANCE, GRID, 1)
        self.assertEqual(report.count, 24)
        self.assertEqual(report.extra["value"], "1")
        self.assertIn("repeated", [e.name for e in report.envelopes])

    def test_zero_distance(self):
        self.assertEqual(repeated_values(DISTANCE, GRID, 0).count, 9)

    def test_axes(self):
        P = PointSet([(0, 1), (0, 2), (1, 0), (2, 0)])
        self.assertEqual(repeated_values(X * S + Y * T, P).count, 8)

    def test_constant_value(self):
        with self.assertRaises(ZeroPolynomialError):
            repeated_values(Polynomial.constant(2), GRID, 2)


class TestDistinctValues(unittest.TestCase):

    def test_sums(self):
        P = PointSet([(1, 0), (2, 0), (3, 0)])
        report = distinct_values(X + S, P, list_values=True)
        self.assertEqual(report.count, 5)
        self.assertEqual(report.row_maximum, 3)
        self.assertEqual(report.to_dict(P)["values"], ["2", "3", "4", "5", "6"])

    def test_squared_distances(self):
        self.assertEqual(distinct_values(DISTANCE, GRID).count, 6)

    def test_constant(self):
        self.assertEqual(distinct_values(Polynomial.constant(3), GRID).count, 1)


class TestMapValues(unittest.TestCase):

    def test_image_of_vector_sum(self):
        P = PointSet((k, k) for k in range(1, 5))
        self.assertEqual(map_values(X + S, Y + T, P, mode="distinct").count, 7)

    def test_fiber_of_the_diagonal(self):
        report = map_values(X - S, Y - T, GRID)
        self.assertEqual(report.count, 9)
        self.assertTrue(report.coprime)

    def test_empty_fiber(self):
        self.assertEqual(map_values(X - S, X - S + 1, GRID).count, 0)

    def test_fiber_with_common_factor(self):
        P = PointSet([(1, 1), (2, 2)])
        report = map_values((X - S) * Y, (X - S) * X, P)
        self.assertEqual(report.count, 2)
        split = report.extra["split"]
        self.assertEqual(split["common_factor"], "x - s")
        self.assertEqual(split["on_common_factor"], "2")
        self.assertEqual(split["on_cofactors"], "0")

    def test_unknown_mode(self):
        with self.assertRaises(UsageError):
            map_values(X, Y, GRID, mode="image")


class TestFiberProbe(unittest.TestCase):

    def test_finite(self):
        probe = fiber_probe(X - S, Y - T, (1, 2))
        self.assertEqual(probe.kind, FiberKind.FINITE)
        self.assertEqual(probe.bound, 1)
        self.assertEqual(fiber_probe(X, X + 1, (0, 0)).to_dict(), {"kind": "finite_with_bound", "bound": "1"})

    def test_curve(self):
        probe = fiber_probe(X * Y, X, (3, 3))
        self.assertEqual(probe.kind, FiberKind.CURVE)
        self.assertEqual(probe.curve, X)

    def test_empty(self):
        self.assertEqual(fiber_probe(S + 1, X, (0, 0)).kind, FiberKind.EMPTY)

    def test_whole_plane(self):
        probe = fiber_probe(S * X, T * Y, (0, 0))
        self.assertEqual(probe.kind, FiberKind.CURVE)
        self.assertTrue(probe.curve.is_zero())


if __name__ == "__main__":
    unittest.main()
