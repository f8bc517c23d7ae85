"""
Tests for the rich/poor partition of P and Q.
"""

import unittest

from algebra import Polynomial, S, T, X, Y
from constructions import elekes_grid
from errors import UsageError, ZeroPolynomialError
from geometry import PointSet, partition_rich


class TestPartitionRich(unittest.TestCase):

    def test_all_curves_poor(self):
        instance = elekes_grid(2, 2)
        partition = partition_rich(instance.F, instance.P, instance.Q, 5)
        self.assertEqual(partition.threshold, 20)
        self.assertEqual(partition.colour_bound, 11)
        self.assertEqual(partition.parts_p, [list(range(len(instance.P)))])
        self.assertEqual(partition.parts_q, [])
        self.assertEqual(partition.poor, list(range(len(instance.Q))))
        self.assertEqual(partition.verified_pairs, 0)

    def test_rich_complete_graph_is_split(self):
        P = PointSet((0, k) for k in range(1, 5))
        Q = PointSet((k, 0) for k in range(1, 5))
        partition = partition_rich(X * S + Y * T, P, Q, 1)
        self.assertEqual(partition.threshold, 4)
        self.assertEqual(partition.poor, [])
        self.assertEqual(sorted(partition.parts_p), [[0], [1], [2], [3]])
        self.assertEqual(sorted(partition.parts_q), [[0], [1], [2], [3]])
        self.assertEqual(partition.rich_edges, {"P": 6, "Q": 6})
        self.assertEqual(partition.verified_pairs, 16)
        self.assertEqual(partition.to_dict()["verified_pairs"], "16")

    def test_bad_arguments(self):
        P = PointSet([(0, 1)])
        with self.assertRaises(UsageError):
            partition_rich(X * S + Y * T, P, P, 0)
        with self.assertRaises(ZeroPolynomialError):
            partition_rich(Polynomial.zero(), P, P, 1)


if __name__ == "__main__":
    unittest.main()
