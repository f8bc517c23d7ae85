"""
Tests for incidence graphs and the K_{s,t} search.
"""

import unittest

from algebra import S, T, X, Y
from constructions import elekes_grid
from errors import ComplexityGuardError, UsageError
from geometry import IncidenceGraph, KstWitness, PointSet, dual_incidence_graph, incidence_graph, kst_free_check

AXIS_P = PointSet((0, k) for k in range(1, 4))
AXIS_Q = PointSet((k, 0) for k in range(1, 4))


class TestIncidenceGraph(unittest.TestCase):

    def test_complete_graph_on_the_axes(self):
        graph = incidence_graph(X * S + Y * T, AXIS_P, AXIS_Q)
        self.assertEqual(graph.edge_count(), 9)
        self.assertTrue(all(graph.has_edge(p, q) for p in range(3) for q in range(3)))

    def test_duplicate_curves(self):
        graph = incidence_graph(S * X, PointSet([(0, 1), (1, 1)]), PointSet([(1, 0), (2, 0)]))
        self.assertEqual(graph.duplicate_classes, [[0, 1]])

    def test_degenerate_curves(self):
        F = (S ** 2 + T ** 2) * X
        graph = incidence_graph(F, PointSet([(0, 1), (1, 1)]), PointSet([(0, 0), (1, 0)]))
        self.assertEqual(graph.degenerate, [0])
        self.assertEqual(graph.degree_q(0), 2)

    def test_dual_graph(self):
        dual = dual_incidence_graph(X * S + Y * T, AXIS_P, PointSet([(1, 0), (1, 1)]))
        self.assertEqual(dual.labels, ("Q", "P"))
        self.assertEqual((dual.n_p, dual.n_q), (2, 3))
        self.assertEqual(dual.edge_count(), 3)
        self.assertEqual(dual.transpose().labels, ("P", "Q"))

    def test_duplicate_vertex(self):
        Q = PointSet([(1, 0), (0, 1), (1, 1)])
        graph = incidence_graph(X * S + Y * T, AXIS_P, Q)
        self.assertEqual(graph.duplicate_classes, [])
        graph = graph.duplicate_vertex("Q", 0)
        self.assertEqual(graph.n_q, 4)
        self.assertEqual(graph.duplicate_classes, [[0, 3]])

    def test_duplicate_joins_existing_class(self):
        graph = incidence_graph(X * S + Y * T, AXIS_P, AXIS_Q).duplicate_vertex("Q", 0)
        self.assertEqual(graph.duplicate_classes, [[0, 1, 2, 3]])
        self.assertTrue(graph.has_edge(2, 3))
        with self.assertRaises(UsageError):
            graph.duplicate_vertex("R", 0)

    def test_summary(self):
        summary = incidence_graph(X * S + Y * T, AXIS_P, AXIS_Q).summary()
        self.assertEqual(summary["edges"], "9")
        self.assertEqual(summary["components"], "1")
        self.assertEqual(summary["isolated"], "0")
        self.assertEqual(summary["max_degree"], {"P": "3", "Q": "3"})


class TestKstSearch(unittest.TestCase):

    def test_lines_have_no_k22(self):
        instance = elekes_grid(2, 2)
        graph = incidence_graph(instance.F, instance.P, instance.Q)
        self.assertEqual(graph.duplicate_classes, [])
        self.assertIsNone(kst_free_check(graph, 2, 2))

    def test_duplicated_point_creates_k22(self):
        instance = elekes_grid(2, 2)
        graph = incidence_graph(instance.F, instance.P, instance.Q)
        p = max(range(graph.n_p), key=graph.degree_p)
        self.assertGreaterEqual(graph.degree_p(p), 2)
        witness = kst_free_check(graph.duplicate_vertex("P", p), 2, 2)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.p_indices, (p, graph.n_p))

    def test_complete_bipartite(self):
        graph = incidence_graph(X * S + Y * T, AXIS_P, AXIS_Q)
        self.assertEqual(kst_free_check(graph, 3, 3), KstWitness((0, 1, 2), (0, 1, 2)))

    def test_single_edge(self):
        graph = IncidenceGraph.from_incidences([[0]], 1)
        self.assertEqual(kst_free_check(graph, 1, 1), KstWitness((0,), (0,)))
        self.assertIsNone(kst_free_check(graph, 1, 2))

    def test_bad_parameters(self):
        graph = IncidenceGraph.from_incidences([[0]], 1)
        with self.assertRaises(UsageError):
            kst_free_check(graph, 0, 1)

    def test_budget(self):
        graph = incidence_graph(X * S + Y * T, AXIS_P, AXIS_Q)
        with self.assertRaises(ComplexityGuardError):
            kst_free_check(graph, 2, 2, budget=1)


if __name__ == "__main__":
    unittest.main()
