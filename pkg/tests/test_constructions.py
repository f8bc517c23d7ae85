"""
Tests for the instance generators: predicted counts must match exact counts.
"""

import json
import time
import unittest

import numpy as np

from algebra import VARIABLES, S, T, X, Y, squarefree_part
from bus import CommandBus
from constructions import (FAMILIES, IMAGE, arithmetic_progression, cartesian_saturation, elekes_count,
                           elekes_degree_d, elekes_grid, generic_diagonal, integer_grid, preset,
                           random_polynomial, random_squarefree, valtr_count, valtr_grid)
from errors import UsageError, VariableScopeError
from geometry import brute_force_count, count_intersections
from nullstellensatz import CartesianWitness, cartesian_test
from workflow import ChunkWorkflow


class TestElekes(unittest.TestCase):

    def test_counts(self):
        self.assertEqual(elekes_count(3, 3), 45)
        self.assertEqual(elekes_count(4, 4), 156)
        self.assertEqual(elekes_count(1, 1), 0)

    def test_measured_matches_prediction(self):
        for lam, mu in ((2, 2), (3, 3), (2, 3)):
            with self.subTest(lam=lam, mu=mu):
                instance = elekes_grid(lam, mu)
                self.assertEqual(instance.measured(), instance.predicted_count)

    def test_ratio_to_grid_term_grows(self):
        ratios = []
        for m in range(2, 9):
            instance = elekes_grid(m, m)
            report = count_intersections(instance.F, instance.P, instance.Q)
            self.assertEqual(report.count, m ** 4 - (m * (m + 1) // 2) ** 2)
            if m <= 4:
                self.assertEqual(brute_force_count(instance.F, instance.P, instance.Q), report.count)
            ratios.append(float(report.envelope("grid_term").ratio))
        self.assertEqual(ratios, sorted(ratios))
        self.assertAlmostEqual(ratios[0], 7 / 16)
        self.assertTrue(all(0.5 <= r < 0.75 for r in ratios[1:]))

    def test_degree_d(self):
        instance = elekes_degree_d(2, 1, 3)
        self.assertEqual(instance.predicted_count, 1)
        self.assertEqual(instance.measured(), 1)
        self.assertEqual(instance.parameters["source"], str(X * S + Y ** 3 - T ** 3))
        self.assertEqual(elekes_degree_d(3, 2, 1).predicted_count, elekes_count(3, 2))

    def test_rejects_non_positive(self):
        with self.assertRaises(UsageError):
            elekes_grid(0, 2)


class TestValtr(unittest.TestCase):

    def test_small_counts(self):
        self.assertEqual(valtr_count(1), 2)
        self.assertEqual(valtr_count(2), 30)
        self.assertEqual(valtr_grid(2).measured(), 30)

    def test_closed_form(self):
        for lam in range(1, 5):
            with self.subTest(lam=lam):
                self.assertEqual(valtr_count(lam), 2 * lam ** 4 - lam ** 2 * (lam ** 2 - 1) // 6)


class TestSaturation(unittest.TestCase):

    def test_every_pair_is_incident(self):
        instance = cartesian_saturation(X ** 2, S, 4, seed=3)
        self.assertEqual(instance.predicted_count, 16)
        self.assertEqual(instance.measured(), 16)
        self.assertIn("witness", instance.to_dict())

    def test_cartesian_test_recovers_witness(self):
        instance = cartesian_saturation(X ** 2, S, 3, seed=3)
        outcome = cartesian_test(instance.F, instance.witness.G, instance.witness.K)
        self.assertIsInstance(outcome, CartesianWitness)
        self.assertTrue(outcome.certifies(instance.F))

    def test_seeded_instances_saturate(self):
        gammas = (X, X ** 2 - 3, X ** 3 - X, 2 * X ** 4 - X ** 2, 5 - X)
        kappas = (S ** 2, S ** 4 - 2 * S, 3 * S - 1, S ** 3 + S ** 2, S)
        for seed in range(25):
            gamma, kappa = gammas[seed % 5], kappas[seed // 5]
            n = 4 + (seed * 7) % 17
            instance = cartesian_saturation(gamma, kappa, n, seed=seed)
            with self.subTest(seed=seed, n=n):
                self.assertLessEqual(n, 20)
                self.assertEqual(instance.predicted_count, n * n)
                self.assertEqual(instance.measured(), n * n)
                outcome = cartesian_test(instance.F, instance.witness.G, instance.witness.K)
                self.assertIsInstance(outcome, CartesianWitness)
                self.assertTrue(outcome.certifies(instance.F))

    def test_given_cofactors(self):
        instance = cartesian_saturation(X, S + 1, 2, H=S, L=X)
        self.assertEqual(instance.F, (Y - X) * S + (T - S - 1) * X)

    def test_bad_arguments(self):
        with self.assertRaises(UsageError):
            cartesian_saturation(X ** 5, S, 3)
        with self.assertRaises(UsageError):
            cartesian_saturation(X, S, 0)
        with self.assertRaises(VariableScopeError):
            cartesian_saturation(Y, S, 3)


class TestOtherFamilies(unittest.TestCase):

    def test_diagonal(self):
        first, second = generic_diagonal(5, seed=2), generic_diagonal(5, seed=2)
        self.assertEqual(first.P, second.P)
        self.assertEqual(first.measured(), 5)

    def test_diagonal_sizes(self):
        for n in (10, 100, 1000):
            with self.subTest(n=n):
                instance = generic_diagonal(n, seed=n)
                started = time.perf_counter()
                self.assertEqual(instance.measured(), n)
                self.assertLess(time.perf_counter() - started, 5.0)

    def test_integer_grid(self):
        instance = integer_grid(3)
        self.assertEqual(instance.predicted_count, 24)
        self.assertEqual(instance.measured(), 24)

    def test_unit_distances_up_to_ten(self):
        for m in range(2, 11):
            with self.subTest(m=m):
                instance = integer_grid(m)
                self.assertEqual(instance.predicted_count, 4 * m * (m - 1))
                self.assertEqual(instance.measured(), 4 * m * (m - 1))

    def test_progression(self):
        instance = arithmetic_progression(5)
        self.assertEqual(instance.measure, IMAGE)
        self.assertEqual(instance.measured(), 9)

    def test_registry(self):
        generator, arguments = FAMILIES["elekes"]
        self.assertIs(generator, elekes_grid)
        self.assertEqual(arguments, ("lambda", "mu"))


class TestParallelAgreement(unittest.TestCase):

    def fixtures(self):
        return [
            elekes_grid(3, 3),
            elekes_degree_d(2, 2, 3),
            valtr_grid(2),
            cartesian_saturation(X ** 2, S + 1, 6, seed=8),
            generic_diagonal(30, seed=1),
            integer_grid(4),
            arithmetic_progression(6),
        ]

    def report_text(self, instance, workflow=None):
        report = count_intersections(instance.system, instance.P, instance.Q, emit_pairs=True,
                                     workflow=workflow, chunk_size=1)
        return json.dumps(report.to_dict(instance.P, instance.Q), default=str)

    def test_reports_match_sequential(self):
        for instance in self.fixtures():
            sequential = self.report_text(instance)
            for topology, workers in (("threads", 2), ("threads", 4), ("processes", 2)):
                with self.subTest(instance=instance.name, topology=topology, workers=workers):
                    workflow = ChunkWorkflow(topology, workers, bus=CommandBus())
                    self.assertEqual(self.report_text(instance, workflow), sequential)
                    self.assertEqual(instance.measured(workflow), instance.measured())


class TestRandomAndPresets(unittest.TestCase):

    def test_random_is_deterministic(self):
        first = random_polynomial(np.random.default_rng(1), VARIABLES, 3)
        second = random_polynomial(np.random.default_rng(1), VARIABLES, 3)
        self.assertEqual(first, second)
        self.assertEqual(first.degree, 3)

    def test_random_squarefree(self):
        f = random_squarefree(np.random.default_rng(4), ("x", "y"), 2)
        self.assertTrue(squarefree_part(f)[1])

    def test_presets(self):
        self.assertEqual(preset("dot-product"), X * S + Y * T)
        with self.assertRaises(UsageError):
            preset("hyperbola")


if __name__ == "__main__":
    unittest.main()
