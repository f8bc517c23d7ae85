"""
Tests for exact row reduction and nullspaces over Q(i).
"""

import unittest
from fractions import Fraction

from sympy.polys.domains import QQ_I

from algebra import GaussRational, I, ONE, ZERO, from_domain_matrix, nullspace, reduced_row_echelon, to_domain_matrix


def times(matrix, vector):
    return [sum((a * b for a, b in zip(row, vector)), ZERO) for row in matrix]


class TestReducedRowEchelon(unittest.TestCase):

    def test_dependent_gaussian_rows(self):
        rows, pivots = reduced_row_echelon([[ONE, I], [I, GaussRational(-1)]])
        self.assertEqual(pivots, [0])
        self.assertEqual(rows, [[ONE, I]])

    def test_rational_pivots(self):
        rows, pivots = reduced_row_echelon([[2, 4, 6], [1, 3, 5]])
        self.assertEqual(pivots, [0, 1])
        self.assertEqual(rows, [[ONE, ZERO, GaussRational(-1)], [ZERO, ONE, GaussRational(2)]])

    def test_empty(self):
        self.assertEqual(reduced_row_echelon([]), ([], []))


class TestNullspace(unittest.TestCase):

    def test_kernel_vectors_are_solutions(self):
        matrix = [[ONE, I, GaussRational(Fraction(1, 2))], [GaussRational(2), 2 * I, ONE]]
        basis = nullspace(matrix)
        self.assertEqual(len(basis), 2)
        for vector in basis:
            self.assertEqual(times(matrix, vector), [ZERO, ZERO])

    def test_full_rank_has_no_kernel(self):
        self.assertEqual(nullspace([[ONE, ZERO], [ZERO, I]]), [])

    def test_no_rows_gives_unit_basis(self):
        self.assertEqual(nullspace([], width=2), [[ONE, ZERO], [ZERO, ONE]])
        with self.assertRaises(ValueError):
            nullspace([])

    def test_domain_conversion(self):
        value = GaussRational(Fraction(-3, 4), Fraction(5, 2))
        matrix = to_domain_matrix([[value, I]], 2)
        self.assertEqual(matrix.domain, QQ_I)
        self.assertEqual(from_domain_matrix(matrix), [[value, I]])


if __name__ == "__main__":
    unittest.main()
