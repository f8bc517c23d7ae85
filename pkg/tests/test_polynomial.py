"""
Tests for monomials, monomial orders and polynomial arithmetic.
"""

import unittest

from algebra import (GLOBAL_ORDER, I, Monomial, MonomialOrder, Polynomial, S, T, X, Y, evaluate,
                     point_assignment, poly_arith)
from errors import MissingVariableError, VariableScopeError, ZeroDivisorError, ZeroPolynomialError


class TestMonomialOrder(unittest.TestCase):
    """lex, grlex and grevlex under the default precedence x > y > s > t."""

    def test_lex_ignores_degree(self):
        order = MonomialOrder.parse("lex")
        self.assertEqual(order.leading([Monomial(x=1), Monomial(y=2)]), Monomial(x=1))

    def test_grlex_prefers_degree(self):
        order = MonomialOrder.parse("grlex")
        self.assertEqual(order.leading([Monomial(x=1), Monomial(y=2)]), Monomial(y=2))

    def test_grevlex_breaks_ties_on_last_variable(self):
        xt, ys = Monomial(x=1, t=1), Monomial(y=1, s=1)
        self.assertEqual(MonomialOrder.parse("grevlex").leading([xt, ys]), ys)
        self.assertEqual(MonomialOrder.parse("grlex").leading([xt, ys]), xt)

    def test_precedence(self):
        order = MonomialOrder.parse("lex", ("s", "t", "x", "y"))
        self.assertEqual(order.leading([Monomial(x=3), Monomial(s=1)]), Monomial(s=1))

    def test_bad_order(self):
        with self.assertRaises(ValueError):
            MonomialOrder.parse("revlex")
        with self.assertRaises(ValueError):
            MonomialOrder.parse("lex", ("x", "y", "s"))


class TestArithmetic(unittest.TestCase):

    def test_additive_inverse(self):
        self.assertTrue(poly_arith("add", X * S, -(X * S)).is_zero())

    def test_example_polynomial(self):
        F = poly_arith("add", poly_arith("mul", X, S), poly_arith("mul", T, Y))
        self.assertEqual(F, X * S + Y * T)

    def test_difference_of_squares(self):
        self.assertEqual(poly_arith("mul", X - S, X + S), X ** 2 - S ** 2)

    def test_scale(self):
        self.assertEqual(poly_arith("scale", X + Y, I), I * X + I * Y)

    def test_unknown_operation(self):
        with self.assertRaises(ValueError):
            poly_arith("div", X, Y)

    def test_scalar_division(self):
        self.assertEqual((2 * X + 4) / 2, X + 2)
        with self.assertRaises(ZeroDivisorError):
            X / 0

    def test_derivative(self):
        self.assertEqual((X ** 2 * Y).derivative("x"), 2 * X * Y)
        self.assertTrue(S.derivative("x").is_zero())

    def test_monic_and_proportional(self):
        F = 3 * X * S - 6 * Y
        self.assertEqual(F.monic(), X * S - 2 * Y)
        self.assertTrue(F.is_proportional(X * S - 2 * Y))
        self.assertFalse(F.is_proportional(X * S + 2 * Y))


class TestEvaluation(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(evaluate(X * S + Y * T, {"x": 0, "y": 1, "s": 1, "t": 0}), 0)
        self.assertEqual(evaluate(X * S - Y + T, point_assignment((1, 3), (2, 1))), 0)
        F = (X - S) ** 2 + (Y - T) ** 2
        self.assertEqual(evaluate(F, point_assignment((0, 0), (1, 0))), 1)

    def test_gaussian_point(self):
        self.assertEqual(evaluate(X ** 2 + Y ** 2, {"x": I, "y": 1}), 0)

    def test_missing_variable(self):
        with self.assertRaises(MissingVariableError):
            (X * S).evaluate({"x": 1})

    def test_substitute_keeps_free_variables(self):
        curve = (X * S - Y + T).substitute({"s": 2, "t": 1})
        self.assertEqual(curve, 2 * X - Y + 1)
        self.assertEqual(curve.variables, frozenset({"x", "y"}))

    def test_rename(self):
        self.assertEqual((X + Y ** 2).rename({"x": "s", "y": "t"}), S + T ** 2)


class TestStructure(unittest.TestCase):

    def test_canonical_text(self):
        self.assertEqual(str(X * S - Y + T), "x*s - y + t")
        self.assertEqual(str(Polynomial.zero()), "0")
        self.assertEqual(str((1 + I) * X), "(1+i)*x")

    def test_equality_ignores_universe(self):
        self.assertEqual(Polynomial.zero(("x", "y")), Polynomial.zero(("s", "t")))
        self.assertEqual(Polynomial.constant(5), 5)

    def test_degree(self):
        self.assertEqual((X ** 2 * S + T).degree, 3)
        self.assertEqual((X ** 2 * S + T).degree_in("x"), 2)
        with self.assertRaises(ZeroPolynomialError):
            Polynomial.zero().degree

    def test_leading_term(self):
        self.assertEqual((X * S + Y * T).leading_term(GLOBAL_ORDER), (Monomial(x=1, s=1), 1))

    def test_scope(self):
        with self.assertRaises(VariableScopeError):
            Polynomial({Monomial(x=1): 1}, ["s"])
        with self.assertRaises(VariableScopeError):
            (X + S).check_scope("G", ("x", "y"))
        self.assertEqual((X + Y).check_scope("G", ("x", "y")), X + Y)


if __name__ == "__main__":
    unittest.main()
