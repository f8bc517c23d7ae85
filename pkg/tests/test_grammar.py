"""
Tests for the polynomial expression grammar.
"""

import unittest

from algebra import I, S, T, X, Y
from cli import PolynomialSource, parse_polynomial
from constructions import PRESETS
from errors import PolynomialSyntaxError, UnknownVariableError, VariableScopeError


class TestParse(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(parse_polynomial("x*s - y + t"), X * S - Y + T)
        self.assertEqual(parse_polynomial("(x-s)^2 + (y-t)^2 - 1"), (X - S) ** 2 + (Y - T) ** 2 - 1)
        self.assertEqual(parse_polynomial("(1+i)*x"), (1 + I) * X)

    def test_precedence(self):
        self.assertEqual(parse_polynomial("-x^2"), -(X ** 2))
        self.assertEqual(parse_polynomial("1/2*x"), X / 2)
        self.assertEqual(parse_polynomial("2*x + 3*y*t"), 2 * X + 3 * Y * T)
        self.assertEqual(parse_polynomial("(x + 1)/4"), (X + 1) / 4)

    def test_canonical_text_parses_back(self):
        extra = (I * X - Y / 3, (2 - I) * S * T + I)
        for F in list(PRESETS.values()) + list(extra):
            with self.subTest(F=str(F)):
                self.assertEqual(parse_polynomial(str(F)), F)

    def test_declared_variables(self):
        G = parse_polynomial("x", ("x", "y"))
        self.assertEqual(G.variables, frozenset({"x", "y"}))
        with self.assertRaises(VariableScopeError):
            parse_polynomial("x + s", ("x", "y"))

    def test_source(self):
        source = PolynomialSource.parse("t + x*s")
        self.assertEqual(source.canonical, "x*s + t")
        self.assertEqual(source.variables, ("x", "s", "t"))


class TestSyntaxErrors(unittest.TestCase):

    def test_trailing_operator(self):
        with self.assertRaises(PolynomialSyntaxError) as caught:
            parse_polynomial("x*")
        self.assertEqual((caught.exception.line, caught.exception.column), (1, 3))

    def test_unknown_variable(self):
        with self.assertRaises(UnknownVariableError) as caught:
            parse_polynomial("x*z")
        self.assertEqual(caught.exception.name, "z")
        self.assertEqual(caught.exception.column, 3)

    def test_bad_character(self):
        with self.assertRaises(PolynomialSyntaxError) as caught:
            parse_polynomial("x +\n  # y")
        self.assertEqual((caught.exception.line, caught.exception.column), (2, 3))

    def test_empty(self):
        with self.assertRaises(PolynomialSyntaxError):
            parse_polynomial("   ")

    def test_division(self):
        with self.assertRaises(PolynomialSyntaxError) as caught:
            parse_polynomial("x/y")
        self.assertIn("non-constant", str(caught.exception))
        with self.assertRaises(PolynomialSyntaxError):
            parse_polynomial("x/0")


if __name__ == "__main__":
    unittest.main()
