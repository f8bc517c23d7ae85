"""
Tests for single-divisor division, gcd, squarefree parts and coefficient
decomposition. sympy serves as an independent oracle on random inputs.
"""

import unittest

import numpy as np
import sympy

from algebra import (GLOBAL_ORDER, VARIABLES, I, MonomialOrder, Polynomial, S, T, X, Y, coefficient_decompose,
                     divide_single, exact_divide, gcd_many, gcd_multivariate, squarefree_part)
from constructions import random_polynomial
from errors import BothZeroError, ConstantInputError, ZeroDivisorError, ZeroPolynomialError

SYMBOLS = sympy.symbols("x y s t")


def to_sympy(f: Polynomial):
    total = sympy.Integer(0)
    for monomial, c in f.items():
        coefficient = sympy.Rational(c.re.numerator, c.re.denominator) \
            + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator)
        term = coefficient
        for symbol, e in zip(SYMBOLS, monomial):
            term *= symbol ** e
        total += term
    return sympy.expand(total)


class TestDivision(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(divide_single(X * S + Y * T, X, GLOBAL_ORDER), (S, Y * T))
        self.assertEqual(divide_single(X * S - Y + T, X, GLOBAL_ORDER), (S, -Y + T))

    def test_self_division(self):
        g = 3 * X ** 2 - I * Y * T + 1
        self.assertEqual(divide_single(g, g), (Polynomial.constant(1), Polynomial.zero()))

    def test_zero_divisor(self):
        with self.assertRaises(ZeroDivisorError):
            divide_single(X, Polynomial.zero())

    def test_identity_and_reduced_remainder(self):
        rng = np.random.default_rng(7)
        for order in ("lex", "grlex", "grevlex"):
            order = MonomialOrder.parse(order)
            for _ in range(5):
                f = random_polynomial(rng, VARIABLES, 3)
                g = random_polynomial(rng, VARIABLES, 2)
                with self.subTest(order=str(order), f=str(f), g=str(g)):
                    q, r = divide_single(f, g, order)
                    self.assertEqual(q * g + r, f)
                    lead = g.leading_monomial(order)
                    self.assertFalse(any(lead.divides(m) for m in r.monomials()))

    def test_remainder_matches_sympy(self):
        rng = np.random.default_rng(11)
        for _ in range(5):
            f = random_polynomial(rng, VARIABLES, 3)
            g = random_polynomial(rng, VARIABLES, 2)
            with self.subTest(f=str(f), g=str(g)):
                _, r = divide_single(f, g, GLOBAL_ORDER)
                _, expected = sympy.reduced(to_sympy(f), [to_sympy(g)], *SYMBOLS, order="grevlex", domain="QQ")
                self.assertEqual(sympy.expand(to_sympy(r) - expected), 0)

    def test_exact_divide(self):
        self.assertEqual(exact_divide(X ** 2 - S ** 2, X - S), X + S)
        self.assertIsNone(exact_divide(X ** 2 + S, X - S))


class TestGcd(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(gcd_multivariate(X ** 2 - Y ** 2, X - Y), X - Y)
        self.assertEqual(gcd_multivariate(X * S + Y * T, X * S - Y + T), 1)

    def test_idempotent(self):
        f = 2 * X * S + 4 * Y * T
        self.assertEqual(gcd_multivariate(f, f), f.monic())

    def test_with_zero(self):
        self.assertEqual(gcd_multivariate(Polynomial.zero(), 3 * X + 3), X + 1)
        with self.assertRaises(BothZeroError):
            gcd_multivariate(Polynomial.zero(), Polynomial.zero())

    def test_gaussian_factor(self):
        a = (X + I * Y) * (X - S)
        b = (X + I * Y) * (Y + T)
        self.assertEqual(gcd_multivariate(a, b), X + I * Y)

    def test_common_factor_is_pulled_out(self):
        rng = np.random.default_rng(17)
        for case in range(20):
            a = random_polynomial(rng, VARIABLES, int(rng.integers(1, 3)))
            b = random_polynomial(rng, VARIABLES, int(rng.integers(1, 3)))
            c = random_polynomial(rng, VARIABLES, 1)
            with self.subTest(case=case, a=str(a), b=str(b), c=str(c)):
                expected = c * gcd_multivariate(a, b)
                self.assertTrue(gcd_multivariate(a * c, b * c).is_proportional(expected))

    def test_matches_sympy(self):
        rng = np.random.default_rng(3)
        for _ in range(4):
            common = random_polynomial(rng, VARIABLES, 1)
            a = common * random_polynomial(rng, VARIABLES, 2)
            b = common * random_polynomial(rng, VARIABLES, 1)
            with self.subTest(a=str(a), b=str(b)):
                g = gcd_multivariate(a, b)
                expected = sympy.gcd(to_sympy(a), to_sympy(b))
                ratio = sympy.cancel(to_sympy(g) / expected)
                self.assertEqual(ratio.free_symbols, set())
                self.assertNotEqual(ratio, 0)


class TestSquarefree(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(squarefree_part((X - Y) ** 2), (X - Y, False))
        self.assertEqual(squarefree_part(X ** 2 + Y ** 2), (X ** 2 + Y ** 2, True))
        self.assertEqual(squarefree_part(X), (X, True))

    def test_mixed_multiplicities(self):
        sf, was = squarefree_part((X - S) ** 3 * (Y + 1))
        self.assertFalse(was)
        self.assertEqual(sf, ((X - S) * (Y + 1)).monic())

    def test_same_zero_set_and_no_repeated_factor(self):
        rng = np.random.default_rng(23)
        for case in range(15):
            a = random_polynomial(rng, VARIABLES, 1, bound=2)
            b = random_polynomial(rng, VARIABLES, int(rng.integers(1, 3)), bound=2)
            f = a ** 2 * b if case % 3 else b
            sf, _ = squarefree_part(f)
            with self.subTest(case=case, f=str(f)):
                self.assertIsNotNone(exact_divide(f, sf))
                partials = [sf.derivative(name) for name in sorted(sf.used_variables())]
                self.assertTrue(gcd_many([sf] + partials).is_constant())
                for _ in range(100):
                    point = dict(zip(VARIABLES, (int(v) for v in rng.integers(-2, 3, size=4))))
                    self.assertEqual(not f.evaluate(point), not sf.evaluate(point))

    def test_rejects_zero_and_constants(self):
        with self.assertRaises(ZeroPolynomialError):
            squarefree_part(Polynomial.zero())
        with self.assertRaises(ConstantInputError):
            squarefree_part(Polynomial.constant(4))


class TestDecompose(unittest.TestCase):

    def test_examples(self):
        d = coefficient_decompose(X * S + Y * T, "xy")
        self.assertEqual(d.coefficients, {(1, 0): S, (0, 1): T})
        d = coefficient_decompose(-Y + T, "xy")
        self.assertEqual(d[(0, 1)], -1)
        self.assertEqual(d[(0, 0)], T)
        d = coefficient_decompose(Polynomial.constant(5))
        self.assertEqual(d.coefficients, {(0, 0): 5})

    def test_reassemble(self):
        F = X ** 2 * S - 3 * X * Y * T + Y + S * T - 7
        for base in ("xy", "st"):
            with self.subTest(base=base):
                self.assertEqual(coefficient_decompose(F, base).reassemble(), F)

    def test_random_polynomials_reassemble(self):
        rng = np.random.default_rng(29)
        for case in range(50):
            F = random_polynomial(rng, VARIABLES, int(rng.integers(0, 5)))
            for base, other in (("xy", {"s", "t"}), ("st", {"x", "y"})):
                with self.subTest(case=case, base=base):
                    decomposition = coefficient_decompose(F, base)
                    self.assertEqual(decomposition.reassemble(), F)
                    for _, coefficient in decomposition:
                        self.assertLessEqual(set(coefficient.used_variables()), other)

    def test_missing_index_is_zero(self):
        self.assertTrue(coefficient_decompose(X * S)[(3, 3)].is_zero())

    def test_bad_base(self):
        with self.assertRaises(ValueError):
            coefficient_decompose(X, "xs")


if __name__ == "__main__":
    unittest.main()
