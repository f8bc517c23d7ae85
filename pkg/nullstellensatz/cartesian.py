#!/usr/bin/env python3
"""
Cartesian decomposition tests.

cartesian_test decides whether F = G*H + K*L for fixed G(x, y), K(s, t):
divide F by G, expand the remainder R = sum R_ij(s, t) x^i y^j and check
that K divides every R_ij. The decision is exact because the remainder of a
single-divisor division is unique.
"""

import logging
from typing import Optional, Tuple, Union

from algebra import (ST, XY, Monomial, MonomialOrder, Polynomial, coefficient_decompose, default_order,
                     divide_single, exact_divide, gcd_many, squarefree_part)
from algebra.gcd import coefficients_in
from errors import BoundViolationError, ConstantDivisorError, NotSquarefreeError, ZeroPolynomialError
from geometry.points import PointSet
from .witness import CartesianWitness, FailureCertificate

logger = logging.getLogger(__name__)

CartesianOutcome = Union[CartesianWitness, FailureCertificate]


def _require_nonzero(F: Polynomial, operation: str):
    if F.is_zero():
        raise ZeroPolynomialError(operation)


def _prepare_divisor(name: str, P: Polynomial, allowed: Tuple[str, ...],
                     reduce: bool = True) -> Tuple[Polynomial, bool]:
    """Scope and constancy checks, then the squarefree substitution."""
    if P.is_constant():
        raise ConstantDivisorError(name)
    P.check_scope(name, allowed)
    reduced, was_squarefree = squarefree_part(P)
    if was_squarefree:
        return P, False
    if not reduce:
        raise NotSquarefreeError(name, P)
    logger.warning("%s = %s is not squarefree; using its squarefree part %s", name, P, reduced)
    return reduced, True


def cartesian_test(F: Polynomial, G: Polynomial, K: Polynomial,
                   order: Optional[MonomialOrder] = None) -> CartesianOutcome:
    """
    Test whether F is (G, K)-Cartesian.

    Args:
        F: nonzero polynomial in x, y, s, t
        G: nonconstant polynomial in x, y
        K: nonconstant polynomial in s, t
        order: monomial order for the division (configured default when omitted)

    Returns:
        A CartesianWitness whose identity has been re-verified, or a
        FailureCertificate naming the first (i, j) with K not dividing R_ij

    Raises:
        ZeroPolynomialError: if F = 0
        ConstantDivisorError: if G or K is constant
    """
    _require_nonzero(F, "cartesian_test")
    order = order or default_order()
    G, g_substituted = _prepare_divisor("G", G, XY)
    K, k_substituted = _prepare_divisor("K", K, ST)
    substituted = tuple(name for name, flag in (("G", g_substituted), ("K", k_substituted)) if flag)

    H, R = divide_single(F, G, order)
    L = Polynomial.zero(F.variables)
    for (i, j), coefficient in coefficient_decompose(R, XY):
        quotient, remainder = divide_single(coefficient, K, order)
        if not remainder.is_zero():
            logger.info("K = %s does not divide R_%d%d = %s", K, i, j, coefficient)
            return FailureCertificate((i, j), coefficient, remainder, G, K, substituted=substituted)
        L = L + quotient * Polynomial.monomial(Monomial(x=i, y=j))

    witness = CartesianWitness(G, K, H, L, substituted)
    if not witness.certifies(F):
        raise AssertionError(f"witness identity failed for F = {F}")
    if order.respects_degree():
        _check_degree_bounds(F, witness)
    return witness


def _check_degree_bounds(F: Polynomial, witness: CartesianWitness):
    d = F.degree
    if not witness.H.is_zero() and witness.H.degree > d - witness.G.degree:
        raise AssertionError(f"deg H = {witness.H.degree} exceeds {d} - {witness.G.degree}")
    if not witness.L.is_zero() and witness.L.degree > d - witness.K.degree:
        raise AssertionError(f"deg L = {witness.L.degree} exceeds {d} - {witness.K.degree}")


def alon_1d_test(f: Polynomial, g: Polynomial, k: Polynomial,
                 reduce_squarefree: bool = False) -> CartesianOutcome:
    """
    One-dimensional test: is f = g(x)*h(x, y) + k(y)*l(x, y)?

    Args:
        f: polynomial in x, y
        g: nonconstant squarefree polynomial in x
        k: nonconstant squarefree polynomial in y
        reduce_squarefree: replace non-squarefree g, k by their squarefree
            parts instead of raising

    Raises:
        NotSquarefreeError: if g or k has a repeated factor and reduce_squarefree is off
        ConstantDivisorError: if g or k is constant
    """
    f.check_scope("f", XY)
    g, g_substituted = _prepare_divisor("g", g, ("x",), reduce_squarefree)
    k, k_substituted = _prepare_divisor("k", k, ("y",), reduce_squarefree)
    substituted = tuple(name for name, flag in (("g", g_substituted), ("k", k_substituted)) if flag)

    order = MonomialOrder()
    h, r = divide_single(f, g, order)
    l = Polynomial.zero(f.variables | {"x", "y"})
    for power, coefficient in sorted(coefficients_in(r, "x").items()):
        quotient, remainder = divide_single(coefficient, k, order)
        if not remainder.is_zero():
            return FailureCertificate((power,), coefficient, remainder, g, k, substituted=substituted)
        l = l + quotient * Polynomial.monomial(Monomial(x=power))

    witness = CartesianWitness(g, k, h, l, substituted)
    if not witness.certifies(f):
        raise AssertionError(f"witness identity failed for f = {f}")
    return witness


def self_cartesian_test(F: Polynomial, G: Polynomial, a=0,
                        order: Optional[MonomialOrder] = None) -> CartesianOutcome:
    """Test whether F - a is (G(x, y), G(s, t))-Cartesian."""
    return cartesian_test(F - a, G, G.rename({"x": "s", "y": "t"}), order)


def trivial_cartesian_probe(F: Polynomial) -> Optional[CartesianWitness]:
    """
    Look for a factor of F that lives entirely in (s, t) or in (x, y).

    The gcd of the (s, t)-coefficients of F over the base (x, y) is a common
    factor K(s, t) of F, giving F = K*L with H = 0 and G = x as a placeholder.
    Symmetrically for a common factor G(x, y) with L = 0 and K = s.

    Raises:
        ZeroPolynomialError: if F = 0
    """
    _require_nonzero(F, "trivial_cartesian_probe")
    k = gcd_many(c for _, c in coefficient_decompose(F, XY))
    if not k.is_constant():
        L = exact_divide(F, k)
        witness = CartesianWitness(Polynomial.var("x"), k, Polynomial.zero(F.variables), L)
        logger.info("F has the (s, t) factor %s", k)
        return witness
    g = gcd_many(c for _, c in coefficient_decompose(F, ST))
    if not g.is_constant():
        H = exact_divide(F, g)
        witness = CartesianWitness(g, Polynomial.var("s"), H, Polynomial.zero(F.variables))
        logger.info("F has the (x, y) factor %s", g)
        return witness
    return None


def degenerate_points(F: Polynomial, candidates: PointSet) -> PointSet:
    """
    Candidate points q with F(., ., q) identically zero.

    When F has no trivial Cartesian factor there are at most d^2 such points;
    exceeding that raises BoundViolationError.

    Raises:
        ZeroPolynomialError: if F = 0
        BoundViolationError: if the d^2 bound fails
    """
    _require_nonzero(F, "degenerate_points")
    decomposition = coefficient_decompose(F, XY)
    coefficients = [c for _, c in decomposition]
    found = []
    for q in candidates:
        assignment = {"s": q[0], "t": q[1]}
        if all(not c.substitute(assignment) for c in coefficients):
            found.append(q)

    bound = F.degree ** 2
    if len(found) > bound and trivial_cartesian_probe(F) is None:
        raise BoundViolationError("degenerate specialisations of a polynomial without trivial factor",
                                  len(found), bound)
    return PointSet(found, f"degenerate({candidates.label})" if candidates.label else "degenerate")

