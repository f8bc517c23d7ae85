#!/usr/bin/env python3
"""
Multivariate gcd over Q(i) by primitive polynomial remainder sequences,
and squarefree parts built on it.

The recursion picks a main variable v, splits each input into its content
(gcd of the coefficients in v, a polynomial in the remaining variables) and
its primitive part, runs a primitive PRS on the primitive parts and
multiplies back the gcd of the contents.
"""

import logging
from functools import reduce
from typing import Dict, Iterable, Tuple

from errors import BothZeroError, ConstantInputError, ZeroPolynomialError
from .division import exact_divide
from .monomials import GLOBAL_ORDER, VARIABLES, Monomial
from .polynomial import Polynomial

logger = logging.getLogger(__name__)


def coefficients_in(f: Polynomial, name: str) -> Dict[int, Polynomial]:
    """Write f = sum_k c_k * v^k with c_k free of v; returns {k: c_k}."""
    index = VARIABLES.index(name)
    buckets: Dict[int, dict] = {}
    for monomial, coefficient in f.items():
        lowered = list(monomial)
        power = lowered[index]
        lowered[index] = 0
        buckets.setdefault(power, {})[Monomial(*lowered)] = coefficient
    rest = f.variables - {name}
    return {k: Polynomial(terms, rest) for k, terms in buckets.items()}


def _from_coefficients(coefficients: Dict[int, Polynomial], name: str, universe) -> Polynomial:
    total = Polynomial.zero(universe)
    for power, c in coefficients.items():
        total = total + c * Polynomial.monomial(Monomial.variable(name, power))
    return total.with_variables(universe | total.variables)


def _degree_in(f: Polynomial, name: str) -> int:
    return f.degree_in(name) if not f.is_zero() else -1


def _main_variable(*polys: Polynomial):
    used = frozenset().union(*(p.used_variables() for p in polys))
    for name in VARIABLES:
        if name in used:
            return name
    return None


def _content(f: Polynomial, name: str) -> Polynomial:
    return reduce(_gcd, coefficients_in(f, name).values())


def _primitive(f: Polynomial, name: str) -> Tuple[Polynomial, Polynomial]:
    content = _content(f, name)
    part = exact_divide(f, content)
    assert part is not None, "content must divide its polynomial"
    return content, part.monic()


def _pseudo_remainder(a: Polynomial, b: Polynomial, name: str) -> Polynomial:
    """prem(a, b) in v up to a nonzero factor free of v."""
    n = b.degree_in(name)
    b_coefficients = coefficients_in(b, name)
    lead_b = b_coefficients[n]
    r = a
    while not r.is_zero() and r.degree_in(name) >= n:
        m = r.degree_in(name)
        lead_r = coefficients_in(r, name)[m]
        shift = Polynomial.monomial(Monomial.variable(name, m - n))
        r = lead_b * r - lead_r * shift * b
    return r


def _gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    name = _main_variable(a, b)
    if name is None:
        return Polynomial.constant(1)
    if a.is_constant() or b.is_constant():
        return Polynomial.constant(1)

    content_a, a = _primitive(a, name)
    content_b, b = _primitive(b, name)
    content = _gcd(content_a, content_b)

    if _degree_in(a, name) < _degree_in(b, name):
        a, b = b, a
    while True:
        if _degree_in(b, name) <= 0:
            # b is primitive and free of v, hence a unit
            primitive = Polynomial.constant(1)
            break
        r = _pseudo_remainder(a, b, name)
        if r.is_zero():
            primitive = b
            break
        if _degree_in(r, name) <= 0:
            primitive = Polynomial.constant(1)
            break
        a, b = b, _primitive(r, name)[1]

    return (content * primitive).monic()


def gcd_multivariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    Exact gcd over Q(i), monic under the global order.

    Raises:
        BothZeroError: if a and b are both zero
    """
    if a.is_zero() and b.is_zero():
        raise BothZeroError()
    universe = a.variables | b.variables
    result = _gcd(a, b)
    return result.with_variables(universe | result.variables)


def gcd_many(polys: Iterable[Polynomial]) -> Polynomial:
    """gcd of a family; zero members are skipped. The empty family has gcd 0."""
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        return Polynomial.zero()
    result = nonzero[0].monic()
    for p in nonzero[1:]:
        if result.is_constant():
            break
        result = _gcd(result, p)
    return result


def squarefree_part(f: Polynomial) -> Tuple[Polynomial, bool]:
    """
    Squarefree part f / gcd(f, df/dx, df/dy, ...), made monic.

    Returns:
        (sf, was_squarefree)

    Raises:
        ZeroPolynomialError: for f = 0
        ConstantInputError: for a nonzero constant f
    """
    if f.is_zero():
        raise ZeroPolynomialError("squarefree_part")
    if f.is_constant():
        raise ConstantInputError("squarefree_part")
    repeated = f
    for name in sorted(f.used_variables(), key=VARIABLES.index):
        repeated = _gcd(repeated, f.derivative(name))
        if repeated.is_constant():
            break
    if repeated.is_constant():
        return f.monic(GLOBAL_ORDER), True
    part = exact_divide(f, repeated)
    assert part is not None
    logger.debug("squarefree part of %s is %s", f, part.monic())
    return part.monic(GLOBAL_ORDER), False


def is_squarefree(f: Polynomial) -> bool:
    return squarefree_part(f)[1]
