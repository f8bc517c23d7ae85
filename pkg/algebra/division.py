#!/usr/bin/env python3
"""
Single-divisor multivariate division.

Given f and g != 0 and a monomial order, produces q and r with f = g*q + r
where no monomial of r is divisible by the leading monomial of g. For one
divisor the pair (q, r) is unique, so r == 0 is an exact divisibility test.
"""

import logging
from typing import Dict, Optional, Tuple

from errors import ZeroDivisorError
from .gaussian import GaussRational, ZERO
from .monomials import GLOBAL_ORDER, Monomial, MonomialOrder, default_order
from .polynomial import Polynomial

logger = logging.getLogger(__name__)


def divide_single(f: Polynomial, g: Polynomial,
                  order: Optional[MonomialOrder] = None) -> Tuple[Polynomial, Polynomial]:
    """
    Divide f by g under `order`.

    Args:
        f: dividend
        g: nonzero divisor
        order: monomial order (configured default when omitted)

    Returns:
        (quotient, remainder)

    Raises:
        ZeroDivisorError: if g is the zero polynomial
    """
    if g.is_zero():
        raise ZeroDivisorError("divide_single")
    order = order or default_order()
    lead_monomial, lead_coefficient = g.leading_term(order)
    inverse_lead = lead_coefficient.inverse()
    divisor = [(m, c) for m, c in g.items() if m != lead_monomial]

    work: Dict[Monomial, GaussRational] = f.terms
    quotient: Dict[Monomial, GaussRational] = {}
    remainder: Dict[Monomial, GaussRational] = {}
    key = order.key

    while work:
        monomial = max(work, key=key)
        coefficient = work.pop(monomial)
        if lead_monomial.divides(monomial):
            factor_monomial = monomial.quotient(lead_monomial)
            factor = coefficient * inverse_lead
            quotient[factor_monomial] = quotient.get(factor_monomial, ZERO) + factor
            # work -= factor * m * (g - LT(g)); the leading terms cancel by construction
            for m, c in divisor:
                target = m * factor_monomial
                value = work.get(target, ZERO) - factor * c
                if value:
                    work[target] = value
                else:
                    work.pop(target, None)
        else:
            remainder[monomial] = coefficient

    universe = f.variables | g.variables
    return Polynomial(quotient, universe), Polynomial(remainder, universe)


def exact_divide(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Return f / g when g divides f exactly, else None."""
    quotient, remainder = divide_single(f, g, GLOBAL_ORDER)
    if remainder.is_zero():
        return quotient
    return None


def divides(g: Polynomial, f: Polynomial) -> bool:
    return exact_divide(f, g) is not None
