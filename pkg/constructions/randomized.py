#!/usr/bin/env python3
"""
Seeded random polynomials for constructions and fuzz suites.
"""

from itertools import product
from typing import List, Sequence

import numpy as np

from algebra import Monomial, Polynomial, is_squarefree


def monomials_up_to(variables: Sequence[str], degree: int) -> List[Monomial]:
    """All monomials in `variables` of total degree <= degree, in a fixed order."""
    result = []
    for exponents in product(range(degree + 1), repeat=len(variables)):
        if sum(exponents) <= degree:
            result.append(Monomial.of(dict(zip(variables, exponents))))
    return result


def random_polynomial(rng: np.random.Generator, variables: Sequence[str], degree: int,
                      density: float = 0.5, bound: int = 5) -> Polynomial:
    """
    Nonzero polynomial of degree <= `degree` with integer coefficients in [-bound, bound].

    Each monomial is kept with probability `density`; the result always has a
    term of top degree.
    """
    pool = monomials_up_to(variables, degree)
    terms = {}
    for monomial in pool:
        if rng.random() < density:
            value = int(rng.integers(1, bound + 1)) * (1 if rng.random() < 0.5 else -1)
            terms[monomial] = value
    if not any(m.degree == degree for m in terms):
        top = [m for m in pool if m.degree == degree]
        terms[top[int(rng.integers(len(top)))]] = int(rng.integers(1, bound + 1))
    return Polynomial(terms)


def random_squarefree(rng: np.random.Generator, variables: Sequence[str], degree: int,
                      attempts: int = 100) -> Polynomial:
    """Nonconstant squarefree polynomial of degree `degree` (at least 1)."""
    degree = max(degree, 1)
    for _ in range(attempts):
        candidate = random_polynomial(rng, variables, degree)
        if is_squarefree(candidate):
            return candidate
    raise ValueError(f"no squarefree polynomial of degree {degree} found in {attempts} draws")
