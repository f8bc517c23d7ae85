#!/usr/bin/env python3
"""
Coefficient expansion over a base pair of variables:
F = sum_{i,j} F_ij * u^i * v^j with (u, v) = (x, y) or (s, t).
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

from .gaussian import GaussRational
from .monomials import ST, XY, Monomial
from .polynomial import Polynomial

BASES = {"xy": XY, "st": ST}


def complement(base: Tuple[str, str]) -> Tuple[str, str]:
    if tuple(base) == XY:
        return ST
    if tuple(base) == ST:
        return XY
    raise ValueError(f"base must be (x, y) or (s, t), got {base}")


@dataclass(frozen=True)
class CoefficientDecomposition:
    """Coefficients F_ij, polynomials in the complementary pair, keyed by (i, j)."""

    base: Tuple[str, str]
    coefficients: Dict[Tuple[int, int], Polynomial] = field(default_factory=dict)

    def __getitem__(self, index: Tuple[int, int]) -> Polynomial:
        return self.coefficients.get(index, Polynomial.zero(complement(self.base)))

    def indices(self) -> list:
        """Exponent pairs in ascending order."""
        return sorted(self.coefficients)

    def __iter__(self) -> Iterator[Tuple[Tuple[int, int], Polynomial]]:
        for index in self.indices():
            yield index, self.coefficients[index]

    def __len__(self) -> int:
        return len(self.coefficients)

    def reassemble(self) -> Polynomial:
        u, v = self.base
        total = Polynomial.zero(self.base + complement(self.base))
        for (i, j), c in self.coefficients.items():
            total = total + c * Polynomial.monomial(Monomial.of({u: i, v: j}))
        return total

    def vanish_at(self, point: Tuple[GaussRational, GaussRational]) -> bool:
        """True when every coefficient polynomial vanishes at the given point of the complementary plane."""
        a, b = complement(self.base)
        assignment = {a: point[0], b: point[1]}
        return all(not c.substitute(assignment) for c in self.coefficients.values())


def coefficient_decompose(f: Polynomial, base: Tuple[str, str] = XY) -> CoefficientDecomposition:
    """
    Expand f over the base pair.

    Args:
        f: polynomial in x, y, s, t
        base: ("x", "y") or ("s", "t"), or the shorthands "xy" / "st"

    Returns:
        CoefficientDecomposition whose reassemble() is f
    """
    if isinstance(base, str):
        if base not in BASES:
            raise ValueError(f"base must be 'xy' or 'st', got '{base}'")
        base = BASES[base]
    base = tuple(base)
    other = complement(base)
    buckets: Dict[Tuple[int, int], dict] = {}
    for monomial, coefficient in f.items():
        index = (monomial.exponent(base[0]), monomial.exponent(base[1]))
        buckets.setdefault(index, {})[monomial.project(other)] = coefficient
    coefficients = {index: Polynomial(terms, other) for index, terms in buckets.items()}
    return CoefficientDecomposition(base, coefficients)
