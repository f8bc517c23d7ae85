#!/usr/bin/env python3
"""
Monomials over the variables x, y, s, t and the monomial orders used to
compare them (lex, grlex, grevlex) under a chosen variable precedence.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, NamedTuple, Tuple

from sympy.polys.orderings import monomial_key

import config

VARIABLES: Tuple[str, ...] = ("x", "y", "s", "t")
XY: Tuple[str, str] = ("x", "y")
ST: Tuple[str, str] = ("s", "t")


class Monomial(NamedTuple):
    """Exponent vector x^x * y^y * s^s * t^t."""

    x: int = 0
    y: int = 0
    s: int = 0
    t: int = 0

    @classmethod
    def of(cls, exponents: Dict[str, int]) -> "Monomial":
        for name, exponent in exponents.items():
            if name not in VARIABLES:
                raise ValueError(f"unknown variable '{name}'")
            if exponent < 0:
                raise ValueError(f"negative exponent for '{name}'")
        return cls(**exponents)

    @classmethod
    def variable(cls, name: str, exponent: int = 1) -> "Monomial":
        return cls.of({name: exponent})

    @property
    def degree(self) -> int:
        return self.x + self.y + self.s + self.t

    def exponent(self, name: str) -> int:
        return getattr(self, name)

    def exponents(self) -> Dict[str, int]:
        """Canonical map form: zero exponents omitted."""
        return {name: e for name, e in zip(VARIABLES, self) if e}

    def variables(self) -> frozenset:
        return frozenset(name for name, e in zip(VARIABLES, self) if e)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(*(a + b for a, b in zip(self, other)))

    def quotient(self, divisor: "Monomial") -> "Monomial":
        return Monomial(*(a - b for a, b in zip(self, divisor)))

    def project(self, names: Iterable[str]) -> "Monomial":
        """Keep only the exponents of `names`."""
        keep = set(names)
        return Monomial(*(e if name in keep else 0 for name, e in zip(VARIABLES, self)))

    def __str__(self) -> str:
        parts = []
        for name, e in zip(VARIABLES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


ONE_MONOMIAL = Monomial()


class OrderKind(Enum):
    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"


# Exponent tuples are listed in precedence order before keying.
_SYMPY_KEYS = {kind: monomial_key(kind.value) for kind in OrderKind}


@dataclass(frozen=True)
class MonomialOrder:
    """
    A total multiplicative order on monomials.

    `precedence` lists the variables from most to least significant.
    """

    kind: OrderKind = OrderKind.GREVLEX
    precedence: Tuple[str, ...] = VARIABLES

    def __post_init__(self):
        if sorted(self.precedence) != sorted(VARIABLES):
            raise ValueError(f"precedence must be a permutation of {VARIABLES}, got {self.precedence}")

    @classmethod
    def parse(cls, kind: str, precedence: Iterable[str] = VARIABLES) -> "MonomialOrder":
        try:
            order_kind = OrderKind(kind)
        except ValueError:
            raise ValueError(f"unknown monomial order '{kind}' (expected lex, grlex or grevlex)")
        return cls(order_kind, tuple(precedence))

    def key(self, monomial: Monomial) -> tuple:
        """Sort key; a larger key is a larger monomial."""
        return _SYMPY_KEYS[self.kind](tuple(monomial.exponent(name) for name in self.precedence))

    def respects_degree(self) -> bool:
        return self.kind is not OrderKind.LEX

    def leading(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def sorted(self, monomials: Iterable[Monomial], descending: bool = True):
        return sorted(monomials, key=self.key, reverse=descending)

    def __str__(self) -> str:
        return f"{self.kind.value}({'>'.join(self.precedence)})"


# Canonical form, monic normalisation and printing always use this order.
GLOBAL_ORDER = MonomialOrder(OrderKind.GREVLEX, VARIABLES)


def default_order() -> MonomialOrder:
    """Division order taken from configuration."""
    return MonomialOrder.parse(config.DEFAULT_ORDER, config.VARIABLE_PRECEDENCE)
