#!/usr/bin/env python3
"""
Sparse multivariate polynomials in x, y, s, t over the Gaussian rationals.

A Polynomial is an immutable map Monomial -> nonzero GaussRational together
with a declared variable universe. Equality compares terms only, so the zero
polynomial is equal to 0 whatever its universe.
"""

from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from errors import MissingVariableError, VariableScopeError, ZeroDivisorError, ZeroPolynomialError
from .gaussian import GaussLike, GaussRational, ONE, ZERO
from .monomials import GLOBAL_ORDER, ONE_MONOMIAL, VARIABLES, Monomial, MonomialOrder

Scalar = Union[GaussRational, int]
Assignment = Mapping[str, GaussLike]


def _is_scalar(value) -> bool:
    try:
        GaussRational.coerce(value)
    except TypeError:
        return False
    return True


class Polynomial:
    """Exact polynomial over Q(i) in a subset of the variables x, y, s, t."""

    __slots__ = ("_terms", "_variables", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, GaussLike]] = None,
                 variables: Optional[Iterable[str]] = None):
        cleaned: Dict[Monomial, GaussRational] = {}
        for monomial, coefficient in (terms or {}).items():
            value = GaussRational.coerce(coefficient)
            if value:
                cleaned[Monomial(*monomial)] = value
        used = frozenset().union(*(m.variables() for m in cleaned)) if cleaned else frozenset()
        if variables is None:
            declared = used
        else:
            declared = frozenset(variables)
            unknown = declared.difference(VARIABLES)
            if unknown:
                raise ValueError(f"unknown variables {sorted(unknown)}")
            if not used <= declared:
                raise VariableScopeError("polynomial", _ordered(declared), used - declared)
        self._terms = cleaned
        self._variables = declared
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, variables: Iterable[str] = ()) -> "Polynomial":
        return cls({}, variables)

    @classmethod
    def constant(cls, value: GaussLike, variables: Iterable[str] = ()) -> "Polynomial":
        return cls({ONE_MONOMIAL: value}, variables)

    @classmethod
    def var(cls, name: str) -> "Polynomial":
        return cls({Monomial.variable(name): 1})

    @classmethod
    def monomial(cls, monomial: Monomial, coefficient: GaussLike = 1) -> "Polynomial":
        return cls({monomial: coefficient})

    @classmethod
    def coerce(cls, value: Union["Polynomial", GaussLike]) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.constant(value)

    # Inspection

    @property
    def variables(self) -> frozenset:
        """Declared variable universe."""
        return self._variables

    def used_variables(self) -> frozenset:
        if not self._terms:
            return frozenset()
        return frozenset().union(*(m.variables() for m in self._terms))

    @property
    def terms(self) -> Dict[Monomial, GaussRational]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, GaussRational]]:
        return iter(self._terms.items())

    def monomials(self) -> Iterable[Monomial]:
        return self._terms.keys()

    def coefficient(self, monomial: Monomial) -> GaussRational:
        return self._terms.get(Monomial(*monomial), ZERO)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self._terms)

    def constant_value(self) -> GaussRational:
        return self._terms.get(ONE_MONOMIAL, ZERO)

    @property
    def degree(self) -> int:
        """Total degree. Undefined (raises) for the zero polynomial."""
        if not self._terms:
            raise ZeroPolynomialError("degree")
        return max(m.degree for m in self._terms)

    def degree_in(self, name: str) -> int:
        if not self._terms:
            raise ZeroPolynomialError("degree")
        return max(m.exponent(name) for m in self._terms)

    def leading_term(self, order: MonomialOrder = GLOBAL_ORDER) -> Tuple[Monomial, GaussRational]:
        if not self._terms:
            raise ZeroPolynomialError("leading term")
        monomial = order.leading(self._terms)
        return monomial, self._terms[monomial]

    def leading_monomial(self, order: MonomialOrder = GLOBAL_ORDER) -> Monomial:
        return self.leading_term(order)[0]

    def leading_coefficient(self, order: MonomialOrder = GLOBAL_ORDER) -> GaussRational:
        return self.leading_term(order)[1]

    def sorted_terms(self, order: MonomialOrder = GLOBAL_ORDER) -> list:
        return [(m, self._terms[m]) for m in order.sorted(self._terms)]

    def is_real(self) -> bool:
        return all(c.is_real() for c in self._terms.values())

    # Arithmetic

    def _universe(self, other: "Polynomial") -> frozenset:
        return self._variables | other._variables

    def __add__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if not _is_scalar(other):
                return NotImplemented
            other = Polynomial.constant(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, ZERO) + coefficient
        return Polynomial(terms, self._universe(other))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()}, self._variables)

    def __sub__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if not _is_scalar(other):
                return NotImplemented
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        if not _is_scalar(other):
            return NotImplemented
        return Polynomial.constant(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            if not _is_scalar(other):
                return NotImplemented
            return self.scale(other)
        terms: Dict[Monomial, GaussRational] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                terms[m] = terms.get(m, ZERO) + c1 * c2
        return Polynomial(terms, self._universe(other))

    __rmul__ = __mul__

    def scale(self, factor: GaussLike) -> "Polynomial":
        factor = GaussRational.coerce(factor)
        return Polynomial({m: c * factor for m, c in self._terms.items()}, self._variables)

    def __truediv__(self, other) -> "Polynomial":
        """Division by a nonzero scalar only."""
        if isinstance(other, Polynomial):
            if not other.is_constant():
                return NotImplemented
            other = other.constant_value()
        other = GaussRational.coerce(other)
        if not other:
            raise ZeroDivisorError("scalar division")
        return self.scale(other.inverse())

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.constant(1, self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def monic(self, order: MonomialOrder = GLOBAL_ORDER) -> "Polynomial":
        """Scale so that the leading coefficient under `order` is 1."""
        if not self._terms:
            return self
        return self.scale(self.leading_coefficient(order).inverse())

    def is_proportional(self, other: "Polynomial") -> bool:
        """True when self = c*other for a nonzero scalar c (both zero counts as proportional)."""
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self._terms.keys() != other._terms.keys():
            return False
        return self.monic() == other.monic()

    # Calculus and substitution

    def derivative(self, name: str) -> "Polynomial":
        index = VARIABLES.index(name)
        terms = {}
        for monomial, coefficient in self._terms.items():
            e = monomial[index]
            if e:
                lowered = list(monomial)
                lowered[index] = e - 1
                terms[Monomial(*lowered)] = coefficient * e
        return Polynomial(terms, self._variables)

    def evaluate(self, assignment: Assignment) -> GaussRational:
        """Exact value at a full assignment of the polynomial's variables."""
        missing = self._variables.difference(assignment)
        if missing:
            raise MissingVariableError(missing)
        return self.substitute(assignment).constant_value()

    def substitute(self, assignment: Assignment) -> "Polynomial":
        """Partial evaluation: fix the assigned variables, keep the rest."""
        values = {name: GaussRational.coerce(v) for name, v in assignment.items() if name in VARIABLES}
        powers: Dict[Tuple[str, int], GaussRational] = {}

        def power(name: str, e: int) -> GaussRational:
            key = (name, e)
            if key not in powers:
                powers[key] = values[name] ** e
            return powers[key]

        terms: Dict[Monomial, GaussRational] = {}
        for monomial, coefficient in self._terms.items():
            value = coefficient
            kept = list(monomial)
            for index, name in enumerate(VARIABLES):
                e = monomial[index]
                if e and name in values:
                    value = value * power(name, e)
                    kept[index] = 0
            if value:
                reduced = Monomial(*kept)
                terms[reduced] = terms.get(reduced, ZERO) + value
        return Polynomial(terms, self._variables.difference(values))

    def rename(self, mapping: Mapping[str, str]) -> "Polynomial":
        """Rename variables, e.g. {'x': 's', 'y': 't'} maps G(x,y) to G(s,t)."""
        target = [mapping.get(name, name) for name in VARIABLES]
        terms: Dict[Monomial, GaussRational] = {}
        for monomial, coefficient in self._terms.items():
            exponents: Dict[str, int] = {}
            for name, e in zip(target, monomial):
                if e:
                    exponents[name] = exponents.get(name, 0) + e
            m = Monomial.of(exponents)
            terms[m] = terms.get(m, ZERO) + coefficient
        return Polynomial(terms, {mapping.get(v, v) for v in self._variables})

    def with_variables(self, variables: Iterable[str]) -> "Polynomial":
        """Same terms under another declared universe."""
        return Polynomial(self._terms, variables)

    def check_scope(self, name: str, allowed: Iterable[str]) -> "Polynomial":
        allowed = tuple(allowed)
        used = self.used_variables()
        if not used <= set(allowed):
            raise VariableScopeError(name, allowed, used - set(allowed))
        return self

    # Comparison and text

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if _is_scalar(other):
            return self._terms == Polynomial.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = [_format_term(m, c) for m, c in self.sorted_terms(GLOBAL_ORDER)]
        text = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                text += " - " + piece[1:]
            else:
                text += " + " + piece
        return text

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"


def _ordered(names: Iterable[str]) -> Tuple[str, ...]:
    names = set(names)
    return tuple(v for v in VARIABLES if v in names)


def _format_coefficient(c: GaussRational) -> str:
    if c.is_real() or c.re == 0:
        return str(c)
    return f"({c})"


def _format_term(monomial: Monomial, coefficient: GaussRational) -> str:
    if monomial == ONE_MONOMIAL:
        return _format_coefficient(coefficient)
    body = str(monomial)
    if coefficient == ONE:
        return body
    if coefficient == -ONE:
        return "-" + body
    return f"{_format_coefficient(coefficient)}*{body}"


def poly_arith(op: str, a: Polynomial, b: Union[Polynomial, GaussLike]) -> Polynomial:
    """
    Exact add/sub/mul/scale in canonical form.

    Args:
        op: one of "add", "sub", "mul", "scale"
        a: left operand
        b: right operand (a scalar for "scale")

    Returns:
        The resulting polynomial
    """
    if op == "add":
        return a + Polynomial.coerce(b)
    if op == "sub":
        return a - Polynomial.coerce(b)
    if op == "mul":
        return a * Polynomial.coerce(b)
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown polynomial operation '{op}'")


def evaluate(f: Polynomial, assignment: Assignment) -> GaussRational:
    return f.evaluate(assignment)


def point_assignment(p: Tuple[GaussLike, GaussLike], q: Tuple[GaussLike, GaussLike]) -> Dict[str, GaussLike]:
    """The assignment for the point p (+) q of C^4."""
    return {"x": p[0], "y": p[1], "s": q[0], "t": q[1]}


X = Polynomial.var("x")
Y = Polynomial.var("y")
S = Polynomial.var("s")
T = Polynomial.var("t")
