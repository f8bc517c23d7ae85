#!/usr/bin/env python3
"""
Exact Gaussian rationals: the field Q(i) = {a + b*i : a, b rational}.

Both components are `fractions.Fraction`, so they are always in lowest terms
with a positive denominator and no operation ever rounds.
"""

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

GaussLike = Union["GaussRational", Rational, int]

_NUMBER = r"\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"^([+-]?)({_NUMBER})$")
_IMAG_RE = re.compile(rf"^([+-]?)(?:({_NUMBER})\*)?i$")
_COMPLEX_RE = re.compile(rf"^([+-]?)({_NUMBER})([+-])(?:({_NUMBER})\*)?i$")


def _signed(sign: str, number: str) -> Fraction:
    value = Fraction(number)
    return -value if sign == "-" else value


class GaussRational:
    """An element re + im*i of Q(i). Immutable and hashable."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: Union[Rational, int, str] = 0, im: Union[Rational, int, str] = 0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @classmethod
    def coerce(cls, value: GaussLike) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussRational":
        """
        Parse the cell grammar `p/q`, `c/d*i` or `a/b+c/d*i`. Spaces are ignored.

        Raises:
            ValueError: if the text does not match or a denominator is zero
        """
        compact = "".join(text.split())
        try:
            match = _REAL_RE.match(compact)
            if match:
                return cls(_signed(*match.groups()))
            match = _IMAG_RE.match(compact)
            if match:
                sign, number = match.groups()
                return cls(0, _signed(sign, number or "1"))
            match = _COMPLEX_RE.match(compact)
            if match:
                re_sign, re_number, im_sign, im_number = match.groups()
                return cls(_signed(re_sign, re_number), _signed(im_sign, im_number or "1"))
        except ZeroDivisionError:
            raise ValueError(f"zero denominator in '{text.strip()}'")
        raise ValueError(f"not a Gaussian rational: '{text.strip()}'")

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def is_real(self) -> bool:
        return self._im == 0

    def conjugate(self) -> "GaussRational":
        return GaussRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """Field norm a^2 + b^2."""
        return self._re * self._re + self._im * self._im

    def denominator(self) -> int:
        """Least common denominator of both components."""
        a, b = self._re.denominator, self._im.denominator
        return a * b // math.gcd(a, b)

    def scaled_integers(self, scale: int) -> Tuple[int, int]:
        """Return (re*scale, im*scale) as ints; `scale` must clear both denominators."""
        re_value = self._re * scale
        im_value = self._im * scale
        assert re_value.denominator == 1 and im_value.denominator == 1
        return re_value.numerator, im_value.numerator

    # Arithmetic

    def __add__(self, other: GaussLike) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other: GaussLike) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: GaussLike) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other - self

    def __mul__(self, other: GaussLike) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: GaussLike) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError("GaussRational division by zero")
        numerator = self * other.conjugate()
        return GaussRational(numerator._re / norm, numerator._im / norm)

    def __rtruediv__(self, other: GaussLike) -> "GaussRational":
        try:
            other = GaussRational.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def inverse(self) -> "GaussRational":
        return GaussRational(1) / self

    def __pow__(self, exponent: int) -> "GaussRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = GaussRational(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __neg__(self) -> "GaussRational":
        return GaussRational(-self._re, -self._im)

    def __pos__(self) -> "GaussRational":
        return self

    # Comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Rational)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    # Text

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        if self._im == 1:
            imaginary = "i"
        elif self._im == -1:
            imaginary = "-i"
        else:
            imaginary = f"{self._im}*i"
        if self._re == 0:
            return imaginary
        if imaginary.startswith("-"):
            return f"{self._re}{imaginary}"
        return f"{self._re}+{imaginary}"

    def __repr__(self) -> str:
        return f"GaussRational('{self}')"


ZERO = GaussRational(0)
ONE = GaussRational(1)
I = GaussRational(0, 1)
