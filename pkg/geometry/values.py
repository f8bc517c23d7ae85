#!/usr/bin/env python3
"""
Values of a polynomial (or a pair of polynomials) on P x P.

    repeated_values   how often F takes the value a
    distinct_values   |F(P x P)| and the best single row |F(p x P)|
    map_values        fibers and image size of (F1, F2)
    fiber_probe       shape of the fiber of (F1, F2) over one point q
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from algebra import GaussRational, Polynomial, exact_divide, gcd_multivariate
from algebra.gaussian import GaussLike
from errors import UsageError, ZeroPolynomialError
from workflow import ChunkWorkflow
from .counting import IncidenceReport, count_intersections
from .envelopes import Envelope, power_envelope
from .points import PointSet, format_point

logger = logging.getLogger(__name__)


def repeated_values(F: Polynomial, P: PointSet, a: GaussLike = 0,
                    workflow: Optional[ChunkWorkflow] = None) -> IncidenceReport:
    """
    Number of ordered pairs (p, q) in P x P with F(p, q) = a.

    Raises:
        ZeroPolynomialError: if F is identically a
    """
    a = GaussRational.coerce(a)
    shifted = F - a
    if shifted.is_zero():
        raise ZeroPolynomialError("repeated_values")
    report = count_intersections(shifted, P, P, workflow=workflow)
    report.envelopes.append(power_envelope("repeated", len(P), Fraction(4, 3), report.count))
    report.extra["value"] = str(a)
    return report


def _sort_key(value) -> tuple:
    if isinstance(value, tuple):
        return tuple(part for v in value for part in (v.re, v.im))
    return value.re, value.im


def _show(value) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(str(v) for v in value) + ")"
    return str(value)


@dataclass
class ValuesReport:
    """Size of an image set, with its envelope and the largest single-row image."""

    count: int
    n: int
    envelope: Envelope
    row_maximum: int = 0
    row_point: Optional[int] = None
    values: Optional[List[Any]] = None

    def to_dict(self, P: Optional[PointSet] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "count": str(self.count),
            "sizes": {"P": str(self.n)},
            "envelopes": {self.envelope.name: self.envelope.to_dict()},
            "row_maximum": str(self.row_maximum),
        }
        if self.row_point is not None:
            data["row_point"] = format_point(P[self.row_point]) if P is not None else self.row_point
        if self.values is not None:
            data["values"] = [_show(v) for v in self.values]
        return data


def _image(functions: List[Polynomial], P: PointSet, exponent: Fraction, name: str,
           list_values: bool) -> ValuesReport:
    image = set()
    best, best_point = 0, None
    for index, p in enumerate(P):
        rows = [f.substitute({"x": p[0], "y": p[1]}) for f in functions]
        row_values = set()
        for q in P:
            assignment = {"s": q[0], "t": q[1]}
            values = tuple(r.evaluate(assignment) for r in rows)
            row_values.add(values if len(values) > 1 else values[0])
        image |= row_values
        if len(row_values) > best:
            best, best_point = len(row_values), index
    count = len(image)
    return ValuesReport(
        count=count,
        n=len(P),
        envelope=power_envelope(name, len(P), exponent, count),
        row_maximum=best,
        row_point=best_point,
        values=sorted(image, key=_sort_key) if list_values else None,
    )


def distinct_values(F: Polynomial, P: PointSet, list_values: bool = False) -> ValuesReport:
    """
    |F(P x P)|, computed by evaluating all ordered pairs.

    The report also carries max over p of |F(p x P)| and the p attaining it.
    """
    if F.is_zero():
        raise ZeroPolynomialError("distinct_values")
    return _image([F], P, Fraction(2, 3), "distinct", list_values)


@dataclass
class FiberSplit:
    """Pairs on Z(F3) and pairs on the cofactor system, F3 = gcd(F1-a, F2-b)."""

    common_factor: str
    on_common_factor: int
    on_cofactors: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "common_factor": self.common_factor,
            "on_common_factor": str(self.on_common_factor),
            "on_cofactors": str(self.on_cofactors),
        }


def map_values(F1: Polynomial, F2: Polynomial, P: PointSet, mode: str = "fiber",
               a: GaussLike = 0, b: GaussLike = 0, list_values: bool = False,
               workflow: Optional[ChunkWorkflow] = None):
    """
    Values of the map (F1, F2) on P x P.

    Args:
        mode: "fiber" counts pairs mapped to (a, b); "distinct" counts the image

    Returns:
        IncidenceReport for "fiber" (with a "split" entry when F1-a and F2-b
        share a factor), ValuesReport for "distinct"

    Raises:
        ZeroPolynomialError: if F1-a or F2-b is zero in fiber mode
        UsageError: for an unknown mode
    """
    if mode == "distinct":
        return _image([F1, F2], P, Fraction(1), "linear", list_values)
    if mode != "fiber":
        raise UsageError(f"mode must be 'fiber' or 'distinct', got '{mode}'")

    first, second = F1 - GaussRational.coerce(a), F2 - GaussRational.coerce(b)
    report = count_intersections((first, second), P, P, workflow=workflow)
    report.extra["value"] = [str(GaussRational.coerce(a)), str(GaussRational.coerce(b))]
    if not report.coprime:
        common = gcd_multivariate(first, second)
        cofactors = (exact_divide(first, common), exact_divide(second, common))
        split = FiberSplit(
            common_factor=str(common),
            on_common_factor=count_intersections(common, P, P, workflow=workflow).count,
            on_cofactors=count_intersections(cofactors, P, P, workflow=workflow).count,
        )
        logger.info("fiber over (%s, %s) contains the curve %s", a, b, common)
        report.extra["split"] = split.to_dict()
    return report


class FiberKind(Enum):
    EMPTY = "empty"
    FINITE = "finite_with_bound"
    CURVE = "contains_curve"


@dataclass(frozen=True)
class FiberProbe:
    kind: FiberKind
    bound: Optional[int] = None
    curve: Optional[Polynomial] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind.value}
        if self.bound is not None:
            data["bound"] = str(self.bound)
        if self.curve is not None:
            data["curve"] = str(self.curve)
        return data


def fiber_probe(F1: Polynomial, F2: Polynomial, q: Tuple[GaussLike, GaussLike]) -> FiberProbe:
    """
    Classify {(x, y) : F1(x, y, q) = F2(x, y, q) = 0}.

    A zero curve stands for the whole plane. FINITE carries the product of
    the specialised degrees as an upper bound, not a count.
    """
    if F1.is_zero() or F2.is_zero():
        raise ZeroPolynomialError("fiber_probe")
    assignment = {"s": GaussRational.coerce(q[0]), "t": GaussRational.coerce(q[1])}
    specialised = [F.substitute(assignment) for F in (F1, F2)]
    if any(f.is_constant() and not f.is_zero() for f in specialised):
        return FiberProbe(FiberKind.EMPTY)
    nonzero = [f for f in specialised if not f.is_zero()]
    if not nonzero:
        return FiberProbe(FiberKind.CURVE, curve=Polynomial.zero(("x", "y")))
    common = nonzero[0] if len(nonzero) == 1 else gcd_multivariate(*nonzero)
    if not common.is_constant():
        return FiberProbe(FiberKind.CURVE, curve=common.monic())
    return FiberProbe(FiberKind.FINITE, bound=specialised[0].degree * specialised[1].degree)
