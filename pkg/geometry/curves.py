#!/usr/bin/env python3
"""
Specialisations of F to plane curves.

For a point q = (s_q, t_q) the curve C_q is Z(F(x, y, s_q, t_q)) in the
(x, y) plane; for p = (x_p, y_p) the dual curve C_p* is Z(F(x_p, y_p, s, t))
in the (s, t) plane. Either may degenerate to the whole plane.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Sequence, Tuple

from algebra import ST, XY, Polynomial, squarefree_part
from errors import ZeroPolynomialError
from .points import Point, as_point


class Side(Enum):
    SECOND = "second"   # fix (s, t): C_q in the (x, y) plane
    FIRST = "first"     # fix (x, y): C_p* in the (s, t) plane

    @property
    def fixed(self) -> Tuple[str, str]:
        return ST if self is Side.SECOND else XY

    @property
    def free(self) -> Tuple[str, str]:
        return XY if self is Side.SECOND else ST


@dataclass(frozen=True)
class SpecializedCurve:
    source: Point
    curve: Polynomial
    side: Side = Side.SECOND

    @property
    def degenerate(self) -> bool:
        return self.curve.is_zero()

    def contains(self, point: Sequence) -> bool:
        u, v = self.side.free
        point = as_point(point)
        return not self.curve.evaluate({u: point[0], v: point[1]})

    def identity_key(self) -> Polynomial:
        """
        Key under which two specialisations define the same curve: the monic
        squarefree part, the zero polynomial for a degenerate one and the
        constant 1 for an empty one.
        """
        if self.curve.is_zero():
            return self.curve
        if self.curve.is_constant():
            return Polynomial.constant(1)
        return squarefree_part(self.curve)[0]


def specialize(F: Polynomial, point: Sequence, side: Side = Side.SECOND) -> SpecializedCurve:
    """
    Partially evaluate F at a point of one of the two planes.

    Args:
        F: nonzero polynomial in x, y, s, t
        point: the fixed point
        side: Side.SECOND gives C_q, Side.FIRST gives C_p*

    Raises:
        ZeroPolynomialError: if F = 0
    """
    if F.is_zero():
        raise ZeroPolynomialError("specialize")
    if isinstance(side, str):
        side = Side(side)
    point = as_point(point)
    a, b = side.fixed
    curve = F.substitute({a: point[0], b: point[1]}).with_variables(side.free)
    return SpecializedCurve(point, curve, side)


def curve_classes(curves: List[SpecializedCurve]) -> Tuple[List[List[int]], List[int]]:
    """
    Group specialisations defining the same curve.

    Returns:
        (classes, degenerate): classes lists index groups of size >= 2 among
        nondegenerate curves, ordered by first member; degenerate lists the
        indices of the zero specialisations
    """
    groups: Dict[Polynomial, List[int]] = {}
    degenerate: List[int] = []
    for index, curve in enumerate(curves):
        if curve.degenerate:
            degenerate.append(index)
            continue
        groups.setdefault(curve.identity_key(), []).append(index)
    classes = sorted((members for members in groups.values() if len(members) > 1), key=lambda m: m[0])
    return classes, degenerate
