#!/usr/bin/env python3
"""
Exact linear algebra over Q(i) on sympy's DomainMatrix with the QQ_I domain.

GaussRational entries are converted in and out at the boundary; inside,
row reduction runs on sympy's Gaussian-rational ground type.
"""

from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from .gaussian import GaussRational

Matrix = List[List[GaussRational]]


def _to_qq(value: Fraction):
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def to_domain_matrix(matrix: Sequence[Sequence[GaussRational]], width: int) -> DomainMatrix:
    """A (len(matrix) x width) DomainMatrix over QQ_I."""
    rows = []
    for row in matrix:
        entries = [GaussRational.coerce(v) for v in row]
        rows.append([QQ_I.new(_to_qq(v.re), _to_qq(v.im)) for v in entries])
    return DomainMatrix(rows, (len(rows), width), QQ_I)


def from_domain_matrix(matrix: DomainMatrix) -> Matrix:
    return [[GaussRational(_from_qq(v.x), _from_qq(v.y)) for v in row] for row in matrix.to_list()]


def reduced_row_echelon(matrix: Sequence[Sequence[GaussRational]], width: int = None) -> Tuple[Matrix, List[int]]:
    """
    Reduced row echelon form.

    Returns:
        (rows, pivot_columns); zero rows are dropped
    """
    if not matrix:
        return [], []
    width = len(matrix[0]) if width is None else width
    reduced, pivots = to_domain_matrix(matrix, width).rref()
    return from_domain_matrix(reduced)[:len(pivots)], list(pivots)


def nullspace(matrix: Sequence[Sequence[GaussRational]], width: int = None) -> Matrix:
    """
    Basis of {v : matrix * v = 0}, one vector per free column.

    With no rows every vector is a solution and the unit basis is returned.
    """
    if width is None:
        if not matrix:
            raise ValueError("width is required for an empty matrix")
        width = len(matrix[0])
    if not matrix:
        return from_domain_matrix(DomainMatrix.eye(width, QQ_I))
    return from_domain_matrix(to_domain_matrix(matrix, width).nullspace())
