#!/usr/bin/env python3
"""
Finite planar point sets with Gaussian rational coordinates.
"""

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from algebra import GaussRational
from errors import DuplicatePointError

Point = Tuple[GaussRational, GaussRational]


def as_point(pair: Sequence) -> Point:
    if len(pair) != 2:
        raise ValueError(f"a planar point needs two coordinates, got {pair!r}")
    return GaussRational.coerce(pair[0]), GaussRational.coerce(pair[1])


def format_point(point: Point) -> str:
    return f"({point[0]}, {point[1]})"


class PointSet:
    """
    An ordered list of distinct points.

    Args:
        points: coordinate pairs (ints, Fractions or GaussRationals)
        label: free-form name used in reports
        rows: optional row numbers reported when a duplicate is found
              (defaults to 1-based positions)

    Raises:
        DuplicatePointError: if a point occurs twice
    """

    __slots__ = ("_points", "_index", "label")

    def __init__(self, points: Iterable[Sequence] = (), label: str = "",
                 rows: Optional[Sequence[int]] = None):
        self._points: List[Point] = []
        self._index = {}
        for position, pair in enumerate(points):
            point = as_point(pair)
            if point in self._index:
                row = rows[position] if rows is not None else position + 1
                raise DuplicatePointError(row, format_point(point))
            self._index[point] = position
            self._points.append(point)
        self.label = label

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __getitem__(self, index: int) -> Point:
        return self._points[index]

    def __contains__(self, pair) -> bool:
        try:
            return as_point(pair) in self._index
        except (TypeError, ValueError):
            return False

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._points == other._points

    def index_of(self, pair) -> int:
        return self._index[as_point(pair)]

    @property
    def points(self) -> List[Point]:
        return list(self._points)

    def subset(self, indices: Iterable[int], label: Optional[str] = None) -> "PointSet":
        return PointSet((self._points[i] for i in indices), label if label is not None else self.label)

    def relabel(self, label: str) -> "PointSet":
        return PointSet(self._points, label)

    def is_real(self) -> bool:
        return all(u.is_real() and v.is_real() for u, v in self._points)

    def to_rows(self) -> List[List[str]]:
        return [[str(u), str(v)] for u, v in self._points]

    def __repr__(self) -> str:
        name = f" '{self.label}'" if self.label else ""
        return f"PointSet{name}(n={len(self)})"
