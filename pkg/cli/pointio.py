#!/usr/bin/env python3
"""
CSV point files: a header line `u,v` followed by one point per line, each
cell a Gaussian rational such as `3`, `-1/2`, `2*i` or `1/2+3/4*i`.
Row numbers in errors are file line numbers.
"""

import csv
import logging
from pathlib import Path
from typing import Iterable, List, Sequence, Tuple, Union

from algebra import GaussRational
from errors import PointParseError
from geometry import PointSet

logger = logging.getLogger(__name__)

HEADER = ["u", "v"]
PAIR_HEADER = ["p_u", "p_v", "q_u", "q_v"]

PathLike = Union[str, Path]


def parse_rows(lines: Iterable[str], label: str = "") -> PointSet:
    reader = csv.reader(lines)
    points, rows = [], []
    header_seen = False
    for row in reader:
        line = reader.line_num
        cells = [cell.replace(" ", "").replace("\t", "") for cell in row]
        if not any(cells):
            continue
        if not header_seen:
            if cells != HEADER:
                raise PointParseError(f"expected header 'u,v', found '{','.join(row)}'", line, 1)
            header_seen = True
            continue
        if len(cells) != 2:
            raise PointParseError(f"expected 2 cells, found {len(cells)}", line, min(len(cells), 2) + 1)
        point = []
        for column, cell in enumerate(cells, 1):
            try:
                point.append(GaussRational.parse(cell))
            except ValueError:
                raise PointParseError(f"invalid number '{cell}'", line, column) from None
        points.append(tuple(point))
        rows.append(line)
    if not header_seen:
        raise PointParseError("missing header 'u,v'", 1, 1)
    return PointSet(points, label, rows=rows)


def load_points(path: PathLike) -> PointSet:
    """
    Read a point file.

    Raises:
        PointParseError: for a malformed header or cell
        DuplicatePointError: for a repeated point, with its line number
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        points = parse_rows(handle, path.stem)
    logger.info("loaded %d points from %s", len(points), path)
    return points


def write_points(path: PathLike, points: PointSet):
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(HEADER)
        writer.writerows(points.to_rows())


def write_pairs(path: PathLike, pairs: Sequence[Tuple[int, int]], P: PointSet, Q: PointSet):
    """Incident pairs as `p_u,p_v,q_u,q_v` rows."""
    rows: List[List[str]] = [[str(P[p][0]), str(P[p][1]), str(Q[q][0]), str(Q[q][1])] for p, q in pairs]
    with Path(path).open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PAIR_HEADER)
        writer.writerows(rows)
