"""
Tests for CSV point files.
"""

import tempfile
import unittest
from fractions import Fraction
from pathlib import Path

from algebra import I
from cli import load_points, parse_rows, write_pairs, write_points
from errors import DuplicatePointError, PointParseError
from geometry import PointSet


class TestParseRows(unittest.TestCase):

    def test_cells(self):
        points = parse_rows(["u,v", "1, -1/2", "", "2*i,1/2+3/4*i"])
        self.assertEqual(points.points[0], (1, Fraction(-1, 2)))
        self.assertEqual(points[1][0], 2 * I)
        self.assertEqual(len(points), 2)

    def test_header(self):
        with self.assertRaises(PointParseError) as caught:
            parse_rows(["x,y", "1,2"])
        self.assertEqual((caught.exception.row, caught.exception.column), (1, 1))
        with self.assertRaises(PointParseError):
            parse_rows([])

    def test_bad_cell(self):
        with self.assertRaises(PointParseError) as caught:
            parse_rows(["u,v", "1,2", "3,abc"])
        self.assertEqual((caught.exception.row, caught.exception.column), (3, 2))

    def test_wrong_width(self):
        with self.assertRaises(PointParseError) as caught:
            parse_rows(["u,v", "1,2,3"])
        self.assertEqual(caught.exception.row, 2)

    def test_duplicate_reports_file_line(self):
        with self.assertRaises(DuplicatePointError) as caught:
            parse_rows(["u,v", "1,2", "", "1,2"])
        self.assertEqual(caught.exception.row, 4)


class TestFiles(unittest.TestCase):

    def test_write_then_load(self):
        points = PointSet([(1, 2), (Fraction(1, 3), I), (1 - I, 0)])
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "P.csv"
            write_points(path, points)
            loaded = load_points(path)
        self.assertEqual(loaded, points)
        self.assertEqual(loaded.label, "P")

    def test_pairs(self):
        P = PointSet([(0, 1)])
        Q = PointSet([(1, 0), (2, 0)])
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / "pairs.csv"
            write_pairs(path, [(0, 0), (0, 1)], P, Q)
            lines = path.read_text(encoding="utf-8").splitlines()
        self.assertEqual(lines, ["p_u,p_v,q_u,q_v", "0,1,1,0", "0,1,2,0"])


if __name__ == "__main__":
    unittest.main()
