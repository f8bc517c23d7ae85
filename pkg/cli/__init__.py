"""
Text formats of the command line: polynomial grammar, point files, configs and reports.
"""

from .grammar import PolynomialSource, parse_polynomial
from .pointio import load_points, parse_rows, write_pairs, write_points
from .reports import ExperimentConfig, build_report, dumps, write_report

__all__ = [
    "PolynomialSource", "parse_polynomial",
    "load_points", "parse_rows", "write_pairs", "write_points",
    "ExperimentConfig", "build_report", "dumps", "write_report",
]
