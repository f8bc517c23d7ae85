#!/usr/bin/env python3
"""
Named polynomials selectable with --preset.
"""

from typing import Dict

from algebra import Polynomial, S, T, X, Y
from errors import UsageError

PRESETS: Dict[str, Polynomial] = {
    "szemeredi-trotter": X * S - Y + T,
    "unit-distance": (X - S) ** 2 + (Y - T) ** 2 - 1,
    "squared-distance": (X - S) ** 2 + (Y - T) ** 2,
    "dot-product": X * S + Y * T,
    "cross-product": X * T - Y * S,
    "minkowski": (X - S) ** 2 - (Y - T) ** 2,
    "valtr": (X - S) ** 2 + Y - T,
    "elekes-degree-2": X * S + Y ** 2 - T ** 2,
}


def preset(name: str) -> Polynomial:
    try:
        return PRESETS[name]
    except KeyError:
        raise UsageError(f"unknown preset '{name}'; choose from {', '.join(sorted(PRESETS))}") from None
