"""
Extremal and exceptional instances with their predicted counts.
"""

from typing import Callable, Dict, Tuple

from .instance import IMAGE, INCIDENCES, ConstructionInstance
from .families import (arithmetic_progression, cartesian_saturation, elekes_count, elekes_degree_d,
                       elekes_grid, generic_diagonal, integer_grid, valtr_count, valtr_grid)
from .randomized import monomials_up_to, random_polynomial, random_squarefree
from .presets import PRESETS, preset

# name -> (generator, names of its integer arguments); cartesian_saturation takes
# polynomials and is built by the CLI directly.
FAMILIES: Dict[str, Tuple[Callable[..., ConstructionInstance], Tuple[str, ...]]] = {
    "elekes": (elekes_grid, ("lambda", "mu")),
    "elekes-degree-d": (elekes_degree_d, ("lambda", "mu", "d")),
    "valtr": (valtr_grid, ("lambda",)),
    "diagonal": (generic_diagonal, ("n", "seed")),
    "grid": (integer_grid, ("m",)),
    "progression": (arithmetic_progression, ("n",)),
}

__all__ = [
    "IMAGE", "INCIDENCES", "ConstructionInstance",
    "arithmetic_progression", "cartesian_saturation", "elekes_count", "elekes_degree_d", "elekes_grid",
    "generic_diagonal", "integer_grid", "valtr_count", "valtr_grid",
    "monomials_up_to", "random_polynomial", "random_squarefree",
    "PRESETS", "preset", "FAMILIES",
]
