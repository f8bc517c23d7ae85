"""
Exact polynomial algebra over the Gaussian rationals Q(i).
"""

from .gaussian import GaussRational, I, ONE, ZERO
from .monomials import GLOBAL_ORDER, ST, VARIABLES, XY, Monomial, MonomialOrder, OrderKind, default_order
from .polynomial import Polynomial, S, T, X, Y, evaluate, point_assignment, poly_arith
from .division import divide_single, divides, exact_divide
from .gcd import gcd_many, gcd_multivariate, is_squarefree, squarefree_part
from .decompose import CoefficientDecomposition, coefficient_decompose, complement
from .linalg import from_domain_matrix, nullspace, reduced_row_echelon, to_domain_matrix

__all__ = [
    "GaussRational", "I", "ONE", "ZERO",
    "GLOBAL_ORDER", "ST", "VARIABLES", "XY", "Monomial", "MonomialOrder", "OrderKind", "default_order",
    "Polynomial", "S", "T", "X", "Y", "evaluate", "point_assignment", "poly_arith",
    "divide_single", "divides", "exact_divide",
    "gcd_many", "gcd_multivariate", "is_squarefree", "squarefree_part",
    "CoefficientDecomposition", "coefficient_decompose", "complement",
    "from_domain_matrix", "nullspace", "reduced_row_echelon", "to_domain_matrix",
]
