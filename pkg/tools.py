#!/usr/bin/env python3
"""
Operation registry for Cartesian Lab.
Every library operation is listed with a short specification and can be
called by name, which is how `main.py --list-operations` and scripted
callers reach the library without importing each package.
"""

from typing import Any, Callable, Dict, List

from algebra import (coefficient_decompose, divide_single, evaluate, gcd_multivariate, poly_arith,
                     squarefree_part)
from cli import load_points, parse_polynomial, write_points
from constructions import (arithmetic_progression, cartesian_saturation, elekes_degree_d, elekes_grid,
                           generic_diagonal, integer_grid, random_polynomial, random_squarefree, valtr_grid)
from geometry import (brute_force_count, count_intersections, curve_incidence_split, distinct_values,
                      fiber_probe, incidence_graph, kst_free_check, map_values, partition_rich,
                      repeated_values, specialize)
from nullstellensatz import (alon_1d_test, cartesian_test, degenerate_points, fit_vanishing_curve,
                             grid_witness_to_cartesian, self_cartesian_test, trivial_cartesian_probe)


def _spec(name: str, description: str, **parameters: str) -> Dict[str, Any]:
    return {"name": name, "description": description, "parameters": parameters}


# Operation specifications
OPERATION_SPECS: List[Dict[str, Any]] = [
    _spec("poly_arith", "Exact add/sub/mul/scale of polynomials.", op="add|sub|mul|scale",
          a="Polynomial", b="Polynomial or scalar"),
    _spec("evaluate", "Exact value at a full assignment.", f="Polynomial", assignment="{var: value}"),
    _spec("divide_single", "Division by one polynomial under a monomial order.", f="Polynomial",
          g="Polynomial", order="MonomialOrder"),
    _spec("gcd_multivariate", "Monic gcd of two polynomials.", a="Polynomial", b="Polynomial"),
    _spec("squarefree_part", "Monic squarefree part and whether f was squarefree.", f="Polynomial"),
    _spec("coefficient_decompose", "Expansion over the (x, y) or (s, t) monomials.", f="Polynomial",
          base="xy|st"),
    _spec("cartesian_test", "Witness for F = G*H + K*L, or the failing coefficient.", F="Polynomial",
          G="Polynomial in x, y", K="Polynomial in s, t"),
    _spec("alon_1d_test", "One-dimensional test f = g(x)*h + k(y)*l.", f="Polynomial in x, y",
          g="Polynomial in x", k="Polynomial in y"),
    _spec("self_cartesian_test", "Is F - a (G(x, y), G(s, t))-Cartesian?", F="Polynomial",
          G="Polynomial in x, y", a="scalar"),
    _spec("trivial_cartesian_probe", "Common factor of F in (x, y) or in (s, t) alone.", F="Polynomial"),
    _spec("degenerate_points", "Candidates q with F(., ., q) = 0.", F="Polynomial", candidates="PointSet"),
    _spec("fit_vanishing_curve", "Lowest-degree curve through a point set.", points="PointSet", d="int"),
    _spec("grid_witness_to_cartesian", "Witness (G, K) from a grid I x J inside Z(F).", F="Polynomial",
          I="PointSet", J="PointSet"),
    _spec("specialize", "C_q or the dual curve C_p*.", F="Polynomial", point="(u, v)", side="second|first"),
    _spec("count_intersections", "Exact |X n (P x Q)|.", system="Polynomial or pair", P="PointSet",
          Q="PointSet"),
    _spec("brute_force_count", "Double loop over evaluate.", system="Polynomial or pair", P="PointSet",
          Q="PointSet"),
    _spec("curve_incidence_split", "Split Q by whether C_q contains Z(G).", F="Polynomial",
          G="Polynomial in x, y", P="PointSet on Z(G)", Q="PointSet"),
    _spec("incidence_graph", "Bipartite incidence graph of P and the curves C_q.", F="Polynomial",
          P="PointSet", Q="PointSet"),
    _spec("kst_free_check", "K_{s,t} witness or None.", graph="IncidenceGraph", s="int", t="int"),
    _spec("partition_rich", "Rich-pair partition of P and Q.", F="Polynomial", P="PointSet", Q="PointSet",
          M="int"),
    _spec("repeated_values", "Pairs with F(p, q) = a.", F="Polynomial", P="PointSet", a="scalar"),
    _spec("distinct_values", "|F(P x P)|.", F="Polynomial", P="PointSet"),
    _spec("map_values", "Fibers or image of (F1, F2).", F1="Polynomial", F2="Polynomial", P="PointSet",
          mode="fiber|distinct"),
    _spec("fiber_probe", "Empty, finite or curve fiber over q.", F1="Polynomial", F2="Polynomial",
          q="(u, v)"),
    _spec("elekes_grid", "Lines through grids.", lam="int", mu="int"),
    _spec("elekes_degree_d", "Degree-d lines-through-grids analogue.", lam="int", mu="int", d="int"),
    _spec("valtr_grid", "Parabolas through a thin grid.", lam="int"),
    _spec("cartesian_saturation", "Cartesian F with every pair incident.", gamma="Polynomial in x",
          kappa="Polynomial in s", n="int"),
    _spec("generic_diagonal", "Diagonal plane with generic points.", n="int", seed="int"),
    _spec("integer_grid", "Unit distances in an m x m grid.", m="int"),
    _spec("arithmetic_progression", "Vector sums of a progression.", n="int"),
    _spec("random_polynomial", "Seeded random polynomial.", rng="numpy Generator", variables="names",
          degree="int"),
    _spec("random_squarefree", "Seeded random squarefree polynomial.", rng="numpy Generator",
          variables="names", degree="int"),
    _spec("parse_polynomial", "Polynomial from grammar text.", text="str"),
    _spec("load_points", "PointSet from a `u,v` CSV file.", path="path"),
    _spec("write_points", "PointSet to a `u,v` CSV file.", path="path", points="PointSet"),
]

# Operation registry for dynamic calling
OPERATION_REGISTRY: Dict[str, Callable[..., Any]] = {
    "poly_arith": poly_arith,
    "evaluate": evaluate,
    "divide_single": divide_single,
    "gcd_multivariate": gcd_multivariate,
    "squarefree_part": squarefree_part,
    "coefficient_decompose": coefficient_decompose,
    "cartesian_test": cartesian_test,
    "alon_1d_test": alon_1d_test,
    "self_cartesian_test": self_cartesian_test,
    "trivial_cartesian_probe": trivial_cartesian_probe,
    "degenerate_points": degenerate_points,
    "fit_vanishing_curve": fit_vanishing_curve,
    "grid_witness_to_cartesian": grid_witness_to_cartesian,
    "specialize": specialize,
    "count_intersections": count_intersections,
    "brute_force_count": brute_force_count,
    "curve_incidence_split": curve_incidence_split,
    "incidence_graph": incidence_graph,
    "kst_free_check": kst_free_check,
    "partition_rich": partition_rich,
    "repeated_values": repeated_values,
    "distinct_values": distinct_values,
    "map_values": map_values,
    "fiber_probe": fiber_probe,
    "elekes_grid": elekes_grid,
    "elekes_degree_d": elekes_degree_d,
    "valtr_grid": valtr_grid,
    "cartesian_saturation": cartesian_saturation,
    "generic_diagonal": generic_diagonal,
    "integer_grid": integer_grid,
    "arithmetic_progression": arithmetic_progression,
    "random_polynomial": random_polynomial,
    "random_squarefree": random_squarefree,
    "parse_polynomial": parse_polynomial,
    "load_points": load_points,
    "write_points": write_points,
}


def execute_operation(operation_name: str, *args, **kwargs) -> Any:
    """
    Execute an operation from the registry.

    Args:
        operation_name: Name of the operation to execute
        *args, **kwargs: Arguments to pass to the operation

    Returns:
        Result of the operation

    Raises:
        ValueError: If the operation is not found in the registry
    """
    if operation_name not in OPERATION_REGISTRY:
        raise ValueError(f"Operation '{operation_name}' not found in registry")

    return OPERATION_REGISTRY[operation_name](*args, **kwargs)
