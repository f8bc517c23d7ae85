"""
Constructive Cartesian machinery: decomposition tests with witnesses,
degenerate specialisations and grid-witness synthesis.
"""

from .witness import CartesianWitness, CurveFit, FailureCertificate, GridWitnessResult
from .cartesian import (alon_1d_test, cartesian_test, degenerate_points, self_cartesian_test,
                        trivial_cartesian_probe)
from .fitting import check_grid, fit_vanishing_curve, grid_witness_to_cartesian, plane_monomials

__all__ = [
    "CartesianWitness", "CurveFit", "FailureCertificate", "GridWitnessResult",
    "alon_1d_test", "cartesian_test", "degenerate_points", "self_cartesian_test",
    "trivial_cartesian_probe",
    "check_grid", "fit_vanishing_curve", "grid_witness_to_cartesian", "plane_monomials",
]
