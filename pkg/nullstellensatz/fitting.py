#!/usr/bin/env python3
"""
Recovering (G, K) from a grid witness I x J contained in Z(F).

A curve of degree <= d through a point set is a nullspace vector of the
evaluation matrix of the monomials of degree <= d at the points. When |I|
exceeds d^2 the curves found this way share a component with C_q for every
q in J, so the fitted G (and dually K) feed straight into cartesian_test.
"""

import logging
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional, Tuple

import config
from algebra import GLOBAL_ORDER, XY, ST, Monomial, Polynomial, nullspace, reduced_row_echelon
from errors import GridNotContainedError, GridTooSmallError, UsageError, ZeroPolynomialError
from geometry.points import PointSet, format_point
from .cartesian import cartesian_test
from .witness import CartesianWitness, CurveFit, GridWitnessResult

logger = logging.getLogger(__name__)


def plane_monomials(degree: int, variables: Tuple[str, str] = XY) -> List[Monomial]:
    """Monomials of total degree <= degree in two variables, largest first."""
    u, v = variables
    monomials = [Monomial.of({u: i, v: j}) for i in range(degree + 1) for j in range(degree + 1 - i)]
    return GLOBAL_ORDER.sorted(monomials)


def _evaluation_row(point, monomials: List[Monomial], variables: Tuple[str, str]):
    u, v = variables
    return [point[0] ** m.exponent(u) * point[1] ** m.exponent(v) for m in monomials]


def _curve_through(points, degree: int, variables: Tuple[str, str]) -> Optional[Polynomial]:
    """Minimal-degree curve through all points, or None if none of degree <= `degree` exists."""
    for e in range(1, degree + 1):
        monomials = plane_monomials(e, variables)
        matrix = [_evaluation_row(p, monomials, variables) for p in points]
        basis = nullspace(matrix, width=len(monomials))
        if not basis:
            continue
        # Reduce the solution space; rows then have distinct leading monomials
        # and the first row carries the greatest one.
        rows, _ = reduced_row_echelon(basis)
        curve = Polynomial({m: c for m, c in zip(monomials, rows[0])}, variables)
        return curve.monic()
    return None


def _covered(curve: Polynomial, points: PointSet, variables: Tuple[str, str]) -> int:
    u, v = variables
    return sum(1 for p in points if not curve.evaluate({u: p[0], v: p[1]}))


def _subset_curves(points: PointSet, degree: int, variables: Tuple[str, str]) -> Iterator[CurveFit]:
    """Distinct curves through subsets of size |I| - (d-1)^2, in enumeration order."""
    dropped = (degree - 1) ** 2
    keep = len(points) - dropped
    if dropped == 0 or keep < 1:
        return
    seen = set()
    for indices in combinations(range(len(points)), keep):
        curve = _curve_through([points[i] for i in indices], degree, variables)
        if curve is None or curve in seen:
            continue
        seen.add(curve)
        yield CurveFit("fitted_subset", curve, _covered(curve, points, variables), indices)


def _subset_count(points: PointSet, degree: int) -> int:
    return comb(len(points), (degree - 1) ** 2)


def fit_vanishing_curve(points: PointSet, d: int, variables: Tuple[str, str] = XY,
                        allow_subset: bool = False, subset_budget: Optional[int] = None) -> CurveFit:
    """
    Fit a nonzero curve of degree <= d through a point set.

    Among all solutions the minimal total degree is taken, then the greatest
    leading monomial of the reduced solution basis under the global order,
    then the curve is made monic.

    Args:
        points: the point set I
        d: degree bound, at least 1
        variables: coordinate names of the curve, (x, y) or (s, t)
        allow_subset: when no curve passes through all of I, search subsets of
            size |I| - (d-1)^2
        subset_budget: cap on the number of subsets (config.SUBSET_BUDGET)

    Returns:
        CurveFit with status fitted, fitted_subset, none or not_attempted
    """
    if d < 1:
        raise UsageError(f"curve degree must be at least 1, got {d}")
    curve = _curve_through(list(points), d, variables)
    if curve is not None:
        return CurveFit("fitted", curve, len(points), tuple(range(len(points))))
    if not allow_subset or d == 1:
        return CurveFit("none")
    budget = subset_budget if subset_budget is not None else config.SUBSET_BUDGET
    if _subset_count(points, d) > budget:
        logger.info("subset search over C(%d, %d) subsets exceeds budget %d",
                    len(points), (d - 1) ** 2, budget)
        return CurveFit("not_attempted")
    for fit in _subset_curves(points, d, variables):
        return fit
    return CurveFit("none")


def _candidate_curves(points: PointSet, d: int, variables: Tuple[str, str], budget: int,
                      direct: CurveFit) -> Tuple[CurveFit, List[CurveFit]]:
    candidates = [direct] if direct.found else []
    if d > 1:
        if _subset_count(points, d) <= budget:
            candidates.extend(fit for fit in _subset_curves(points, d, variables)
                              if fit.curve != direct.curve)
        elif not direct.found:
            direct = CurveFit("not_attempted")
    return direct, candidates


def check_grid(F: Polynomial, I: PointSet, J: PointSet):
    """
    Verify |I|, |J| > d^2 and I x J inside Z(F).

    Raises:
        GridTooSmallError, GridNotContainedError
    """
    threshold = F.degree ** 2
    if len(I) <= threshold or len(J) <= threshold:
        raise GridTooSmallError((len(I), len(J)), threshold)
    for q in J:
        curve = F.substitute({"s": q[0], "t": q[1]})
        for p in I:
            value = curve.evaluate({"x": p[0], "y": p[1]})
            if value:
                raise GridNotContainedError(format_point(p), format_point(q), value)


def grid_witness_to_cartesian(F: Polynomial, I: PointSet, J: PointSet,
                              subset_budget: Optional[int] = None) -> GridWitnessResult:
    """
    Synthesise a CartesianWitness from a grid I x J inside Z(F).

    G is fitted through I in (x, y) and K through J in (s, t); the direct fits
    are tried first, then curves through large subsets, and the first pair
    accepted by cartesian_test wins.

    Raises:
        ZeroPolynomialError: if F = 0
        GridTooSmallError: if |I| or |J| <= d^2
        GridNotContainedError: if some F(p, q) != 0
    """
    if F.is_zero():
        raise ZeroPolynomialError("grid_witness_to_cartesian")
    d = F.degree
    check_grid(F, I, J)
    budget = subset_budget if subset_budget is not None else config.SUBSET_BUDGET

    direct_g = fit_vanishing_curve(I, d, XY)
    direct_k = fit_vanishing_curve(J, d, ST)
    result = GridWitnessResult("failed", fits={"G": direct_g, "K": direct_k})

    tried = set()
    if direct_g.found and direct_k.found:
        tried.add((direct_g.curve, direct_k.curve))
        outcome = _attempt(F, direct_g, direct_k, result)
        if outcome is not None:
            return _success(result, outcome, I, J)

    fit_g, g_candidates = _candidate_curves(I, d, XY, budget, direct_g)
    fit_k, k_candidates = _candidate_curves(J, d, ST, budget, direct_k)
    for g_fit in g_candidates:
        for k_fit in k_candidates:
            if (g_fit.curve, k_fit.curve) in tried:
                continue
            tried.add((g_fit.curve, k_fit.curve))
            outcome = _attempt(F, g_fit, k_fit, result)
            if outcome is not None:
                result.fits = {"G": g_fit, "K": k_fit}
                return _success(result, outcome, I, J)

    result.fits = {"G": fit_g, "K": fit_k}
    logger.warning("no Cartesian witness recovered from a %dx%d grid for F = %s after %d attempts",
                   len(I), len(J), F, result.attempts)
    return result


def _attempt(F: Polynomial, g_fit: CurveFit, k_fit: CurveFit,
             result: GridWitnessResult) -> Optional[CartesianWitness]:
    result.attempts += 1
    outcome = cartesian_test(F, g_fit.curve, k_fit.curve)
    if isinstance(outcome, CartesianWitness):
        return outcome
    return None


def _success(result: GridWitnessResult, witness: CartesianWitness,
             I: PointSet, J: PointSet) -> GridWitnessResult:
    result.status = "found"
    result.witness = witness
    result.coverage = (_covered(witness.G, I, XY), _covered(witness.K, J, ST))
    return result
