#!/usr/bin/env python3
"""
Instance generators with exact predicted counts.

Each generator is a pure function of its parameters (and seed), so the same
arguments always give the same instance.
"""

import logging
from fractions import Fraction
from typing import Optional, Union

import numpy as np

import config
from algebra import GaussRational, Polynomial, S, T, X, Y
from errors import UsageError
from geometry import PointSet
from nullstellensatz import CartesianWitness
from .instance import IMAGE, ConstructionInstance
from .randomized import random_polynomial

logger = logging.getLogger(__name__)


def _require_positive(**values: int):
    for name, value in values.items():
        if value < 1:
            raise UsageError(f"{name} must be at least 1, got {value}")


def _grid(width: int, height: int, label: str) -> PointSet:
    return PointSet(((i, j) for i in range(1, width + 1) for j in range(1, height + 1)), label)


def elekes_count(lam: int, mu: int) -> int:
    """sum over i1 <= lam, i2 <= mu of max(0, lam*mu - i1*i2)."""
    return sum(max(0, lam * mu - i1 * i2) for i1 in range(1, lam + 1) for i2 in range(1, mu + 1))


def elekes_grid(lam: int, mu: int) -> ConstructionInstance:
    """
    F = xs - y + t with P = [lam] x [lam*mu] and Q = [mu] x [lam*mu].

    (i1, j1) lies on the line of (i2, j2) when j1 = i1*i2 + j2.
    """
    _require_positive(lam=lam, mu=mu)
    return ConstructionInstance(
        name="elekes_grid",
        F=X * S - Y + T,
        P=_grid(lam, lam * mu, "P"),
        Q=_grid(mu, lam * mu, "Q"),
        predicted_count=elekes_count(lam, mu),
        provenance="lines y = a*x + b through a rectangular grid",
        parameters={"lambda": lam, "mu": mu},
    )


def elekes_degree_d(lam: int, mu: int, d: int) -> ConstructionInstance:
    """
    Degree-d variant F = xs + y^d - t^d on points (i, j^(1/d)).

    The points are stored through the surrogate coordinate Y = y^d, which
    turns the relation into i1*i2 + j1 - j2 = 0 on integer points. The
    instance polynomial is therefore xs + y - t; the degree-d polynomial is
    kept in the parameters.
    """
    _require_positive(lam=lam, mu=mu, d=d)
    source = X * S + Y ** d - T ** d
    return ConstructionInstance(
        name="elekes_degree_d",
        F=X * S + Y - T,
        P=_grid(lam, lam * mu, "P"),
        Q=_grid(mu, lam * mu, "Q"),
        predicted_count=elekes_count(lam, mu),
        provenance=f"{source} on (i, j^(1/{d})), counted through Y = y^{d}",
        parameters={"lambda": lam, "mu": mu, "d": d, "source": str(source)},
    )


def valtr_count(lam: int) -> int:
    """Pairs with t = (x - s)^2 + y inside [1, 2*lam^2], summed over x, s."""
    top = 2 * lam * lam
    return sum(max(0, top - (x - s) ** 2) for x in range(1, lam + 1) for s in range(1, lam + 1))


def valtr_grid(lam: int) -> ConstructionInstance:
    """F = (x - s)^2 + y - t with P = Q = [lam] x [2*lam^2]."""
    _require_positive(lam=lam)
    points = _grid(lam, 2 * lam * lam, "P")
    return ConstructionInstance(
        name="valtr_grid",
        F=(X - S) ** 2 + Y - T,
        P=points,
        Q=points.relabel("Q"),
        predicted_count=valtr_count(lam),
        provenance="parabolas t = (x - s)^2 + y through a thin grid",
        parameters={"lambda": lam},
    )


def _graph_function(poly: Polynomial, variable: str, name: str) -> Polynomial:
    poly.check_scope(name, (variable,))
    if not poly.is_zero() and poly.degree > 4:
        raise UsageError(f"{name} must have degree at most 4, got {poly.degree}")
    return poly


def cartesian_saturation(gamma: Polynomial, kappa: Polynomial, n: int,
                         seed: Optional[int] = None, H: Optional[Polynomial] = None,
                         L: Optional[Polynomial] = None, degree: int = 2) -> ConstructionInstance:
    """
    F = G*H + K*L with G = y - gamma(x) and K = t - kappa(s).

    P takes the n points of Z(G) with x = 1..n and Q the n points of Z(K)
    with s = 1..n, so every pair is incident. H and L are drawn at random
    (degree <= `degree`) unless given.
    """
    _require_positive(n=n)
    gamma = _graph_function(Polynomial.coerce(gamma), "x", "gamma")
    kappa = _graph_function(Polynomial.coerce(kappa), "s", "kappa")
    seed = config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    G = Y - gamma
    K = T - kappa
    H = H if H is not None else random_polynomial(rng, ("x", "y", "s", "t"), degree)
    L = L if L is not None else random_polynomial(rng, ("x", "y", "s", "t"), degree)
    F = G * H + K * L
    while F.is_zero():
        logger.debug("G*H + K*L cancelled, redrawing L")
        L = random_polynomial(rng, ("x", "y", "s", "t"), degree)
        F = G * H + K * L

    P = PointSet(((k, gamma.evaluate({"x": k})) for k in range(1, n + 1)), "P")
    Q = PointSet(((k, kappa.evaluate({"s": k})) for k in range(1, n + 1)), "Q")
    return ConstructionInstance(
        name="cartesian_saturation",
        F=F,
        P=P,
        Q=Q,
        predicted_count=n * n,
        provenance=f"P on Z({G}), Q on Z({K})",
        parameters={"gamma": str(gamma), "kappa": str(kappa), "n": n, "seed": seed},
        witness=CartesianWitness(G, K, H, L),
    )


def generic_diagonal(n: int, seed: Optional[int] = None) -> ConstructionInstance:
    """
    X = Z(x - s, y - t) with n random distinct points r = (a, b) and
    P = Q = {r}; the incidences are exactly the n diagonal pairs.
    """
    _require_positive(n=n)
    seed = config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    radius = 10 * n + 10
    points, seen = [], set()
    while len(points) < n:
        a, b, denominator = (int(v) for v in rng.integers((-radius, -radius, 1), (radius + 1, radius + 1, 4)))
        point = (Fraction(a, denominator), Fraction(b, denominator))
        if point not in seen:
            seen.add(point)
            points.append(point)
    P = PointSet(points, "P")
    return ConstructionInstance(
        name="generic_diagonal",
        F=X - S,
        F2=Y - T,
        P=P,
        Q=P.relabel("Q"),
        predicted_count=n,
        provenance="diagonal of the plane, generic points",
        parameters={"n": n, "seed": seed},
    )


def integer_grid(m: int) -> ConstructionInstance:
    """Unit distances in the m x m grid: 4*m*(m - 1) ordered pairs."""
    _require_positive(m=m)
    points = _grid(m, m, "P")
    return ConstructionInstance(
        name="integer_grid",
        F=(X - S) ** 2 + (Y - T) ** 2 - 1,
        P=points,
        Q=points.relabel("Q"),
        predicted_count=4 * m * (m - 1),
        provenance="unit distances between grid points",
        parameters={"m": m},
    )


def arithmetic_progression(n: int, step: Union[int, Fraction] = 1) -> ConstructionInstance:
    """P = {(k, k)}; the vector sum (x + s, y + t) takes 2n - 1 values on P x P."""
    _require_positive(n=n)
    step = GaussRational.coerce(step)
    points = PointSet(((step * k, step * k) for k in range(1, n + 1)), "P")
    return ConstructionInstance(
        name="arithmetic_progression",
        F=X + S,
        F2=Y + T,
        P=points,
        Q=points.relabel("Q"),
        predicted_count=2 * n - 1,
        provenance="vector sums of an arithmetic progression",
        measure=IMAGE,
        parameters={"n": n, "step": str(step)},
    )
