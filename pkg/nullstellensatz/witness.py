#!/usr/bin/env python3
"""
Result records of the Cartesian machinery.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from algebra import Polynomial


@dataclass(frozen=True)
class CartesianWitness:
    """
    A certified decomposition F = G*H + K*L with G in (x, y) and K in (s, t).

    `substituted` names the inputs ("G", "K") that were replaced by their
    squarefree parts before the test ran.
    """

    G: Polynomial
    K: Polynomial
    H: Polynomial
    L: Polynomial
    substituted: Tuple[str, ...] = ()

    def assemble(self) -> Polynomial:
        return self.G * self.H + self.K * self.L

    def certifies(self, F: Polynomial) -> bool:
        return self.assemble() == F

    def to_dict(self) -> Dict[str, Any]:
        return {
            "G": str(self.G),
            "K": str(self.K),
            "H": str(self.H),
            "L": str(self.L),
            "squarefree_substituted": list(self.substituted),
        }


@dataclass(frozen=True)
class FailureCertificate:
    """
    The coefficient R_ij of the remainder of F / G that K does not divide.

    `index` is (i, j) for the two-dimensional test and (i,) for the
    one-dimensional one; `remainder` is what is left of R_ij after dividing by K.
    """

    index: Tuple[int, ...]
    residue: Polynomial
    remainder: Polynomial
    G: Polynomial
    K: Polynomial
    tag: str = "coefficient-not-divisible"
    substituted: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": list(self.index),
            "residue": str(self.residue),
            "remainder": str(self.remainder),
            "G": str(self.G),
            "K": str(self.K),
            "tag": self.tag,
            "squarefree_substituted": list(self.substituted),
        }


@dataclass(frozen=True)
class CurveFit:
    """
    Outcome of fitting a low-degree curve through a point set.

    status is one of "fitted", "fitted_subset", "none", "not_attempted".
    `subset` holds the indices of the points the curve was fitted through
    when the subset fallback was used.
    """

    status: str
    curve: Optional[Polynomial] = None
    covered: int = 0
    subset: Tuple[int, ...] = ()

    @property
    def found(self) -> bool:
        return self.curve is not None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status, "covered": str(self.covered)}
        if self.curve is not None:
            data["curve"] = str(self.curve)
        if self.subset:
            data["subset"] = list(self.subset)
        return data


@dataclass
class GridWitnessResult:
    """Outcome of synthesising (G, K) from a grid I x J inside Z(F)."""

    status: str
    witness: Optional[CartesianWitness] = None
    coverage: Tuple[int, int] = (0, 0)
    attempts: int = 0
    fits: Dict[str, CurveFit] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status,
            "coverage": [str(self.coverage[0]), str(self.coverage[1])],
            "attempts": str(self.attempts),
            "fits": {side: fit.to_dict() for side, fit in sorted(self.fits.items())},
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data
