#!/usr/bin/env python3
"""
Exact counting of |X n (P x Q)| for X = Z(F) or X = Z(F1, F2).
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import config
from algebra import Polynomial, exact_divide, gcd_multivariate, point_assignment
from errors import UsageError, ZeroPolynomialError
from workflow import ChunkWorkflow
from .envelopes import Envelope, incidence_envelopes
from .kernel import CountKernel, run_chunk
from .points import PointSet, format_point

logger = logging.getLogger(__name__)

System = Union[Polynomial, Sequence[Polynomial]]


def as_system(system: System, operation: str = "count_intersections") -> List[Polynomial]:
    polys = [system] if isinstance(system, Polynomial) else list(system)
    if not 1 <= len(polys) <= 2:
        raise UsageError(f"{operation} takes one or two polynomials, got {len(polys)}")
    for F in polys:
        if F.is_zero():
            raise ZeroPolynomialError(operation)
    return polys


@dataclass
class IncidenceReport:
    """Exact count with its envelopes and diagnostics."""

    count: int
    n_p: int
    n_q: int
    system: List[str]
    envelopes: List[Envelope] = field(default_factory=list)
    pairs: Optional[List[Tuple[int, int]]] = None
    degenerate: List[int] = field(default_factory=list)
    coprime: Optional[bool] = None
    common_factor: Optional[str] = None
    distinct_curves: int = 0
    extra: Dict[str, Any] = field(default_factory=dict)
    incidences: List[List[int]] = field(default_factory=list, repr=False)

    def envelope(self, name: str) -> Envelope:
        return next(e for e in self.envelopes if e.name == name)

    def to_dict(self, P: Optional[PointSet] = None, Q: Optional[PointSet] = None) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "count": str(self.count),
            "sizes": {"P": str(self.n_p), "Q": str(self.n_q)},
            "system": list(self.system),
            "envelopes": {e.name: e.to_dict() for e in self.envelopes},
            "distinct_curves": str(self.distinct_curves),
            "degenerate": [format_point(Q[i]) if Q is not None else i for i in self.degenerate],
        }
        if self.coprime is not None:
            data["coprime"] = self.coprime
            data["common_factor"] = self.common_factor
        if self.pairs is not None:
            data["pairs"] = [[p, q] for p, q in self.pairs]
        data.update(self.extra)
        return data


def count_intersections(system: System, P: PointSet, Q: PointSet, emit_pairs: bool = False,
                        workflow: Optional[ChunkWorkflow] = None,
                        chunk_size: Optional[int] = None) -> IncidenceReport:
    """
    Count pairs (p, q) in P x Q at which every system polynomial vanishes.

    Args:
        system: F, or (F1, F2)
        P: points for (x, y)
        Q: points for (s, t)
        emit_pairs: keep the sorted list of incident index pairs
        workflow: chunk executor (sequential by default)
        chunk_size: Q classes per chunk (config.CHUNK_SIZE)

    Returns:
        IncidenceReport

    Raises:
        ZeroPolynomialError: if a system polynomial is zero
    """
    polys = as_system(system)
    workflow = workflow or ChunkWorkflow("sequential", 1)
    kernel = CountKernel(polys, P, Q)
    results = workflow.map(run_chunk, kernel.tasks(chunk_size or config.CHUNK_SIZE))
    incidences = kernel.expand(results)

    count = sum(len(row) for row in incidences)
    degenerate_classes = set(kernel.degenerate_classes())
    degenerate = sorted(q for c in degenerate_classes for q in kernel.class_members[c])
    report = IncidenceReport(
        count=count,
        n_p=len(P),
        n_q=len(Q),
        system=[str(F) for F in polys],
        envelopes=incidence_envelopes(len(P), len(Q), count),
        degenerate=degenerate,
        distinct_curves=len(kernel.class_keys) - len(degenerate_classes),
        incidences=incidences,
    )
    if emit_pairs:
        report.pairs = sorted((p, q) for q, row in enumerate(incidences) for p in row)
    if len(polys) == 2:
        common = gcd_multivariate(polys[0], polys[1])
        report.coprime = common.is_constant()
        report.common_factor = str(common)
        if not report.coprime:
            logger.info("system polynomials share the factor %s", common)
    return report


def brute_force_count(system: System, P: PointSet, Q: PointSet) -> int:
    """Reference double loop over evaluate()."""
    polys = as_system(system, "brute_force_count")
    return sum(1 for p in P for q in Q
               if all(not F.evaluate(point_assignment(p, q)) for F in polys))


@dataclass
class CurveSplit:
    """Incidences of P inside Z(G) with Q split by whether C_q contains Z(G)."""

    containing: List[int]
    other: List[int]
    containing_incidences: int
    other_incidences: int
    bezout_bound: int
    suspects: List[int]

    def to_dict(self, Q: Optional[PointSet] = None) -> Dict[str, Any]:
        def show(indices):
            return [format_point(Q[i]) if Q is not None else i for i in indices]
        return {
            "containing": {"size": str(len(self.containing)), "incidences": str(self.containing_incidences)},
            "other": {"size": str(len(self.other)), "incidences": str(self.other_incidences)},
            "bezout_bound": str(self.bezout_bound),
            "suspects": show(self.suspects),
        }


def curve_incidence_split(F: Polynomial, G: Polynomial, P: PointSet, Q: PointSet) -> CurveSplit:
    """
    For P inside Z(G), split Q into the q with G | F(., ., q) and the rest.

    Points of the second part meet Z(G) in at most deg(F)*deg(G) points
    unless G and C_q share a component; q exceeding that are reported as
    suspects.

    Raises:
        UsageError: if some point of P is not on Z(G)
    """
    if F.is_zero():
        raise ZeroPolynomialError("curve_incidence_split")
    G.check_scope("G", ("x", "y"))
    for p in P:
        if G.evaluate({"x": p[0], "y": p[1]}):
            raise UsageError(f"point {format_point(p)} is not on Z(G)")
    report = count_intersections(F, P, Q)
    bound = F.degree * G.degree
    containing, other, suspects = [], [], []
    for q_index, q in enumerate(Q):
        curve = F.substitute({"s": q[0], "t": q[1]})
        if curve.is_zero() or exact_divide(curve, G) is not None:
            containing.append(q_index)
        else:
            other.append(q_index)
            if len(report.incidences[q_index]) > bound:
                suspects.append(q_index)
    return CurveSplit(
        containing=containing,
        other=other,
        containing_incidences=sum(len(report.incidences[q]) for q in containing),
        other_incidences=sum(len(report.incidences[q]) for q in other),
        bezout_bound=bound,
        suspects=suspects,
    )
