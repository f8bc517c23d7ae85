#!/usr/bin/env python3
"""
Bipartite incidence graphs between a point set P and the curves C_q, q in Q,
and the exhaustive K_{s,t} search over them.

Adjacency is held twice as bitarray rows: for every p the set of q with
p on C_q, and for every q the set of p on C_q.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from bitarray import bitarray
from bitarray.util import zeros

import config
from algebra import Polynomial
from errors import ComplexityGuardError, UsageError, ZeroPolynomialError
from .counting import count_intersections
from .curves import Side, SpecializedCurve, curve_classes, specialize
from .points import PointSet

logger = logging.getLogger(__name__)


def _members(row: bitarray) -> List[int]:
    return [index for index, bit in enumerate(row) if bit]


class IncidenceGraph:
    """
    Bipartite graph with P-vertices 0..n_p-1 and Q-vertices 0..n_q-1.

    `duplicate_classes` groups Q-vertices whose curves coincide and
    `degenerate` lists Q-vertices whose specialisation is the whole plane.
    """

    def __init__(self, p_rows: Sequence[bitarray], n_q: int,
                 duplicate_classes: Optional[List[List[int]]] = None,
                 degenerate: Optional[List[int]] = None,
                 labels: Tuple[str, str] = ("P", "Q")):
        self.n_p = len(p_rows)
        self.n_q = n_q
        self.p_rows: List[bitarray] = [bitarray(row) for row in p_rows]
        self.q_rows: List[bitarray] = [zeros(self.n_p) for _ in range(n_q)]
        for p, row in enumerate(self.p_rows):
            if len(row) != n_q:
                raise ValueError(f"row {p} has length {len(row)}, expected {n_q}")
            for q in _members(row):
                self.q_rows[q][p] = 1
        self.duplicate_classes = duplicate_classes or []
        self.degenerate = degenerate or []
        self.labels = labels

    @classmethod
    def from_incidences(cls, incidences: Sequence[Sequence[int]], n_p: int, **kwargs) -> "IncidenceGraph":
        """Build from per-q lists of incident P indices."""
        rows = [zeros(len(incidences)) for _ in range(n_p)]
        for q, members in enumerate(incidences):
            for p in members:
                rows[p][q] = 1
        return cls(rows, len(incidences), **kwargs)

    def has_edge(self, p: int, q: int) -> bool:
        return bool(self.p_rows[p][q])

    def edges(self) -> Iterator[Tuple[int, int]]:
        for p, row in enumerate(self.p_rows):
            for q in _members(row):
                yield p, q

    def edge_count(self) -> int:
        return sum(row.count() for row in self.p_rows)

    def degree_p(self, p: int) -> int:
        return self.p_rows[p].count()

    def degree_q(self, q: int) -> int:
        return self.q_rows[q].count()

    def transpose(self) -> "IncidenceGraph":
        """The same incidences read from the Q side."""
        return IncidenceGraph(self.q_rows, self.n_p, labels=(self.labels[1], self.labels[0]))

    def subgraph(self, p_indices: Sequence[int], q_indices: Sequence[int]) -> "IncidenceGraph":
        rows = []
        for p in p_indices:
            row = zeros(len(q_indices))
            for position, q in enumerate(q_indices):
                row[position] = self.p_rows[p][q]
            rows.append(row)
        return IncidenceGraph(rows, len(q_indices), labels=self.labels)

    def duplicate_vertex(self, side: str, index: int) -> "IncidenceGraph":
        """
        Append a copy of a vertex, so that curves (or points) form a multiset.

        Args:
            side: "P" or "Q"
            index: vertex to copy
        """
        if side == "P":
            return IncidenceGraph(self.p_rows + [bitarray(self.p_rows[index])], self.n_q,
                                  self.duplicate_classes, self.degenerate, self.labels)
        if side == "Q":
            rows = [row + bitarray([row[index]]) for row in self.p_rows]
            classes = [list(c) for c in self.duplicate_classes]
            for c in classes:
                if index in c:
                    c.append(self.n_q)
                    break
            else:
                classes.append([index, self.n_q])
            degenerate = self.degenerate + ([self.n_q] if index in self.degenerate else [])
            return IncidenceGraph(rows, self.n_q + 1, classes, degenerate, self.labels)
        raise UsageError(f"side must be 'P' or 'Q', got '{side}'")

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from((("P", p) for p in range(self.n_p)), bipartite=0)
        graph.add_nodes_from((("Q", q) for q in range(self.n_q)), bipartite=1)
        graph.add_edges_from((("P", p), ("Q", q)) for p, q in self.edges())
        return graph

    def summary(self) -> Dict[str, Any]:
        graph = self.to_networkx()
        return {
            "edges": str(self.edge_count()),
            "vertices": {"P": str(self.n_p), "Q": str(self.n_q)},
            "max_degree": {
                "P": str(max((self.degree_p(p) for p in range(self.n_p)), default=0)),
                "Q": str(max((self.degree_q(q) for q in range(self.n_q)), default=0)),
            },
            "components": str(nx.number_connected_components(graph)) if len(graph) else "0",
            "isolated": str(nx.number_of_isolates(graph)),
            "duplicate_classes": [list(c) for c in self.duplicate_classes],
            "degenerate": list(self.degenerate),
        }


def incidence_graph(F: Polynomial, P: PointSet, Q: PointSet) -> IncidenceGraph:
    """
    Incidence graph of P against the curves C_q.

    Raises:
        ZeroPolynomialError: if F = 0
    """
    if F.is_zero():
        raise ZeroPolynomialError("incidence_graph")
    report = count_intersections(F, P, Q)
    curves: List[SpecializedCurve] = [specialize(F, q, Side.SECOND) for q in Q]
    classes, degenerate = curve_classes(curves)
    if classes:
        logger.info("%d groups of points of Q define the same curve", len(classes))
    return IncidenceGraph.from_incidences(report.incidences, len(P), duplicate_classes=classes,
                                          degenerate=degenerate)


def dual_incidence_graph(F: Polynomial, P: PointSet, Q: PointSet) -> IncidenceGraph:
    """Incidence graph of Q against the dual curves C_p*, p in P."""
    if F.is_zero():
        raise ZeroPolynomialError("dual_incidence_graph")
    swapped = F.rename({"x": "s", "y": "t", "s": "x", "t": "y"})
    report = count_intersections(swapped, Q, P)
    curves = [specialize(F, p, Side.FIRST) for p in P]
    classes, degenerate = curve_classes(curves)
    return IncidenceGraph.from_incidences(report.incidences, len(Q), duplicate_classes=classes,
                                          degenerate=degenerate, labels=("Q", "P"))


@dataclass(frozen=True)
class KstWitness:
    """s points of P and t curves of Q, all mutually incident."""

    p_indices: Tuple[int, ...]
    q_indices: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return {"P": list(self.p_indices), "Q": list(self.q_indices)}


def _search(rows: List[bitarray], candidates: List[int], size: int, need: int,
            width: int) -> Optional[Tuple[Tuple[int, ...], List[int]]]:
    """Depth-first search for `size` rows whose intersection has >= `need` members."""
    def extend(start: int, chosen: List[int], common: bitarray):
        if len(chosen) == size:
            return tuple(chosen), _members(common)[:need]
        for position in range(start, len(candidates)):
            row = candidates[position]
            narrowed = common & rows[row]
            if narrowed.count() >= need:
                found = extend(position + 1, chosen + [row], narrowed)
                if found:
                    return found
        return None

    full = zeros(width)
    full.setall(1)
    return extend(0, [], full)


def kst_free_check(graph: IncidenceGraph, s: int, t: int,
                   budget: Optional[int] = None) -> Optional[KstWitness]:
    """
    Look for K_{s,t}: s points of P lying together on t curves of Q.

    The cheaper side (after dropping vertices of too small degree) is
    enumerated; the other side is intersected as bitsets.

    Returns:
        A KstWitness, or None if the graph is K_{s,t}-free

    Raises:
        UsageError: if s or t < 1
        ComplexityGuardError: if the enumeration exceeds the budget
    """
    if s < 1 or t < 1:
        raise UsageError(f"s and t must be at least 1, got s={s}, t={t}")
    budget = budget if budget is not None else config.KST_BUDGET
    p_candidates = [p for p in range(graph.n_p) if graph.degree_p(p) >= t]
    q_candidates = [q for q in range(graph.n_q) if graph.degree_q(q) >= s]
    if len(p_candidates) < s or len(q_candidates) < t:
        return None

    p_cost = comb(len(p_candidates), s) * s
    q_cost = comb(len(q_candidates), t) * t
    if min(p_cost, q_cost) > budget:
        raise ComplexityGuardError(f"K_{{{s},{t}}} search", min(p_cost, q_cost), budget)

    if p_cost <= q_cost:
        found = _search(graph.p_rows, p_candidates, s, t, graph.n_q)
        if found:
            return KstWitness(found[0], tuple(found[1]))
    else:
        found = _search(graph.q_rows, q_candidates, t, s, graph.n_p)
        if found:
            return KstWitness(tuple(found[1]), found[0])
    return None
