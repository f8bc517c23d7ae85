#!/usr/bin/env python3
"""
Partition of P (and of the rich part of Q) into pieces whose incidence
graphs contain no K_{2,T} and no K_{T,2}, T = 2*deg(F)*M.

Two points of P are joined when at least T curves C_q pass through both;
two points of Q are joined when their curves share at least T points of P.
A greedy colouring of each graph gives the parts.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional

import networkx as nx
from bitarray import bitarray

from algebra import Polynomial
from errors import BoundViolationError, UsageError, ZeroPolynomialError
from .incidence import IncidenceGraph, incidence_graph, kst_free_check
from .points import PointSet

logger = logging.getLogger(__name__)


def _rich_graph(rows: List[bitarray], vertices: List[int], threshold: int) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    for u, v in combinations(vertices, 2):
        if (rows[u] & rows[v]).count() >= threshold:
            graph.add_edge(u, v)
    return graph


def _colour_parts(graph: nx.Graph) -> List[List[int]]:
    if not len(graph):
        return []
    colouring = nx.greedy_color(graph, strategy="largest_first")
    parts: Dict[int, List[int]] = {}
    for vertex in sorted(colouring):
        parts.setdefault(colouring[vertex], []).append(vertex)
    return [parts[c] for c in sorted(parts)]


@dataclass
class RichPartition:
    """Parts of P, parts of Q minus Q0 and the poor set Q0, all as index lists."""

    threshold: int
    colour_bound: int
    parts_p: List[List[int]]
    parts_q: List[List[int]]
    poor: List[int]
    rich_edges: Dict[str, int] = field(default_factory=dict)
    verified_pairs: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "threshold": str(self.threshold),
            "colour_bound": str(self.colour_bound),
            "parts_P": [list(part) for part in self.parts_p],
            "parts_Q": [list(part) for part in self.parts_q],
            "poor_Q": list(self.poor),
            "rich_edges": {side: str(n) for side, n in self.rich_edges.items()},
            "verified_pairs": str(self.verified_pairs),
        }


def partition_rich(F: Polynomial, P: PointSet, Q: PointSet, M: int,
                   graph: Optional[IncidenceGraph] = None,
                   budget: Optional[int] = None) -> RichPartition:
    """
    Split P and Q so that every (P_i, Q_j) incidence graph avoids K_{2,T} and K_{T,2}.

    Args:
        F: nonzero polynomial of degree d
        P, Q: point sets
        M: richness parameter, T = 2*d*M
        graph: a precomputed incidence_graph(F, P, Q)
        budget: K_{s,t} search budget for the verification pass

    Returns:
        RichPartition

    Raises:
        ZeroPolynomialError: if F = 0
        BoundViolationError: if a sub-pair fails the K_{s,t} verification
    """
    if F.is_zero():
        raise ZeroPolynomialError("partition_rich")
    if M < 1:
        raise UsageError(f"M must be at least 1, got {M}")
    d = F.degree
    if M <= d * d:
        logger.warning("M=%d does not exceed d^2=%d; the part-count bound is not guaranteed", M, d * d)
    threshold = 2 * d * M
    graph = graph or incidence_graph(F, P, Q)

    poor = [q for q in range(graph.n_q) if graph.degree_q(q) < threshold]
    rich_q = [q for q in range(graph.n_q) if graph.degree_q(q) >= threshold]

    p_graph = _rich_graph(graph.p_rows, list(range(graph.n_p)), threshold)
    q_graph = _rich_graph(graph.q_rows, rich_q, threshold)
    result = RichPartition(
        threshold=threshold,
        colour_bound=d * M + 1,
        parts_p=_colour_parts(p_graph),
        parts_q=_colour_parts(q_graph),
        poor=poor,
        rich_edges={"P": p_graph.number_of_edges(), "Q": q_graph.number_of_edges()},
    )
    if len(result.parts_p) > result.colour_bound:
        logger.warning("P split into %d parts, above d*M+1=%d", len(result.parts_p), result.colour_bound)

    for i, part_p in enumerate(result.parts_p):
        for j, part_q in enumerate(result.parts_q):
            sub = graph.subgraph(part_p, part_q)
            for s, t in ((2, threshold), (threshold, 2)):
                found = kst_free_check(sub, s, t, budget)
                if found is not None:
                    logger.error("K_{%d,%d} in parts P[%d] x Q[%d]: %s", s, t, i, j, found.to_dict())
                    raise BoundViolationError(f"K_{{{s},{t}}} subgraphs in parts P[{i}] x Q[{j}]", 1, 0)
            result.verified_pairs += 1
    return result
