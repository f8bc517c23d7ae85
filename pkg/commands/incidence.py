#!/usr/bin/env python3
"""
Commands over incidence counting: count, incidence, partition and values.
"""

from typing import Any, Dict

from cli.pointio import write_pairs
from errors import UsageError
from geometry import (brute_force_count, count_intersections, distinct_values, incidence_graph, kst_free_check,
                      map_values, partition_rich, repeated_values)
from .base_command import EXIT_MATHEMATICAL, EXIT_OK, BaseCommand
from .inputs import CommandInputs


class CountCommand(BaseCommand):
    """Exact |X n (P x Q)| with envelope ratios."""

    explanation = (
        "Counts the pairs (p, q) in P x Q at which F (or both F1 and F2) vanish. "
        "For curves without a Cartesian structure the count is at most of order "
        "|P|^(2/3)*|Q|^(2/3) + |P| + |Q|, and for a two-dimensional X of order "
        "|P| + |Q|; the report gives the ratio of the count to each envelope."
    )

    def __init__(self):
        super().__init__(name="count", description="Count incidences |X n (P x Q)|")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        system = inputs.system()
        P, Q = inputs.points("P"), inputs.points("Q", fallback="P")
        emit_pairs = inputs.options.get("emit_pairs")
        self.notify_progress(f"counting over {len(P)} x {len(Q)} pairs")
        report = count_intersections(system, P, Q, emit_pairs=bool(emit_pairs), workflow=inputs.workflow(),
                                     chunk_size=inputs.option_int("chunk_size", minimum=1))
        if emit_pairs:
            write_pairs(emit_pairs, report.pairs, P, Q)
        result = report.to_dict(P, Q)
        result.pop("pairs", None)
        if inputs.options.get("check"):
            oracle = brute_force_count(system, P, Q)
            result["brute_force"] = {"count": str(oracle), "agrees": oracle == report.count}
        if inputs.experiment.construct:
            instance = inputs.instance()
            result["predicted_count"] = str(instance.predicted_count)
            result["matches_prediction"] = instance.predicted_count == report.count
        return result

    def exit_code(self, result: Dict[str, Any]) -> int:
        agrees = result.get("brute_force", {}).get("agrees", True)
        return EXIT_OK if agrees and result.get("matches_prediction", True) else EXIT_MATHEMATICAL


class IncidenceCommand(BaseCommand):
    """Incidence graph of P against the curves C_q and its K_{s,t} search."""

    explanation = (
        "The bipartite graph joining p to q when p lies on C_q. Bounds of "
        "Szemeredi-Trotter type need it to avoid K_{s,t}: s points lying together "
        "on t curves. Points of Q defining the same curve are grouped, and q with "
        "C_q equal to the whole plane are listed."
    )

    def __init__(self):
        super().__init__(name="incidence", description="Incidence graph and K_{s,t} search")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        F = inputs.polynomial("F")
        P, Q = inputs.points("P"), inputs.points("Q", fallback="P")
        s = inputs.option_int("s", 2, minimum=1)
        t = inputs.option_int("t", 2, minimum=1)
        graph = incidence_graph(F, P, Q)
        self.notify_progress(f"searching for K_{{{s},{t}}}")
        witness = kst_free_check(graph, s, t, inputs.option_int("budget", minimum=1))
        result = {"graph": graph.summary(), "s": str(s), "t": str(t), "kst": None}
        if witness is not None:
            result["kst"] = {
                "P": [f"({P[i][0]}, {P[i][1]})" for i in witness.p_indices],
                "Q": [f"({Q[j][0]}, {Q[j][1]})" for j in witness.q_indices],
            }
            self.notify_finding(f"K_{{{s},{t}}} found", witness.to_dict())
        return result


class PartitionCommand(BaseCommand):
    """Rich-pair partition of P and Q."""

    explanation = (
        "With T = 2*deg(F)*M, two points of P are joined when at least T curves "
        "C_q pass through both. A greedy colouring splits P into parts, and "
        "likewise the points of Q whose curves hold at least T points of P; the "
        "remaining q form the poor set Q0. Every pair of parts is checked to be "
        "free of K_{2,T} and K_{T,2}. Taking M > deg(F)^2 keeps the number of "
        "parts at most deg(F)*M + 1."
    )

    def __init__(self):
        super().__init__(name="partition", description="Partition P and Q by rich pairs")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        F = inputs.polynomial("F")
        P, Q = inputs.points("P"), inputs.points("Q", fallback="P")
        M = inputs.option_int("M", minimum=1)
        if M is None:
            raise UsageError("missing --M")
        return partition_rich(F, P, Q, M, budget=inputs.option_int("budget", minimum=1)).to_dict()


class ValuesCommand(BaseCommand):
    """Repeated values, distinct values and the values of a map (F1, F2)."""

    explanation = (
        "repeated: pairs (p, q) in P x P with F(p, q) = a, of order at most "
        "|P|^(4/3) unless F - a is Cartesian. distinct: |F(P x P)|, of order at "
        "least |P|^(2/3) in the same situation, together with the best single "
        "row |F(p x P)|. fiber: pairs mapped to (a, b) by (F1, F2), split along a "
        "common factor when there is one. image: |(F1, F2)(P x P)|, of order at "
        "least |P|."
    )

    def __init__(self):
        super().__init__(name="values", description="Repeated and distinct values on P x P")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        mode = inputs.options.get("mode") or "repeated"
        P = inputs.points("P")
        F = inputs.polynomial("F")
        list_values = bool(inputs.options.get("list_values"))
        if mode == "repeated":
            result = repeated_values(F, P, inputs.option_value("a"), workflow=inputs.workflow()).to_dict(P, P)
        elif mode == "distinct":
            result = distinct_values(F, P, list_values).to_dict(P)
        elif mode == "fiber":
            result = map_values(F, inputs.polynomial("F2"), P, "fiber", inputs.option_value("a"),
                                inputs.option_value("b"), workflow=inputs.workflow()).to_dict(P, P)
        elif mode == "image":
            result = map_values(F, inputs.polynomial("F2"), P, "distinct", list_values=list_values).to_dict(P)
        else:
            raise UsageError(f"--mode must be repeated, distinct, fiber or image, got '{mode}'")
        result["mode"] = mode
        return result
