#!/usr/bin/env python3
"""
Construct command: build an instance, measure it and compare with its prediction.
"""

from typing import Any, Dict

from cli.pointio import write_points
from nullstellensatz import CartesianWitness, cartesian_test
from .base_command import EXIT_MATHEMATICAL, EXIT_OK, BaseCommand
from .inputs import CommandInputs


class ConstructCommand(BaseCommand):
    """Generate an extremal or exceptional instance."""

    explanation = (
        "elekes:l,m  lines y = a*x + b through grids, about l^2*m^2 incidences. "
        "elekes-degree-d:l,m,d  the degree-d analogue, counted through y^d. "
        "valtr:l  parabolas through a thin grid, about |P|^(4/3) incidences. "
        "saturation:n  F = G*H + K*L with P on Z(G), Q on Z(K): all n^2 pairs. "
        "diagonal:n[,seed]  the plane x = s, y = t: exactly n incidences. "
        "grid:m  unit distances in the m x m grid. "
        "progression:n  vector sums of n points in progression: 2n - 1 values."
    )

    def __init__(self):
        super().__init__(name="construct", description="Generate instances with predicted counts")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        instance = inputs.instance()
        self.notify_progress(f"measuring {instance.name}")
        measured = instance.measured(inputs.workflow())
        result = instance.to_dict()
        result["measured_count"] = str(measured)
        result["matches_prediction"] = measured == instance.predicted_count
        if instance.witness is not None:
            outcome = cartesian_test(instance.F, instance.witness.G, instance.witness.K)
            result["cartesian_test"] = "cartesian" if isinstance(outcome, CartesianWitness) else "not_cartesian"
        for role, points in (("P", instance.P), ("Q", instance.Q)):
            path = inputs.options.get(f"write_{role}")
            if path:
                write_points(path, points)
        return result

    def exit_code(self, result: Dict[str, Any]) -> int:
        ok = result["matches_prediction"] and result.get("cartesian_test", "cartesian") == "cartesian"
        return EXIT_OK if ok else EXIT_MATHEMATICAL
