#!/usr/bin/env python3
"""
Commands over the Cartesian machinery: decomposition tests, grid witnesses
and probes.
"""

from typing import Any, Dict

from algebra import ST, XY
from errors import UsageError
from geometry import curve_incidence_split, fiber_probe
from nullstellensatz import (CartesianWitness, alon_1d_test, cartesian_test, degenerate_points,
                             grid_witness_to_cartesian, self_cartesian_test, trivial_cartesian_probe)
from .base_command import EXIT_MATHEMATICAL, EXIT_OK, BaseCommand
from .inputs import CommandInputs


def _outcome(outcome) -> Dict[str, Any]:
    if isinstance(outcome, CartesianWitness):
        return {"status": "cartesian", "witness": outcome.to_dict()}
    return {"status": "not_cartesian", "certificate": outcome.to_dict()}


class CartesianTestCommand(BaseCommand):
    """Decide whether F = G*H + K*L, returning a witness or a failure certificate."""

    explanation = (
        "F is (G, K)-Cartesian when F = G*H + K*L with G in (x, y) and K in (s, t) "
        "squarefree and nonconstant. Dividing F by G leaves a remainder whose "
        "(x, y)-coefficients must all be divisible by K; the test reports either "
        "the witness (G, K, H, L), re-verified by multiplication, or the first "
        "coefficient K does not divide. Under a degree-respecting order "
        "deg H <= deg F - deg G and deg L <= deg F - deg K."
    )

    def __init__(self):
        super().__init__(name="cartesian-test",
                         description="Cartesian decomposition test F = G*H + K*L")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        mode = inputs.options.get("mode") or "two-dimensional"
        if mode == "one-dimensional":
            f = inputs.polynomial("F", XY)
            g = inputs.polynomial("G", ("x",))
            k = inputs.polynomial("K", ("y",))
            outcome = alon_1d_test(f, g, k, reduce_squarefree=bool(inputs.options.get("reduce")))
        elif mode == "self":
            F = inputs.polynomial("F")
            G = inputs.polynomial("G", XY)
            outcome = self_cartesian_test(F, G, inputs.option_value("a"), inputs.order())
        elif mode == "two-dimensional":
            F = inputs.polynomial("F")
            G = inputs.polynomial("G", XY)
            K = inputs.polynomial("K", ST)
            self.notify_progress(f"dividing {F} by {G}")
            outcome = cartesian_test(F, G, K, inputs.order())
        else:
            raise UsageError(f"--mode must be two-dimensional, one-dimensional or self, got '{mode}'")
        result = _outcome(outcome)
        result["mode"] = mode
        return result

    def exit_code(self, result: Dict[str, Any]) -> int:
        return EXIT_OK if result["status"] == "cartesian" else EXIT_MATHEMATICAL


class GridWitnessCommand(BaseCommand):
    """Recover a Cartesian witness (G, K) from a grid I x J inside Z(F)."""

    explanation = (
        "If Z(F) contains a product I x J with |I|, |J| > deg(F)^2 then F is "
        "Cartesian. Curves of degree <= deg F are fitted through I in (x, y) and "
        "through J in (s, t), falling back to curves through all but (d-1)^2 of "
        "the points; the first pair accepted by the decomposition test is the "
        "witness."
    )

    def __init__(self):
        super().__init__(name="grid-witness", description="Synthesise (G, K) from a grid inside Z(F)")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        F = inputs.polynomial("F")
        I = inputs.points("I", fallback="P")
        J = inputs.points("J", fallback="Q")
        self.notify_progress(f"fitting curves through a {len(I)}x{len(J)} grid")
        result = grid_witness_to_cartesian(F, I, J, inputs.option_int("subset_budget", minimum=1))
        if not result.found:
            self.notify_finding("grid witness not synthesised", {"attempts": result.attempts})
        return result.to_dict()

    def exit_code(self, result: Dict[str, Any]) -> int:
        return EXIT_OK if result["status"] == "found" else EXIT_MATHEMATICAL


class ProbeCommand(BaseCommand):
    """Trivial factors, degenerate specialisations, fibers and curve splits."""

    explanation = (
        "trivial: a common factor of F living in (x, y) or in (s, t) alone. "
        "degenerate: the points q whose curve C_q is the whole plane; without a "
        "trivial factor there are at most deg(F)^2 of them. "
        "fiber: the common zeros of F1(., ., q) and F2(., ., q) are empty, finite "
        "(at most the product of the degrees) or contain a curve. "
        "split: for P on Z(G), the q whose curve contains Z(G) against the rest."
    )

    def __init__(self):
        super().__init__(name="probe", description="Probe F for trivial and degenerate structure")

    def run(self, inputs: CommandInputs) -> Dict[str, Any]:
        mode = inputs.options.get("mode") or "trivial"
        F = inputs.polynomial("F")
        if mode == "trivial":
            witness = trivial_cartesian_probe(F)
            if witness is None:
                return {"mode": mode, "status": "none"}
            return {"mode": mode, "status": "cartesian", "witness": witness.to_dict()}
        if mode == "degenerate":
            candidates = inputs.points("Q", fallback="P")
            found = degenerate_points(F, candidates)
            return {
                "mode": mode,
                "bound": str(F.degree ** 2),
                "count": str(len(found)),
                "points": [f"({u}, {v})" for u, v in found],
            }
        if mode == "fiber":
            probe = fiber_probe(F, inputs.polynomial("F2"), inputs.option_point("q"))
            return {"mode": mode, **probe.to_dict()}
        if mode == "split":
            Q = inputs.points("Q")
            split = curve_incidence_split(F, inputs.polynomial("G", XY), inputs.points("P"), Q)
            if split.suspects:
                self.notify_finding("curves above the Bezout bound", {"count": len(split.suspects)})
            return {"mode": mode, **split.to_dict(Q)}
        raise UsageError(f"--mode must be trivial, degenerate, fiber or split, got '{mode}'")
