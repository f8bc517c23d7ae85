#!/usr/bin/env python3
"""
Resolution of an ExperimentConfig into library inputs: parsed polynomials,
point sets (from files or a construction), orders, budgets and workflows.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence

import config
from algebra import GaussRational, MonomialOrder, Polynomial, default_order
from cli.grammar import parse_polynomial
from cli.pointio import load_points
from cli.reports import ExperimentConfig
from constructions import FAMILIES, ConstructionInstance, cartesian_saturation, preset
from errors import UsageError
from geometry import PointSet
from workflow import ChunkWorkflow

logger = logging.getLogger(__name__)

# Flag spelling of each polynomial role, for error messages.
POLY_FLAGS = {"F": "--poly", "F2": "--poly2", "G": "--g", "K": "--k", "gamma": "--gamma", "kappa": "--kappa"}
POINT_FLAGS = {"P": "--points", "Q": "--points-q", "I": "--points", "J": "--points-q"}


def _integers(text: str, spec: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"construction arguments must be integers, got '{spec}'") from None


class CommandInputs:
    """Lazy, cached view of one experiment's inputs."""

    def __init__(self, experiment: ExperimentConfig):
        self.experiment = experiment
        self.options: Dict[str, Any] = experiment.options
        self._instance: Optional[ConstructionInstance] = None
        self._points: Dict[str, PointSet] = {}

    # Polynomials

    def polynomial(self, role: str, variables: Optional[Sequence[str]] = None,
                   required: bool = True) -> Optional[Polynomial]:
        text = self.experiment.polynomials.get(role)
        if text is None and role == "F":
            if self.options.get("preset"):
                return preset(self.options["preset"])
            if self.experiment.construct:
                return self.instance().F
        if text is None and role == "F2" and self.experiment.construct and not self.experiment.polynomials:
            return self.instance().F2
        if text is None:
            if required:
                raise UsageError(f"missing {POLY_FLAGS.get(role, role)}")
            return None
        return parse_polynomial(text, variables)

    def system(self) -> List[Polynomial]:
        first = self.polynomial("F")
        second = self.polynomial("F2", required=False)
        return [first] if second is None else [first, second]

    # Point sets

    def points(self, role: str, fallback: Optional[str] = None) -> PointSet:
        if role in self._points:
            return self._points[role]
        path = self.experiment.points.get(role)
        if path is not None:
            points = load_points(path).relabel(role)
        elif fallback is not None and fallback in self.experiment.points:
            points = self.points(fallback)
        elif self.experiment.construct:
            instance = self.instance()
            points = instance.Q if role in ("Q", "J") else instance.P
        else:
            raise UsageError(f"missing {POINT_FLAGS.get(role, role)} (or --construct)")
        self._points[role] = points
        return points

    def instance(self) -> ConstructionInstance:
        if self._instance is None:
            self._instance = self._build_instance(self.experiment.construct)
        return self._instance

    def _build_instance(self, spec: Optional[str]) -> ConstructionInstance:
        if not spec:
            raise UsageError("missing --construct")
        name, _, arguments = spec.partition(":")
        values = _integers(arguments, spec)
        if name == "saturation":
            if len(values) != 1:
                raise UsageError(f"saturation takes one argument n, got '{spec}'")
            gamma = self.polynomial("gamma", ("x",), required=False) or Polynomial.zero()
            kappa = self.polynomial("kappa", ("s",), required=False) or Polynomial.zero()
            return cartesian_saturation(gamma, kappa, values[0], seed=self.seed())
        if name not in FAMILIES:
            choices = ", ".join(sorted(list(FAMILIES) + ["saturation"]))
            raise UsageError(f"unknown construction '{name}'; choose from {choices}")
        generator, names = FAMILIES[name]
        if not values or len(values) > len(names):
            raise UsageError(f"{name} takes arguments {','.join(names)}, got '{spec}'")
        if name == "diagonal" and len(values) == 1:
            values.append(self.seed())
        try:
            return generator(*values)
        except TypeError:
            raise UsageError(f"{name} takes arguments {','.join(names)}, got '{spec}'") from None

    # Options

    def option_int(self, name: str, default: Optional[int] = None, minimum: Optional[int] = None) -> Optional[int]:
        raw = self.options.get(name)
        if raw is None:
            return default
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise UsageError(f"--{name.replace('_', '-')} must be an integer, got '{raw}'") from None
        if minimum is not None and value < minimum:
            raise UsageError(f"--{name.replace('_', '-')} must be at least {minimum}, got {value}")
        return value

    def option_value(self, name: str, default: str = "0") -> GaussRational:
        raw = str(self.options.get(name, default))
        try:
            return GaussRational.parse(raw)
        except ValueError as e:
            raise UsageError(f"--{name}: {e}") from None

    def option_point(self, name: str):
        raw = self.options.get(name)
        if raw is None:
            raise UsageError(f"missing --{name}")
        parts = str(raw).split(",")
        if len(parts) != 2:
            raise UsageError(f"--{name} must be 'u,v', got '{raw}'")
        try:
            return GaussRational.parse(parts[0]), GaussRational.parse(parts[1])
        except ValueError as e:
            raise UsageError(f"--{name}: {e}") from None

    def seed(self) -> int:
        return self.option_int("seed", config.DEFAULT_SEED, minimum=0)

    def order(self) -> MonomialOrder:
        kind = self.options.get("order")
        if kind is None:
            return default_order()
        precedence = self.options.get("precedence") or ",".join(config.VARIABLE_PRECEDENCE)
        try:
            return MonomialOrder.parse(kind, tuple(v.strip() for v in precedence.split(",")))
        except ValueError as e:
            raise UsageError(str(e)) from None

    def workflow(self) -> ChunkWorkflow:
        topology = self.options.get("topology") or config.TOPOLOGY
        if topology not in config.TOPOLOGIES:
            raise UsageError(f"--topology must be one of {', '.join(config.TOPOLOGIES)}, got '{topology}'")
        return ChunkWorkflow(topology, self.option_int("workers", config.WORKERS, minimum=1), source="count")

    def settings(self) -> Dict[str, Any]:
        """Effective settings echoed in every report."""
        try:
            order = str(self.order())
        except UsageError:
            order = str(self.options.get("order"))
        try:
            workflow = self.workflow().describe()
        except UsageError:
            workflow = {"topology": str(self.options.get("topology")), "workers": str(self.options.get("workers"))}
        return {
            "order": order,
            "workflow": workflow,
            "kst_budget": str(self.options.get("budget", config.KST_BUDGET)),
            "subset_budget": str(self.options.get("subset_budget", config.SUBSET_BUDGET)),
            "seed": str(self.options.get("seed", config.DEFAULT_SEED)),
            "decimal_digits": str(config.DECIMAL_DIGITS),
        }
