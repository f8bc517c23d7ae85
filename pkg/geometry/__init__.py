"""
Exact incidence geometry on finite point sets of the complex plane with
Gaussian-rational coordinates.
"""

from .points import PointSet, as_point, format_point
from .curves import Side, SpecializedCurve, curve_classes, specialize
from .envelopes import Envelope, incidence_envelopes, power_envelope
from .counting import (CurveSplit, IncidenceReport, as_system, brute_force_count, count_intersections,
                       curve_incidence_split)
from .incidence import IncidenceGraph, KstWitness, dual_incidence_graph, incidence_graph, kst_free_check
from .partition import RichPartition, partition_rich
from .values import (FiberKind, FiberProbe, ValuesReport, distinct_values, fiber_probe, map_values,
                     repeated_values)

__all__ = [
    "PointSet", "as_point", "format_point",
    "Side", "SpecializedCurve", "curve_classes", "specialize",
    "Envelope", "incidence_envelopes", "power_envelope",
    "CurveSplit", "IncidenceReport", "as_system", "brute_force_count", "count_intersections",
    "curve_incidence_split",
    "IncidenceGraph", "KstWitness", "dual_incidence_graph", "incidence_graph", "kst_free_check",
    "RichPartition", "partition_rich",
    "FiberKind", "FiberProbe", "ValuesReport", "distinct_values", "fiber_probe", "map_values",
    "repeated_values",
]
