#!/usr/bin/env python3
"""
A generated instance together with the count it is built to produce.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from algebra import Polynomial
from geometry import PointSet, count_intersections, map_values
from nullstellensatz import CartesianWitness
from workflow import ChunkWorkflow

INCIDENCES = "incidences"
IMAGE = "image"


@dataclass
class ConstructionInstance:
    """
    F (and F2 for a two-polynomial system), point sets P and Q and the
    predicted value of `measure`:

        incidences   |Z(F) n (P x Q)|, or |Z(F, F2) n (P x Q)|
        image        |(F, F2)(P x P)|
    """

    name: str
    F: Polynomial
    P: PointSet
    Q: PointSet
    predicted_count: int
    provenance: str
    F2: Optional[Polynomial] = None
    measure: str = INCIDENCES
    parameters: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[CartesianWitness] = None

    @property
    def system(self) -> List[Polynomial]:
        return [self.F] if self.F2 is None else [self.F, self.F2]

    def measured(self, workflow: Optional[ChunkWorkflow] = None) -> int:
        if self.measure == IMAGE:
            return map_values(self.F, self.F2, self.P, mode="distinct").count
        return count_intersections(self.system, self.P, self.Q, workflow=workflow).count

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "name": self.name,
            "parameters": {k: str(v) for k, v in sorted(self.parameters.items())},
            "system": [str(F) for F in self.system],
            "sizes": {"P": str(len(self.P)), "Q": str(len(self.Q))},
            "measure": self.measure,
            "predicted_count": str(self.predicted_count),
            "provenance": self.provenance,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data
