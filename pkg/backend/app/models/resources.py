"""
Estimaciones de recursos: ancho, conteo de compuertas y profundidad
"""

from dataclasses import dataclass
from fractions import Fraction

from app.models.circuit import GateHistogram


@dataclass(frozen=True)
class ResourceEstimate:
    """Ancho exacto; conteos y profundidad son promedios racionales"""

    width: int
    counts: GateHistogram
    depth: Fraction

    def __post_init__(self):
        if self.width < 0:
            raise ValueError("ancho negativo")
        object.__setattr__(self, "depth", Fraction(self.depth))
        if self.depth < 0:
            raise ValueError("profundidad negativa")

    @property
    def size(self) -> Fraction:
        return self.counts.total()


@dataclass(frozen=True)
class CircuitSample:
    """Medición de un circuito construido"""

    width: int
    counts: GateHistogram
    depth: int
