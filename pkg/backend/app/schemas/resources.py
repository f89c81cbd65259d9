"""
Schemas de reportes de recursos
Comparación entre fórmulas y circuitos construidos
"""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_serializer


def format_rational(value: Fraction) -> str:
    """num/den, o solo num si es entero"""
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class DeviationRow(BaseModel):
    """Una métrica: promedio empírico contra valor de la fórmula"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    metric: str
    formula: Fraction
    empirical: Fraction
    exact: bool
    within_tolerance: bool

    @property
    def absolute(self) -> Fraction:
        return self.empirical - self.formula

    @property
    def relative(self) -> Optional[float]:
        if self.formula == 0:
            return None if self.empirical == 0 else float("inf")
        return float(self.absolute / self.formula)

    @field_serializer("formula", "empirical")
    def serializar_racional(self, value: Fraction) -> str:
        return format_rational(value)


class CompareReport(BaseModel):
    """Resultado de resources.compare"""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: str
    family: Optional[str] = None
    controls: int = 0
    params: dict[str, int]
    samples: int
    width_formula: int
    widths: list[int]
    rows: list[DeviationRow]
    tolerance: float

    @property
    def width_ok(self) -> bool:
        return all(w == self.width_formula for w in self.widths)

    @property
    def passed(self) -> bool:
        return self.width_ok and all(r.within_tolerance for r in self.rows)

    def row(self, metric: str) -> DeviationRow:
        for r in self.rows:
            if r.metric == metric:
                return r
        raise KeyError(metric)
