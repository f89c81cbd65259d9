"""
Comparación de fórmulas contra circuitos medidos
Desviaciones por tipo de compuerta y ajuste del exponente de escala de la profundidad
"""

import logging
from typing import Optional, Sequence

import numpy as np

from app.core.errors import EmptySamples, OutOfDomain
from app.models.kinds import GATE_COLUMNS, AdderFamily, CircuitKind
from app.models.resources import CircuitSample, ResourceEstimate
from app.resources.formulas import formula
from app.resources.sampling import mean_counts
from app.schemas.resources import CompareReport, DeviationRow

LOGGER = logging.getLogger(__name__)

DEPTH_TOLERANCE = 0.20


def _row(metric: str, expected, empirical, tolerance: float) -> DeviationRow:
    exact = expected == empirical
    if exact:
        ok = True
    elif expected == 0:
        ok = False
    else:
        ok = abs(float((empirical - expected) / expected)) <= tolerance
    return DeviationRow(metric=metric, formula=expected, empirical=empirical, exact=exact, within_tolerance=ok)


def compare_estimate(
    estimate: ResourceEstimate,
    samples: Sequence[CircuitSample],
    tolerance: float = 0.0,
    depth_tolerance: float = DEPTH_TOLERANCE,
    kind: str = "",
    family: Optional[AdderFamily] = None,
    controls: int = 0,
    params: Optional[dict[str, int]] = None,
) -> CompareReport:
    if not samples:
        raise EmptySamples("compare requiere al menos una muestra")
    counts, depth = mean_counts(samples)
    rows = [
        _row(gate.value, estimate.counts[gate], counts[gate], tolerance)
        for gate in GATE_COLUMNS
        if estimate.counts[gate] or counts[gate]
    ]
    rows.append(_row("depth", estimate.depth, depth, depth_tolerance))
    return CompareReport(
        kind=kind,
        family=family.value if family else None,
        controls=controls,
        params=params or {},
        samples=len(samples),
        width_formula=estimate.width,
        widths=sorted({s.width for s in samples}),
        rows=rows,
        tolerance=tolerance,
    )


def compare(
    kind: CircuitKind,
    samples: Sequence[CircuitSample],
    n: Optional[int] = None,
    family: Optional[AdderFamily] = None,
    controls: int = 0,
    k: Optional[int] = None,
    l: Optional[int] = None,
    tolerance: float = 0.0,
    depth_tolerance: float = DEPTH_TOLERANCE,
) -> CompareReport:
    """
    Promedio empírico contra la fórmula, métrica por métrica.
    tolerance es relativa para los conteos; 0 exige igualdad exacta.
    """
    kind = CircuitKind(kind)
    if not samples:
        raise EmptySamples("compare requiere al menos una muestra")
    estimate = formula(kind, n=n, family=family, controls=controls, k=k, l=l)
    params = {key: v for key, v in (("n", n), ("k", k), ("l", l)) if v is not None}
    report = compare_estimate(
        estimate, samples, tolerance, depth_tolerance,
        kind=kind.value, family=AdderFamily(family) if family else None, controls=controls, params=params,
    )
    LOGGER.info("compare %s %s: %d muestras, %s", kind.value, params, len(samples), "OK" if report.passed else "FAIL")
    return report


def lower_order_terms(kind: CircuitKind, ns: Sequence[int], **params) -> tuple[float, float]:
    """(b, d) del polinomio cuadrático que reproduce la profundidad de la fórmula sobre ns"""
    ns = np.asarray(ns, dtype=float)
    expected = [float(formula(kind, n=int(n), **params).depth) for n in ns]
    _, b, d = np.polyfit(ns, expected, 2)
    return float(b), float(d)


def fit_scaling_exponent(
    ns: Sequence[int], depths: Sequence[float], linear: tuple[float, float] = (0.0, 0.0)
) -> float:
    """
    Pendiente log-log de depth − (b·n + d).
    Sin linear es el ajuste log-log puro; con los términos de menor orden
    de la fórmula cerrada queda solo la parte c·n^e.
    """
    ns = np.asarray(ns, dtype=float)
    ys = np.asarray(depths, dtype=float)
    if len(ns) < 4 or len(ns) != len(ys):
        raise EmptySamples("se requieren al menos 4 puntos (n, profundidad)")
    b, d = linear
    rest = ys - (b * ns + d)
    if np.any(rest <= 0) or np.any(ns <= 0):
        raise OutOfDomain("el ajuste log-log requiere n > 0 y profundidad por encima de b·n + d")
    slope, _ = np.polyfit(np.log(ns), np.log(rest), 1)
    return round(float(slope), 3)
