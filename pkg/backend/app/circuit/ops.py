"""
Operaciones sobre circuitos
Conteo, profundidad ASAP, inversión, controles adicionales y concatenación
"""

from collections import Counter
from typing import Iterable, Sequence

from app.core.errors import ArityOverflow, CircuitError, QubitOutOfRange
from app.models.circuit import Circuit, Gate, GateHistogram
from app.models.kinds import GateKind


def tally(c: Circuit) -> GateHistogram:
    """Conteo exacto por tipo de compuerta"""
    return GateHistogram(Counter(g.kind for g in c.gates))


def depth(c: Circuit) -> int:
    """
    Capas ASAP en orden de emisión: una compuerta va una capa después
    de la última compuerta anterior que comparte algún qubit con ella.
    """
    layer = [0] * c.qubit_count
    deepest = 0
    for gate in c.gates:
        qubits = gate.qubits
        current = 1 + max(layer[q] for q in qubits)
        for q in qubits:
            layer[q] = current
        deepest = max(deepest, current)
    return deepest


def invert_gates(gates: Sequence[Gate]) -> list[Gate]:
    """Orden inverso, fase t → 1−t; se eliminan las fases nulas"""
    out = []
    for gate in reversed(gates):
        inv = gate.inverted()
        if inv is not None:
            out.append(inv)
    return out


def inverse(c: Circuit) -> Circuit:
    return c.with_gates(invert_gates(c.gates))


def control_gate(gate: Gate, new_controls: Iterable[int]) -> Gate:
    """Agregar controles a una compuerta: N→CN→C2N…, P→CP→C2P"""
    new_controls = tuple(new_controls)
    controls = gate.controls + new_controls
    if gate.kind == GateKind.H:
        raise ArityOverflow("H no admite controles en el conjunto elemental")
    try:
        kind = GateKind.not_with(len(controls)) if gate.kind.is_not else GateKind.phase_with(len(controls))
    except ValueError as e:
        raise ArityOverflow(str(e)) from e
    return Gate(kind, gate.target, controls, gate.phase)


def with_controls(c: Circuit, new_controls: Sequence[int]) -> Circuit:
    """Versión controlada genérica de todo el circuito"""
    new_controls = tuple(new_controls)
    used = {q for g in c.gates for q in g.qubits}
    if any(q in used for q in new_controls):
        raise CircuitError(f"Los controles {new_controls} ya participan en el circuito")
    if any(not 0 <= q < c.qubit_count for q in new_controls):
        raise QubitOutOfRange(f"Controles fuera del layout: {new_controls}")
    return c.with_gates(control_gate(g, new_controls) for g in c.gates)


def concat(a: Circuit, b: Circuit) -> Circuit:
    """a ++ b sobre el mismo layout"""
    if a.qubit_count != b.qubit_count or a.registers != b.registers:
        raise CircuitError("Solo se concatenan circuitos con el mismo layout")
    return a.with_gates(a.gates + b.gates)
