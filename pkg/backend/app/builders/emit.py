"""
Utilidades de emisión de compuertas y de layout de registros
"""

from fractions import Fraction
from typing import Iterable, Sequence

from app.circuit.ops import invert_gates
from app.models.circuit import Circuit, Gate, Register
from app.models.kinds import GateKind


class GateList(list):
    """Lista mutable de compuertas durante la construcción"""

    def x(self, target: int, controls: Sequence[int] = ()) -> None:
        self.append(Gate(GateKind.not_with(len(controls)), target, tuple(controls)))

    def phase(self, target: int, turns: Fraction, controls: Sequence[int] = ()) -> None:
        """Las fases nulas módulo 1 no se emiten"""
        turns = Fraction(turns) % 1
        if turns:
            self.append(Gate(GateKind.phase_with(len(controls)), target, tuple(controls), turns))

    def h(self, target: int) -> None:
        self.append(Gate(GateKind.H, target))

    def extend_inverse(self, gates: Sequence[Gate]) -> None:
        self.extend(invert_gates(gates))


class LayoutBuilder:
    """Asigna registros contiguos en orden de declaración"""

    def __init__(self):
        self._registers: list[Register] = []
        self._next = 0

    def add(self, name: str, length: int) -> list[int]:
        if length <= 0:
            return []
        reg = Register(name, self._next, length)
        self._registers.append(reg)
        self._next += length
        return list(reg.qubits)

    def circuit(self, gates: Iterable[Gate]) -> Circuit:
        return Circuit(self._next, tuple(self._registers), tuple(gates))


def bit(value: int, i: int) -> int:
    return (value >> i) & 1
