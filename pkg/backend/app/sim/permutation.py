"""
Evaluador exacto de permutaciones
Circuitos formados solo por NOT con controles: cada compuerta es un XOR condicional
"""

import logging
from dataclasses import dataclass

from app.core.errors import NonClassicalGate
from app.models.circuit import Circuit

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermutationProgram:
    """Pares (máscara de controles, bit objetivo) listos para aplicar"""

    steps: tuple[tuple[int, int], ...]
    qubit_count: int

    def run(self, state: int) -> int:
        for mask, flip in self.steps:
            if state & mask == mask:
                state ^= flip
        return state


def compile_permutation(c: Circuit) -> PermutationProgram:
    steps = []
    for gate in c.gates:
        if not gate.kind.is_not:
            raise NonClassicalGate(f"{gate.kind.value} no es una compuerta clásica")
        mask = 0
        for q in gate.controls:
            mask |= 1 << q
        steps.append((mask, 1 << gate.target))
    return PermutationProgram(tuple(steps), c.qubit_count)


def is_classical(c: Circuit) -> bool:
    return all(g.kind.is_not for g in c.gates)


def run_permutation(c: Circuit, state: int) -> int:
    """Estado base de salida; bit i = qubit i"""
    if not 0 <= state < 1 << c.qubit_count:
        raise ValueError(f"estado {state} fuera de [0, 2^{c.qubit_count})")
    return compile_permutation(c).run(state)
