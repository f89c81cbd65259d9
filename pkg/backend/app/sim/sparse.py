"""
Simulación dispersa para entradas de la base computacional
Solo se guardan las amplitudes no nulas de cada entrada del lote
"""

import logging
from typing import Optional, Sequence

import numpy as np

from app.core.config import Settings, get_settings
from app.models.circuit import Circuit, Gate
from app.models.kinds import GateKind
from app.sim.statevector import check_width

LOGGER = logging.getLogger(__name__)

_SQRT2_INV = 1 / np.sqrt(2)
# amplitudes por debajo de este módulo se descartan tras cada H
_PRUNE = 1e-12


class SparseBatch:
    """
    Filas (columna, índice, amplitud): la columna identifica la entrada del
    lote y el índice el estado base. Las compuertas NOT y de fase solo
    reescriben filas; H las duplica y vuelve a agrupar.
    """

    def __init__(self, width: int, states: Sequence[int]):
        self.width = width
        self.size = len(states)
        self.column = np.arange(self.size, dtype=np.int64)
        self.index = np.asarray(states, dtype=np.int64)
        self.amplitude = np.ones(self.size, dtype=np.complex128)

    def _hit(self, gate: Gate, with_target: bool) -> np.ndarray:
        mask = sum(1 << q for q in gate.controls)
        if with_target:
            mask |= 1 << gate.target
        return (self.index & mask) == mask

    def apply(self, gate: Gate) -> None:
        if gate.kind == GateKind.H:
            self._hadamard(gate.target)
        elif gate.kind.is_phase:
            hit = self._hit(gate, with_target=True)
            self.amplitude[hit] *= np.exp(2j * np.pi * float(gate.phase))
        else:
            hit = self._hit(gate, with_target=False).astype(np.int64)
            np.bitwise_xor(self.index, hit << gate.target, out=self.index)

    def _hadamard(self, target: int) -> None:
        bit = 1 << target
        sign = np.where(self.index & bit, -1.0, 1.0)
        index = np.concatenate([self.index & ~bit, self.index | bit])
        column = np.concatenate([self.column, self.column])
        amplitude = np.concatenate([self.amplitude, self.amplitude * sign]) * _SQRT2_INV
        keys, inverse = np.unique((column << self.width) | index, return_inverse=True)
        summed = np.zeros(len(keys), dtype=np.complex128)
        np.add.at(summed, inverse.ravel(), amplitude)
        keep = np.abs(summed) > _PRUNE
        keys = keys[keep]
        self.index = keys & ((1 << self.width) - 1)
        self.column = keys >> self.width
        self.amplitude = summed[keep]

    def read_basis(self, tol: float) -> list[Optional[int]]:
        """Índice con |amplitud|² ≥ 1−tol por entrada, o None"""
        hits = np.abs(self.amplitude) ** 2 >= 1 - tol
        results: list[Optional[int]] = [None] * self.size
        for column, index in zip(self.column[hits], self.index[hits]):
            results[int(column)] = int(index)
        return results


def run_sparse(c: Circuit, states: Sequence[int], settings: Optional[Settings] = None) -> list[Optional[int]]:
    """Salida de cada estado base de entrada, None si no es un estado de la base"""
    settings = settings or get_settings()
    check_width(c.qubit_count, settings)
    for state in states:
        if not 0 <= state < 1 << c.qubit_count:
            raise ValueError(f"estado {state} fuera de [0, 2^{c.qubit_count})")
    batch = SparseBatch(c.qubit_count, states)
    peak = batch.size
    for gate in c.gates:
        batch.apply(gate)
        peak = max(peak, len(batch.index))
    LOGGER.debug("simulación dispersa: %d compuertas, %d entradas, hasta %d amplitudes", len(c), batch.size, peak)
    return batch.read_basis(settings.basis_tolerance)
