"""
Simulador denso de vector de estado
Amplitudes complejas de doble precisión; el índice lleva el qubit i en el bit i
"""

import logging
from typing import Optional, Sequence

import numpy as np

from app.core.config import Settings, get_settings
from app.core.errors import WidthCapExceeded
from app.models.circuit import Circuit, Gate
from app.models.kinds import GateKind

LOGGER = logging.getLogger(__name__)

_SQRT2_INV = 1 / np.sqrt(2)


def check_width(width: int, settings: Optional[Settings] = None) -> None:
    cap = (settings or get_settings()).statevector_max_qubits
    if width > cap:
        raise WidthCapExceeded(f"ancho {width} supera el límite de {cap} qubits del vector de estado")


def basis_state(width: int, index: int, settings: Optional[Settings] = None) -> np.ndarray:
    check_width(width, settings)
    v = np.zeros(1 << width, dtype=np.complex128)
    v[index] = 1.0
    return v


def basis_batch(width: int, indices, settings: Optional[Settings] = None) -> np.ndarray:
    """Una columna por índice: forma (2^w, B)"""
    check_width(width, settings)
    indices = np.asarray(indices, dtype=np.int64)
    v = np.zeros((1 << width, len(indices)), dtype=np.complex128)
    v[indices, np.arange(len(indices))] = 1.0
    return v


def _index(width: int, assigned: dict[int, int]) -> tuple:
    """Selector sobre la vista (2,)*w; el qubit q es el eje w-1-q"""
    idx = [slice(None)] * width
    for q, value in assigned.items():
        idx[width - 1 - q] = value
    return tuple(idx)


def _apply_h(flat: np.ndarray, target: int, width: int) -> None:
    view = flat.reshape((2,) * width + flat.shape[1:])
    i0 = _index(width, {target: 0})
    i1 = _index(width, {target: 1})
    a0, a1 = view[i0].copy(), view[i1].copy()
    view[i0] = (a0 + a1) * _SQRT2_INV
    view[i1] = (a0 - a1) * _SQRT2_INV


def _monomial(gates: Sequence[Gate], width: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Tramo de compuertas NOT y de fase como una sola matriz monomial.
    pos[j] es el índice al que llega la base j y turns[j] la fase acumulada.
    """
    pos = np.arange(1 << width, dtype=np.int64)
    turns = np.zeros(1 << width)
    for gate in gates:
        mask = sum(1 << q for q in gate.controls)
        if gate.kind.is_phase:
            mask |= 1 << gate.target
            turns += ((pos & mask) == mask) * float(gate.phase)
        else:
            hit = ((pos & mask) == mask).astype(np.int64)
            np.bitwise_xor(pos, hit << gate.target, out=pos)
    return pos, turns


def _flush(flat: np.ndarray, gates: Sequence[Gate], width: int) -> np.ndarray:
    if not gates:
        return flat
    pos, turns = _monomial(gates, width)
    out = np.empty_like(flat)
    if turns.any():
        out[pos] = flat * np.exp(2j * np.pi * turns)[:, None]
    else:
        out[pos] = flat
    return out


def run_statevector(c: Circuit, state: np.ndarray, settings: Optional[Settings] = None) -> np.ndarray:
    """
    Aplica las compuertas en orden sobre una copia.
    Acepta un vector (2^w,) o un lote (2^w, B) de estados independientes.
    Los tramos sin H se aplican de una vez: una permutación de índices
    y un único vector de fases.
    """
    width = c.qubit_count
    check_width(width, settings)
    state = np.asarray(state, dtype=np.complex128)
    if state.shape[0] != 1 << width:
        raise ValueError(f"se esperaban {1 << width} amplitudes, hay {state.shape[0]}")
    flat = state.reshape(1 << width, -1).copy()
    pending: list[Gate] = []
    for gate in c.gates:
        if gate.kind == GateKind.H:
            flat = _flush(flat, pending, width)
            pending = []
            _apply_h(flat, gate.target, width)
        else:
            pending.append(gate)
    flat = _flush(flat, pending, width)
    LOGGER.debug("vector de estado: %d compuertas sobre %d qubits, lote %s", len(c), width, state.shape[1:] or 1)
    return flat.reshape(state.shape)
