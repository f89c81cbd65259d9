"""
Simulación con selección automática del camino
Permutación exacta para circuitos clásicos, amplitudes dispersas en otro caso
"""

import logging
from typing import Optional, Sequence

from app.core.config import Settings, get_settings
from app.core.errors import NotBasisOutput
from app.models.circuit import Circuit
from app.sim.permutation import compile_permutation, is_classical, run_permutation
from app.sim.readout import (
    encode_registers,
    iter_basis_inputs,
    layout_of,
    read_all,
    read_basis,
    read_basis_batch,
    read_register,
)
from app.sim.sparse import SparseBatch, run_sparse
from app.sim.statevector import basis_batch, basis_state, run_statevector

LOGGER = logging.getLogger(__name__)


def simulate_basis(c: Circuit, state: int, settings: Optional[Settings] = None) -> int:
    """Salida de un estado base; NotBasisOutput si el resultado no es de la base"""
    return simulate_many(c, [state], settings)[0]


def simulate_many(c: Circuit, states: Sequence[int], settings: Optional[Settings] = None) -> list[int]:
    """Varios estados base de entrada en una sola pasada"""
    settings = settings or get_settings()
    if is_classical(c):
        LOGGER.debug("camino de permutación, %d entradas", len(states))
        program = compile_permutation(c)
        return [program.run(s) for s in states]
    LOGGER.debug("camino disperso, %d entradas", len(states))
    results = run_sparse(c, states, settings)
    for state, result in zip(states, results):
        if result is None:
            raise NotBasisOutput(f"la salida para la entrada {state} no es un estado de la base")
    return results


__all__ = [
    "SparseBatch",
    "basis_batch",
    "basis_state",
    "compile_permutation",
    "encode_registers",
    "is_classical",
    "iter_basis_inputs",
    "layout_of",
    "read_all",
    "read_basis",
    "read_basis_batch",
    "read_register",
    "run_permutation",
    "run_sparse",
    "run_statevector",
    "simulate_basis",
    "simulate_many",
]
