"""
Lectura de estados base y de registros
"""

from itertools import product
from typing import Iterator, Mapping, Optional

import numpy as np

from app.core.errors import MissingAssignment, OperandOutOfRange
from app.models.circuit import Circuit, Register


def read_basis(v: np.ndarray, tol: float) -> Optional[int]:
    """Índice con |amplitud|² ≥ 1−tol, o None si el estado no es de la base"""
    if not 0 < tol < 0.5:
        raise ValueError("tol debe estar en (0, 0.5)")
    probs = np.abs(v) ** 2
    index = int(np.argmax(probs))
    return index if probs[index] >= 1 - tol else None


def read_basis_batch(v: np.ndarray, tol: float) -> list[Optional[int]]:
    """read_basis por columna de un lote (2^w, B)"""
    probs = np.abs(v) ** 2
    best = np.argmax(probs, axis=0)
    hits = probs[best, np.arange(v.shape[1])] >= 1 - tol
    return [int(i) if ok else None for i, ok in zip(best, hits)]


def layout_of(c: Circuit) -> dict[str, Register]:
    return {reg.name: reg for reg in c.registers}


def read_register(state: int, c: Circuit, name: str) -> int:
    reg = c.register(name)
    return (state >> reg.start) & ((1 << reg.length) - 1)


def read_all(state: int, c: Circuit) -> dict[str, int]:
    """Valor de cada registro en orden de layout"""
    return {reg.name: read_register(state, c, reg.name) for reg in sorted(c.registers, key=lambda r: r.start)}


def encode_registers(
    c: Circuit, values: Mapping[str, int], defaults: tuple[str, ...] = ()
) -> int:
    """Estado base a partir de valores por registro; los de defaults valen 0 si faltan"""
    state = 0
    for reg in c.registers:
        if reg.name not in values:
            if reg.name in defaults:
                continue
            raise MissingAssignment(f"falta asignar el registro {reg.name}")
        value = values[reg.name]
        if not 0 <= value < 1 << reg.length:
            raise OperandOutOfRange(f"{reg.name}={value} no cabe en {reg.length} qubits")
        state |= value << reg.start
    for name in values:
        c.register(name)
    return state


def iter_basis_inputs(c: Circuit, ranges: Mapping[str, range]) -> Iterator[tuple[dict[str, int], int]]:
    """Producto cartesiano de valores por registro; los demás quedan en 0"""
    names = list(ranges)
    for combo in product(*(ranges[name] for name in names)):
        values = dict(zip(names, combo))
        yield values, encode_registers(c, values, defaults=tuple(r.name for r in c.registers))
