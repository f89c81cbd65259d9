"""
Circuitos para GF(2^n)
La suma es un XOR con el valor clásico; no hay acarreos ni ancillas
"""

import logging
from typing import Sequence

from app.builders.emit import GateList, LayoutBuilder, bit
from app.builders.integer import emit_cswap
from app.core.errors import NotInvertible, OperandOutOfRange
from app.gfcore import field_inv, precompute_shift_table, validate_field
from app.models.circuit import Circuit
from app.schemas.fields import BinaryField

LOGGER = logging.getLogger(__name__)


def emit_xor_add(g: GateList, a: int, target: Sequence[int], controls: Sequence[int] = ()) -> None:
    for i, q in enumerate(target):
        if bit(a, i):
            g.x(q, controls)


def _check(spec: BinaryField, a: int) -> BinaryField:
    spec = validate_field(spec)
    if not 0 <= a < 1 << spec.n:
        raise OperandOutOfRange(f"a={a} fuera de [0, 2^{spec.n})")
    return spec


def build_adder_gf2n(a: int, spec: BinaryField, controls: int = 0) -> Circuit:
    spec = _check(spec, a)
    if controls not in (0, 2):
        raise OperandOutOfRange(f"el sumador de GF(2^n) admite 0 o 2 controles (recibido {controls})")
    layout = LayoutBuilder()
    ctl = layout.add("ctl", controls)
    z = layout.add("z", spec.n)
    g = GateList()
    emit_xor_add(g, a, z, ctl)
    return layout.circuit(g)


def addmult_from_operands(n: int, operands: Sequence[int]) -> Circuit:
    """A_(i) sumado sobre z cuando c = x_i = 1"""
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    z = layout.add("z", n)
    g = GateList()
    for operand, xq in zip(operands, xs):
        emit_xor_add(g, operand, z, (c, xq))
    return layout.circuit(g)


def build_addmult_gf2n(a: int, spec: BinaryField) -> Circuit:
    """|c, x, z⟩ → |c, x, z + c·a·x⟩"""
    spec = _check(spec, a)
    return addmult_from_operands(spec.n, precompute_shift_table(spec, a).entries)


def cmult_from_operands(n: int, operands: Sequence[int], inverse_operands: Sequence[int]) -> Circuit:
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    z = layout.add("anc", n)
    g = GateList()
    for operand, xq in zip(operands, xs):
        emit_xor_add(g, operand, z, (c, xq))
    emit_cswap(g, c, xs, z)
    undo = GateList()
    for operand, xq in zip(inverse_operands, xs):
        emit_xor_add(undo, operand, z, (c, xq))
    g.extend_inverse(undo)
    return layout.circuit(g)


def build_cmult_gf2n(a: int, spec: BinaryField) -> Circuit:
    """|c, x, 0⟩ → |c, a^c·x mod Q, 0⟩ con ancho 2n+1"""
    spec = _check(spec, a)
    if a == 0:
        raise NotInvertible("la multiplicación controlada requiere a ≠ 0")
    inv = field_inv(spec, a)
    table, inverse_table = precompute_shift_table(spec, a), precompute_shift_table(spec, inv)
    LOGGER.debug("cmult GF(2^%d) a=%d a⁻¹=%d", spec.n, a, inv)
    return cmult_from_operands(spec.n, table.entries, inverse_table.entries)
