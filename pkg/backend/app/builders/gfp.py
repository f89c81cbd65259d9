"""
Circuitos para GF(p)
Sumador modular, add-mult y multiplicación controlada con ambas familias de sumador
"""

import logging
from typing import Sequence

from app.builders.emit import GateList, LayoutBuilder
from app.builders.integer import emit_add, emit_cswap, emit_inverse_qft, emit_qft, emit_sub
from app.core.errors import NotInvertible, OperandOutOfRange, WidthTooSmall
from app.gfcore import doubling_operands, field_inv, validate_field
from app.models.circuit import Circuit
from app.models.kinds import AdderFamily
from app.schemas.fields import PrimeField

LOGGER = logging.getLogger(__name__)


def emit_mod_add(
    g: GateList,
    family: AdderFamily,
    a: int,
    p: int,
    target: Sequence[int],
    carries: Sequence[int],
    flag: int,
    controls: Sequence[int] = (),
) -> None:
    """
    |z⟩ → |(z+a) mod p⟩ sobre target = n qubits de valor + desborde.
    En la familia φ target ya está en base de Fourier; la QFT solo se
    deshace para leer el bit más significativo.
    """
    msb = target[-1]
    phi = family == AdderFamily.PHI

    def copy_msb_to_flag(negated: bool) -> None:
        if phi:
            emit_inverse_qft(g, target)
        if negated:
            g.x(msb)
        g.x(flag, (msb,))
        if negated:
            g.x(msb)
        if phi:
            emit_qft(g, target)

    emit_add(g, family, a, target, carries, controls, ascending=False)
    emit_sub(g, family, p, target, carries)
    copy_msb_to_flag(negated=False)
    emit_add(g, family, p, target, carries, (flag,), ascending=True)
    emit_sub(g, family, a, target, carries, controls, ascending=False)
    copy_msb_to_flag(negated=True)
    emit_add(g, family, a, target, carries, controls, ascending=True)


def _check_n(n: int) -> None:
    if n < 2:
        raise WidthTooSmall(f"se requieren al menos 2 bits por elemento (n={n})")


def _check_controls(controls: int) -> None:
    if controls not in (0, 2):
        raise OperandOutOfRange(f"el sumador modular admite 0 o 2 controles (recibido {controls})")


def _modular_ancillas(layout: LayoutBuilder, family: AdderFamily, n: int) -> tuple[list[int], list[int], int]:
    """Bloque anc: desborde, acarreos (solo acarreo-suma) y bandera t"""
    carry_count = n - 1 if family == AdderFamily.CARRY_SUM else 0
    anc = layout.add("anc", 1 + carry_count + 1)
    return anc[:1], anc[1:-1], anc[-1]


# Sumador modular
def mod_adder_from_operands(
    n: int, a: int, p: int, family: AdderFamily, controls: int = 0, fourier_wrap: bool = False
) -> Circuit:
    """Ensamblado sin validar a ni p; lo usa también el muestreo de recursos"""
    _check_n(n)
    _check_controls(controls)
    layout = LayoutBuilder()
    ctl = layout.add("ctl", controls)
    z = layout.add("z", n)
    ovf, carries, flag = _modular_ancillas(layout, family, n)
    target = z + ovf
    g = GateList()
    wrap = fourier_wrap and family == AdderFamily.PHI
    if wrap:
        emit_qft(g, target)
    emit_mod_add(g, family, a, p, target, carries, flag, ctl)
    if wrap:
        emit_inverse_qft(g, target)
    return layout.circuit(g)


def build_mod_adder_gfp(
    a: int, p: int, family: AdderFamily, controls: int = 0, fourier_wrap: bool = False
) -> Circuit:
    """
    Sumador módulo p de un valor clásico.
    Con fourier_wrap la versión φ queda envuelta en QFT/QFT⁻¹ y actúa
    sobre estados de la base computacional.
    """
    spec = validate_field(PrimeField(p=p))
    if not 0 <= a < p:
        raise OperandOutOfRange(f"a={a} fuera de [0, {p})")
    circuit = mod_adder_from_operands(spec.bit_width, a, p, AdderFamily(family), controls, fourier_wrap)
    LOGGER.debug("sumador GF(%d) a=%d familia=%s: ancho %d", p, a, family, circuit.width)
    return circuit


# Add-mult
def _emit_addmult(
    g: GateList,
    family: AdderFamily,
    operands: Sequence[int],
    p: int,
    c: int,
    xs: Sequence[int],
    target: Sequence[int],
    carries: Sequence[int],
    flag: int,
    fourier_wrap: bool,
) -> None:
    wrap = fourier_wrap and family == AdderFamily.PHI
    if wrap:
        emit_qft(g, target)
    for operand, xq in zip(operands, xs):
        emit_mod_add(g, family, operand, p, target, carries, flag, (c, xq))
    if wrap:
        emit_inverse_qft(g, target)


def addmult_from_operands(
    n: int, operands: Sequence[int], p: int, family: AdderFamily, fourier_wrap: bool = False
) -> Circuit:
    """Un sumador modular por qubit de x, controlado por (c, x_i)"""
    _check_n(n)
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    z = layout.add("z", n)
    ovf, carries, flag = _modular_ancillas(layout, family, n)
    g = GateList()
    _emit_addmult(g, family, operands, p, c, xs, z + ovf, carries, flag, fourier_wrap)
    return layout.circuit(g)


def build_addmult_gfp(a: int, p: int, family: AdderFamily, fourier_wrap: bool = False) -> Circuit:
    """
    |c, x, z⟩ → |c, x, (z + c·a·x) mod p⟩.
    En la familia φ el registro z se deja en base de Fourier salvo que se
    pida fourier_wrap.
    """
    spec = validate_field(PrimeField(p=p))
    if not 0 <= a < p:
        raise OperandOutOfRange(f"a={a} fuera de [0, {p})")
    n = spec.bit_width
    return addmult_from_operands(n, doubling_operands(p, a, n), p, AdderFamily(family), fourier_wrap)


# Multiplicación controlada
def cmult_from_operands(
    n: int,
    operands: Sequence[int],
    inverse_operands: Sequence[int],
    p: int,
    family: AdderFamily,
) -> Circuit:
    """add-mult(a), intercambio controlado, add-mult(a⁻¹) invertida"""
    _check_n(n)
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    carry_count = n - 1 if family == AdderFamily.CARRY_SUM else 0
    anc = layout.add("anc", n + 1 + carry_count + 1)
    z, ovf, carries, flag = anc[:n], anc[n:n + 1], anc[n + 1:-1], anc[-1]
    target = z + ovf

    g = GateList()
    _emit_addmult(g, family, operands, p, c, xs, target, carries, flag, fourier_wrap=True)
    # el desborde vuelve a |0⟩, no se intercambia
    emit_cswap(g, c, xs, z)
    undo = GateList()
    _emit_addmult(undo, family, inverse_operands, p, c, xs, target, carries, flag, fourier_wrap=True)
    g.extend_inverse(undo)
    return layout.circuit(g)


def build_cmult_gfp(a: int, p: int, family: AdderFamily) -> Circuit:
    """|c, x, 0⟩ → |c, (a^c)·x mod p, 0⟩"""
    spec = validate_field(PrimeField(p=p))
    if not 0 <= a < p:
        raise OperandOutOfRange(f"a={a} fuera de [0, {p})")
    if a == 0:
        raise NotInvertible("la multiplicación controlada requiere a ≠ 0")
    n = spec.bit_width
    inv = field_inv(spec, a)
    circuit = cmult_from_operands(n, doubling_operands(p, a, n), doubling_operands(p, inv, n), p, AdderFamily(family))
    LOGGER.debug("cmult GF(%d) a=%d a⁻¹=%d familia=%s: %d compuertas", p, a, inv, family, len(circuit))
    return circuit
