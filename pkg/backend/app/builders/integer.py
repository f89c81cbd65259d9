"""
Sumadores de enteros con operando clásico, QFT e intercambio controlado
Bloques de construcción de todos los circuitos sobre cuerpos finitos
"""

import logging
from fractions import Fraction
from typing import Sequence

from app.builders.emit import GateList, LayoutBuilder, bit
from app.circuit.ops import with_controls
from app.core.errors import OperandOutOfRange, WidthTooSmall
from app.models.circuit import Circuit
from app.models.kinds import AdderFamily

LOGGER = logging.getLogger(__name__)


# Sumador acarreo-suma
def emit_carry_sum_add(
    g: GateList,
    a: int,
    target: Sequence[int],
    carries: Sequence[int],
    controls: Sequence[int] = (),
) -> None:
    """
    Suma el clásico a sobre target (n bits de valor + bit de desborde).
    El acarreo c_0 no existe: siempre vale 0 y solo actuaba como control.
    Con controles, solo se controlan las sumas y el acarreo más bajo.

    Los acarreos intermedios complementan c_i en lugar de b_i cuando a_i = 1:
    c_(i+1) = b_i OR c_i se obtiene igual, pero cada compuerta del acarreo
    depende del acarreo anterior y la cadena ascendente queda en serie.
    """
    n = len(target) - 1
    b = list(target)
    c = [None, *carries]
    ctl = tuple(controls)

    def dest(i: int) -> int:
        return c[i + 1] if i < n - 1 else b[n]

    def carry(i: int) -> None:
        if bit(a, i):
            g.x(dest(i), (c[i],))
            g.x(c[i])
        g.x(dest(i), (c[i], b[i]))

    def carry_inv(i: int) -> None:
        g.x(dest(i), (c[i], b[i]))
        if bit(a, i):
            g.x(c[i])
            g.x(dest(i), (c[i],))

    def last_carry() -> None:
        i = n - 1
        if bit(a, i):
            g.x(dest(i), (*ctl, b[i]))
            g.x(b[i], ctl)
        g.x(dest(i), (*ctl, c[i], b[i]))

    def sum_(i: int) -> None:
        if bit(a, i):
            g.x(b[i], ctl)
        g.x(b[i], (*ctl, c[i]))

    # acarreo superior reducido: c_1 = a_0·b_0
    if bit(a, 0):
        g.x(c[1], (b[0],))
    for i in range(1, n - 1):
        carry(i)
    last_carry()
    # suma inferior: su NOT clásico se cancela con el CN(a→b) suelto
    g.x(b[n - 1], (*ctl, c[n - 1]))
    for i in range(n - 2, 0, -1):
        carry_inv(i)
        sum_(i)
    if bit(a, 0):
        g.x(c[1], (b[0],))
        g.x(b[0], ctl)


def build_carry_sum_adder(a: int, n: int, controls: int = 0) -> Circuit:
    """|z⟩ → |z+a⟩ sobre n+1 qubits, con n−1 acarreos auxiliares"""
    if n < 2:
        raise WidthTooSmall(f"el sumador acarreo-suma requiere n ≥ 2 (n={n})")
    if not 0 <= a < 1 << n:
        raise OperandOutOfRange(f"a={a} fuera de [0, 2^{n})")
    if controls not in (0, 1, 2):
        raise OperandOutOfRange(f"controles debe ser 0, 1 o 2 (recibido {controls})")
    layout = LayoutBuilder()
    ctl = layout.add("ctl", controls)
    target = layout.add("z", n + 1)
    carries = layout.add("anc", n - 1)
    g = GateList()
    emit_carry_sum_add(g, a, target, carries, ctl)
    LOGGER.debug("sumador acarreo-suma a=%d n=%d controles=%d: %d compuertas", a, n, controls, len(g))
    return layout.circuit(g)


# Sumador en base de Fourier
def emit_phi_add(
    g: GateList,
    a: int,
    target: Sequence[int],
    controls: Sequence[int] = (),
    ascending: bool = True,
) -> None:
    """
    Una fase fusionada por qubit. El qubit j de la QFT (sin swaps finales)
    guarda la fase z/2^(j+1), así que sumar a es rotar a/2^(j+1) vueltas.
    a negativo resta.
    """
    order = range(len(target)) if ascending else range(len(target) - 1, -1, -1)
    for j in order:
        g.phase(target[j], Fraction(a, 1 << (j + 1)), controls)


def build_phi_adder(a: int, width: int, controls: int = 0) -> Circuit:
    """Actúa sobre QFT|z⟩ de width qubits; el qubit más alto empieza en |0⟩"""
    if width < 1:
        raise WidthTooSmall("el φ-sumador requiere al menos un qubit")
    if not 0 <= a < 1 << (width - 1) and not (width == 1 and a == 0):
        raise OperandOutOfRange(f"a={a} fuera de [0, 2^{width - 1})")
    if controls not in (0, 1, 2):
        raise OperandOutOfRange(f"controles debe ser 0, 1 o 2 (recibido {controls})")
    layout = LayoutBuilder()
    ctl = layout.add("ctl", controls)
    target = layout.add("z", width)
    g = GateList()
    emit_phi_add(g, a, target)
    circuit = layout.circuit(g)
    return with_controls(circuit, ctl) if ctl else circuit


# QFT
def emit_qft(g: GateList, target: Sequence[int]) -> None:
    """Cascada H + fases controladas, sin inversión final del orden de qubits"""
    for j in range(len(target) - 1, -1, -1):
        g.h(target[j])
        for k in range(j - 1, -1, -1):
            g.phase(target[j], Fraction(1, 1 << (j - k + 1)), (target[k],))


def emit_inverse_qft(g: GateList, target: Sequence[int]) -> None:
    forward = GateList()
    emit_qft(forward, target)
    g.extend_inverse(forward)


def build_qft(width: int) -> Circuit:
    if width < 1:
        raise WidthTooSmall("la QFT requiere al menos un qubit")
    layout = LayoutBuilder()
    target = layout.add("z", width)
    g = GateList()
    emit_qft(g, target)
    return layout.circuit(g)


def build_phi_adder_sandwich(a: int, width: int, controls: int = 0) -> Circuit:
    """QFT, φ-suma y QFT⁻¹: suma sobre estados de la base computacional"""
    adder = build_phi_adder(a, width, controls)
    target = list(adder.register("z").qubits)
    g = GateList()
    emit_qft(g, target)
    g.extend(adder.gates)
    emit_inverse_qft(g, target)
    return adder.with_gates(g)


# Intercambio controlado
def emit_cswap(g: GateList, control: int, xs: Sequence[int], ys: Sequence[int]) -> None:
    """Capas de CN en paralelo alrededor de la columna de C2N"""
    for a, b in zip(xs, ys):
        g.x(a, (b,))
    for a, b in zip(xs, ys):
        g.x(b, (control, a))
    for a, b in zip(xs, ys):
        g.x(a, (b,))


def build_cswap(n: int) -> Circuit:
    if n < 1:
        raise WidthTooSmall("el intercambio controlado requiere n ≥ 1")
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    ys = layout.add("z", n)
    g = GateList()
    emit_cswap(g, c, xs, ys)
    return layout.circuit(g)


# Despacho por familia
def emit_add(
    g: GateList,
    family: AdderFamily,
    a: int,
    target: Sequence[int],
    carries: Sequence[int],
    controls: Sequence[int] = (),
    ascending: bool = True,
) -> None:
    if family == AdderFamily.PHI:
        emit_phi_add(g, a, target, controls, ascending)
    else:
        emit_carry_sum_add(g, a, target, carries, controls)


def emit_sub(
    g: GateList,
    family: AdderFamily,
    a: int,
    target: Sequence[int],
    carries: Sequence[int],
    controls: Sequence[int] = (),
    ascending: bool = True,
) -> None:
    """Resta módulo 2^(n+1): inversa del sumador"""
    if family == AdderFamily.PHI:
        emit_phi_add(g, -a, target, controls, ascending)
        return
    forward = GateList()
    emit_carry_sum_add(forward, a, target, carries, controls)
    g.extend_inverse(forward)
