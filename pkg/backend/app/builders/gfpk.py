"""
Circuitos para GF(p^k)
Cada coeficiente se suma con un sumador módulo p; los sumadores van en
secuencia para reciclar acarreos y bandera
"""

import logging
from typing import Sequence

from app.builders.emit import GateList, LayoutBuilder
from app.builders.gfp import emit_mod_add
from app.builders.integer import emit_cswap, emit_inverse_qft, emit_qft
from app.core.errors import NotInvertible, OperandOutOfRange, WidthTooSmall
from app.gfcore import coeff_decompose, field_inv, is_element, precompute_shift_table, validate_field
from app.models.circuit import Circuit
from app.models.kinds import AdderFamily
from app.schemas.fields import ExtensionField

LOGGER = logging.getLogger(__name__)

Coefficients = Sequence[int]


class _Ancillas:
    """Desbordes, acarreos y bandera según la familia"""

    def __init__(self, qubits: Sequence[int], family: AdderFamily, k: int, l: int):
        if family == AdderFamily.CARRY_SUM:
            self.overflows = list(qubits[:k])
            self.carries = list(qubits[k:k + l - 1])
        else:
            # un solo desborde compartido, se recicla con cada QFT
            self.overflows = [qubits[0]] * k
            self.carries = []
        self.flag = qubits[-1]

    @staticmethod
    def count(family: AdderFamily, k: int, l: int) -> int:
        return k + l if family == AdderFamily.CARRY_SUM else 2


def emit_gfpk_add(
    g: GateList,
    family: AdderFamily,
    coeffs: Coefficients,
    p: int,
    l: int,
    z: Sequence[int],
    anc: _Ancillas,
    controls: Sequence[int] = (),
) -> None:
    for i, coeff in enumerate(coeffs):
        window = [*z[i * l:(i + 1) * l], anc.overflows[i]]
        if family == AdderFamily.PHI:
            emit_qft(g, window)
        emit_mod_add(g, family, coeff, p, window, anc.carries, anc.flag, controls)
        if family == AdderFamily.PHI:
            emit_inverse_qft(g, window)


def _check_l(l: int) -> None:
    if l < 2:
        raise WidthTooSmall(f"se requieren al menos 2 bits por coeficiente (l={l})")


def _check(spec: ExtensionField, a: int) -> ExtensionField:
    spec = validate_field(spec)
    _check_l(spec.coeff_bits)
    if not is_element(spec, a):
        raise OperandOutOfRange(f"a={a} no es un elemento de GF({spec.p}^{spec.k})")
    return spec


# Sumador
def adder_from_operands(
    coeffs: Coefficients, p: int, l: int, family: AdderFamily, controls: int = 0
) -> Circuit:
    _check_l(l)
    if controls not in (0, 2):
        raise OperandOutOfRange(f"el sumador de GF(p^k) admite 0 o 2 controles (recibido {controls})")
    k = len(coeffs)
    layout = LayoutBuilder()
    ctl = layout.add("ctl", controls)
    z = layout.add("z", k * l)
    anc = _Ancillas(layout.add("anc", _Ancillas.count(family, k, l)), family, k, l)
    g = GateList()
    emit_gfpk_add(g, family, coeffs, p, l, z, anc, ctl)
    return layout.circuit(g)


def build_adder_gfpk(a: int, spec: ExtensionField, family: AdderFamily, controls: int = 0) -> Circuit:
    """Suma coeficiente a coeficiente módulo p; actúa sobre la base computacional"""
    spec = _check(spec, a)
    return adder_from_operands(coeff_decompose(spec, a), spec.p, spec.coeff_bits, AdderFamily(family), controls)


# Add-mult
def _emit_addmult(
    g: GateList,
    family: AdderFamily,
    operands: Sequence[Coefficients],
    p: int,
    l: int,
    c: int,
    xs: Sequence[int],
    z: Sequence[int],
    anc: _Ancillas,
) -> None:
    for coeffs, xq in zip(operands, xs):
        emit_gfpk_add(g, family, coeffs, p, l, z, anc, (c, xq))


def addmult_from_operands(
    operands: Sequence[Coefficients], p: int, k: int, l: int, family: AdderFamily
) -> Circuit:
    """Un sumador de GF(p^k) por qubit de x; operands[i·l + j] son coeficientes"""
    _check_l(l)
    n = k * l
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    z = layout.add("z", n)
    anc = _Ancillas(layout.add("anc", _Ancillas.count(family, k, l)), family, k, l)
    g = GateList()
    _emit_addmult(g, family, operands, p, l, c, xs, z, anc)
    return layout.circuit(g)


def shift_operands(spec: ExtensionField, a: int) -> list[list[int]]:
    """El qubit j del coeficiente i de x controla la suma de 2^j·a·x^i mod Q"""
    table = precompute_shift_table(spec, a)
    return [coeff_decompose(spec, entry) for entry in table.entries]


def build_addmult_gfpk(a: int, spec: ExtensionField, family: AdderFamily) -> Circuit:
    """|c, x, z⟩ → |c, x, z + c·a·x⟩"""
    spec = _check(spec, a)
    return addmult_from_operands(shift_operands(spec, a), spec.p, spec.k, spec.coeff_bits, AdderFamily(family))


# Multiplicación controlada
def cmult_from_operands(
    operands: Sequence[Coefficients],
    inverse_operands: Sequence[Coefficients],
    p: int,
    k: int,
    l: int,
    family: AdderFamily,
) -> Circuit:
    _check_l(l)
    n = k * l
    layout = LayoutBuilder()
    (c,) = layout.add("c", 1)
    xs = layout.add("x", n)
    block = layout.add("anc", n + _Ancillas.count(family, k, l))
    z = block[:n]
    anc = _Ancillas(block[n:], family, k, l)
    g = GateList()
    _emit_addmult(g, family, operands, p, l, c, xs, z, anc)
    emit_cswap(g, c, xs, z)
    undo = GateList()
    _emit_addmult(undo, family, inverse_operands, p, l, c, xs, z, anc)
    g.extend_inverse(undo)
    return layout.circuit(g)


def build_cmult_gfpk(a: int, spec: ExtensionField, family: AdderFamily) -> Circuit:
    """|c, x, 0⟩ → |c, a^c·x, 0⟩ en GF(p^k)"""
    spec = _check(spec, a)
    if a == 0:
        raise NotInvertible("la multiplicación controlada requiere a ≠ 0")
    inv = field_inv(spec, a)
    LOGGER.debug("cmult GF(%d^%d) a=%d a⁻¹=%d familia=%s", spec.p, spec.k, a, inv, family)
    return cmult_from_operands(
        shift_operands(spec, a), shift_operands(spec, inv), spec.p, spec.k, spec.coeff_bits, AdderFamily(family)
    )
