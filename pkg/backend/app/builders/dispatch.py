"""
Selección del constructor según tipo de circuito y cuerpo
Punto de entrada común del CLI y de la verificación
"""

from typing import Optional

from app.builders import gf2n, gfp, gfpk, integer
from app.core.errors import BuilderError, OperandOutOfRange
from app.models.circuit import Circuit
from app.models.kinds import AdderFamily
from app.schemas.fields import BinaryField, ExtensionField, FieldSpec, PrimeField

BUILD_KINDS = ("cmult", "addmult", "adder", "qft", "cswap", "int-adder")


def build_circuit(
    kind: str,
    spec: Optional[FieldSpec],
    a: int = 0,
    family: AdderFamily = AdderFamily.CARRY_SUM,
    controls: int = 0,
    bits: Optional[int] = None,
    basis_io: bool = True,
) -> Circuit:
    """
    Con basis_io las variantes φ incluyen la QFT exterior y el circuito
    lee y escribe estados de la base computacional.
    """
    family = AdderFamily(family)
    if kind in ("qft", "cswap", "int-adder"):
        n = bits if bits is not None else (spec.bit_width if spec is not None else None)
        if n is None:
            raise BuilderError(f"{kind} requiere --bits o --field")
        if kind == "qft":
            return integer.build_qft(n)
        if kind == "cswap":
            return integer.build_cswap(n)
        if family == AdderFamily.PHI:
            if basis_io:
                return integer.build_phi_adder_sandwich(a, n + 1, controls)
            return integer.build_phi_adder(a, n + 1, controls)
        return integer.build_carry_sum_adder(a, n, controls)

    if spec is None:
        raise BuilderError(f"{kind} requiere un cuerpo")
    if kind not in BUILD_KINDS:
        raise BuilderError(f"tipo de circuito desconocido: {kind}")
    if kind != "adder" and controls:
        raise OperandOutOfRange(f"{kind} no admite controles externos")

    if isinstance(spec, PrimeField):
        if kind == "adder":
            return gfp.build_mod_adder_gfp(a, spec.p, family, controls, fourier_wrap=basis_io)
        if kind == "addmult":
            return gfp.build_addmult_gfp(a, spec.p, family, fourier_wrap=basis_io)
        return gfp.build_cmult_gfp(a, spec.p, family)
    if isinstance(spec, BinaryField):
        if kind == "adder":
            return gf2n.build_adder_gf2n(a, spec, controls)
        if kind == "addmult":
            return gf2n.build_addmult_gf2n(a, spec)
        return gf2n.build_cmult_gf2n(a, spec)
    if isinstance(spec, ExtensionField):
        if kind == "adder":
            return gfpk.build_adder_gfpk(a, spec, family, controls)
        if kind == "addmult":
            return gfpk.build_addmult_gfpk(a, spec, family)
        return gfpk.build_cmult_gfpk(a, spec, family)
    raise BuilderError(f"cuerpo no soportado: {spec!r}")
