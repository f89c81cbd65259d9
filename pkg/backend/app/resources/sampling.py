"""
Instancias de circuitos para el modelo de conteo
Bits clásicos uniformes e independientes, incluidos los del módulo.
Con odd_modulus el bit bajo del módulo se fija en 1: cada resta de p en
base de Fourier gana entonces una fase P y cada resta acarreo-suma gana
su bloque de a_0, así que las filas P y CN se alejan de las fórmulas.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Optional

import numpy as np

from app.builders import gf2n, gfp, gfpk
from app.builders.integer import build_carry_sum_adder, build_cswap, build_phi_adder, build_qft
from app.circuit.ops import depth, tally
from app.core.errors import EmptySamples, OutOfDomain
from app.gfcore import field_inv, find_binary_irreducible, precompute_shift_table
from app.models.circuit import Circuit, GateHistogram
from app.models.kinds import AdderFamily, CircuitKind
from app.models.resources import CircuitSample
from app.schemas.fields import BinaryField

LOGGER = logging.getLogger(__name__)


def measure(c: Circuit) -> CircuitSample:
    return CircuitSample(c.width, tally(c), depth(c))


def mean_counts(samples: Iterable[CircuitSample]) -> tuple[GateHistogram, Fraction]:
    """Histograma y profundidad promedio, en racionales exactos"""
    total, depth_sum, count = GateHistogram(), 0, 0
    for s in samples:
        total = total + s.counts
        depth_sum += s.depth
        count += 1
    if not count:
        raise EmptySamples("no hay muestras")
    return total.scaled(Fraction(1, count)), Fraction(depth_sum, count)


def _binary_field(n: int) -> BinaryField:
    return BinaryField(n=n, modulus=find_binary_irreducible(n))


def _gf2n_tables(spec: BinaryField, a: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Tablas de a y a⁻¹; el inverso de 0 se toma como 0"""
    inv = field_inv(spec, a) if a else 0
    return precompute_shift_table(spec, a).entries, precompute_shift_table(spec, inv).entries


def all_instances(
    kind: CircuitKind,
    n: Optional[int] = None,
    family: Optional[AdderFamily] = None,
    controls: int = 0,
    k: Optional[int] = None,
    l: Optional[int] = None,
) -> Iterator[Circuit]:
    """
    Todas las combinaciones de bits clásicos, cuando el promedio es exacto.
    Los conteos dependen linealmente de cada bit, así que enumerar todos los
    patrones reproduce el promedio de las fórmulas sin error.
    """
    kind = CircuitKind(kind)
    if kind == CircuitKind.CARRY_SUM_ADDER:
        yield from (build_carry_sum_adder(a, n, controls) for a in range(1 << n))
    elif kind == CircuitKind.PHI_ADDER:
        yield from (build_phi_adder(a, n + 1, controls) for a in range(1 << n))
    elif kind == CircuitKind.QFT:
        yield build_qft(n + 1)
    elif kind == CircuitKind.CSWAP:
        yield build_cswap(n)
    elif kind == CircuitKind.MOD_ADDER_GFP:
        for a, p in product(range(1 << n), repeat=2):
            yield gfp.mod_adder_from_operands(n, a, p, family, controls)
    elif kind == CircuitKind.ADDER_GF2N:
        spec = _binary_field(n)
        yield from (gf2n.build_adder_gf2n(a, spec, controls) for a in range(1 << n))
    elif kind == CircuitKind.ADDMULT_GF2N:
        spec = _binary_field(n)
        for a in range(1 << n):
            yield gf2n.addmult_from_operands(n, precompute_shift_table(spec, a).entries)
    elif kind == CircuitKind.CMULT_GF2N:
        spec = _binary_field(n)
        for a in range(1 << n):
            yield gf2n.cmult_from_operands(n, *_gf2n_tables(spec, a))
    elif kind == CircuitKind.ADDER_GFPK:
        for bits in product(range(1 << l), repeat=k + 1):
            p, coeffs = bits[0], bits[1:]
            yield gfpk.adder_from_operands(coeffs, p, l, family, controls)
    else:
        raise OutOfDomain(f"{kind.value} no tiene enumeración exacta; usar muestreo")


def random_instance(
    kind: CircuitKind,
    rng: np.random.Generator,
    n: Optional[int] = None,
    family: Optional[AdderFamily] = None,
    controls: int = 0,
    k: Optional[int] = None,
    l: Optional[int] = None,
    odd_modulus: bool = False,
) -> Circuit:
    """Un circuito con operandos y módulo tomados como patrones de bits uniformes"""
    kind = CircuitKind(kind)

    def draw(bits: int, size: Optional[int] = None):
        values = rng.integers(0, 1 << bits, size=size)
        return int(values) if size is None else [int(v) for v in values]

    def modulus(bits: int) -> int:
        return draw(bits) | 1 if odd_modulus else draw(bits)

    if kind == CircuitKind.CARRY_SUM_ADDER:
        return build_carry_sum_adder(draw(n), n, controls)
    if kind == CircuitKind.PHI_ADDER:
        return build_phi_adder(draw(n), n + 1, controls)
    if kind == CircuitKind.QFT:
        return build_qft(n + 1)
    if kind == CircuitKind.CSWAP:
        return build_cswap(n)
    if kind == CircuitKind.MOD_ADDER_GFP:
        return gfp.mod_adder_from_operands(n, draw(n), modulus(n), family, controls)
    if kind == CircuitKind.ADDMULT_GFP:
        # la fórmula φ incluye la QFT exterior
        return gfp.addmult_from_operands(n, draw(n, n), modulus(n), family, fourier_wrap=True)
    if kind == CircuitKind.CMULT_GFP:
        return gfp.cmult_from_operands(n, draw(n, n), draw(n, n), modulus(n), family)
    if kind == CircuitKind.ADDER_GF2N:
        return gf2n.build_adder_gf2n(draw(n), _binary_field(n), controls)
    if kind == CircuitKind.ADDMULT_GF2N:
        return gf2n.addmult_from_operands(n, draw(n, n))
    if kind == CircuitKind.CMULT_GF2N:
        return gf2n.cmult_from_operands(n, draw(n, n), draw(n, n))

    rows = k * l
    if kind == CircuitKind.ADDER_GFPK:
        return gfpk.adder_from_operands(draw(l, k), modulus(l), l, family, controls)
    if kind == CircuitKind.ADDMULT_GFPK:
        return gfpk.addmult_from_operands([draw(l, k) for _ in range(rows)], modulus(l), k, l, family)
    if kind == CircuitKind.CMULT_GFPK:
        return gfpk.cmult_from_operands(
            [draw(l, k) for _ in range(rows)], [draw(l, k) for _ in range(rows)], modulus(l), k, l, family
        )
    raise OutOfDomain(f"tipo de circuito sin muestreo: {kind.value}")


def exact_average(kind: CircuitKind, **params) -> list[CircuitSample]:
    samples = [measure(c) for c in all_instances(kind, **params)]
    LOGGER.debug("promedio exacto de %s sobre %d instancias", CircuitKind(kind).value, len(samples))
    return samples


def sample_average(kind: CircuitKind, count: int, rng: np.random.Generator, **params) -> list[CircuitSample]:
    if count < 1:
        raise EmptySamples("se requiere al menos una muestra")
    return [measure(random_instance(kind, rng, **params)) for _ in range(count)]
