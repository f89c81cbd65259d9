"""
Aritmética exacta sobre GF(p), GF(2^n) y GF(p^k)
Oráculo clásico y fuente de todos los parámetros precalculados de los circuitos
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from app.core.errors import (
    DegreeMismatch,
    InvalidElement,
    NonMonicModulus,
    NotInvertible,
    NotPrime,
    ReducibleModulus,
)
from app.gfcore.polynomials import (
    gf2_degree,
    gf2_inverse,
    gf2_is_irreducible,
    gf2_mulmod,
    poly_is_irreducible,
    poly_mod,
    poly_mul,
    poly_scale,
    poly_xgcd,
)
from app.gfcore.primes import is_prime
from app.schemas.fields import BinaryField, ExtensionField, FieldSpec, PrimeField

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftTable:
    """Valores a·x^i mod Q (y 2^j·a·x^i mod Q para GF(p^k)), fila por fila"""

    entries: tuple[int, ...]
    rows: int
    cols: int = 1

    def entry(self, i: int, j: int = 0) -> int:
        return self.entries[i * self.cols + j]

    def __len__(self) -> int:
        return len(self.entries)


# Validación
@lru_cache(maxsize=256)
def validate_field(spec: FieldSpec) -> FieldSpec:
    """
    Revisar las invariantes algebraicas del cuerpo.
    Devuelve el mismo spec o lanza NotPrime / ReducibleModulus / DegreeMismatch.
    """
    if isinstance(spec, PrimeField):
        if not is_prime(spec.p):
            raise NotPrime(f"p={spec.p} no es primo")
    elif isinstance(spec, BinaryField):
        if gf2_degree(spec.modulus) != spec.n:
            raise DegreeMismatch(f"Q tiene grado {gf2_degree(spec.modulus)}, se esperaba {spec.n}")
        if not gf2_is_irreducible(spec.modulus):
            raise ReducibleModulus(f"Q={spec.modulus:b} es reducible sobre GF(2)")
    else:
        if not is_prime(spec.p):
            raise NotPrime(f"p={spec.p} no es primo")
        if len(spec.modulus) - 1 != spec.k:
            raise DegreeMismatch(f"Q tiene grado {len(spec.modulus) - 1}, se esperaba {spec.k}")
        if spec.modulus[-1] != 1:
            raise NonMonicModulus("Q debe ser mónico")
        if not poly_is_irreducible(spec.modulus, spec.p):
            raise ReducibleModulus(f"Q={list(reversed(spec.modulus))} es reducible sobre GF({spec.p})")
    LOGGER.debug("cuerpo válido: %s", spec)
    return spec


# Codificación de elementos
def coeff_decompose(spec: ExtensionField, a: int) -> list[int]:
    """Separar el entero empaquetado en sus k coeficientes c_0..c_{k-1}"""
    l = spec.coeff_bits
    mask = (1 << l) - 1
    return [(a >> (i * l)) & mask for i in range(spec.k)]


def coeff_pack(spec: ExtensionField, coeffs: Sequence[int]) -> int:
    """Inversa de coeff_decompose"""
    if len(coeffs) > spec.k or any(not 0 <= c < spec.p for c in coeffs):
        raise InvalidElement(f"coeficientes inválidos para GF({spec.p}^{spec.k}): {list(coeffs)}")
    l = spec.coeff_bits
    return sum(c << (i * l) for i, c in enumerate(coeffs))


def is_element(spec: FieldSpec, a: int) -> bool:
    if isinstance(spec, PrimeField):
        return 0 <= a < spec.p
    if isinstance(spec, BinaryField):
        return 0 <= a < 1 << spec.n
    if not 0 <= a < 1 << spec.bit_width:
        return False
    return all(c < spec.p for c in coeff_decompose(spec, a))


def check_element(spec: FieldSpec, a: int) -> int:
    if not isinstance(a, int) or not is_element(spec, a):
        raise InvalidElement(f"{a} no es un elemento válido del cuerpo")
    return a


def field_elements(spec: FieldSpec) -> Iterable[int]:
    """Todas las codificaciones válidas, en orden creciente"""
    if isinstance(spec, PrimeField):
        return range(spec.p)
    if isinstance(spec, BinaryField):
        return range(1 << spec.n)
    return (coeff_pack(spec, _digits(index, spec.p, spec.k)) for index in range(spec.order))


def element_at(spec: FieldSpec, index: int) -> int:
    """Elemento número index en el orden de field_elements"""
    if not 0 <= index < spec.order:
        raise InvalidElement(f"índice {index} fuera de 0..{spec.order - 1}")
    if isinstance(spec, ExtensionField):
        return coeff_pack(spec, _digits(index, spec.p, spec.k))
    return index


def _digits(index: int, base: int, count: int) -> list[int]:
    out = []
    for _ in range(count):
        index, digit = divmod(index, base)
        out.append(digit)
    return out


# Operaciones
def field_add(spec: FieldSpec, a: int, b: int) -> int:
    check_element(spec, a)
    check_element(spec, b)
    if isinstance(spec, PrimeField):
        return (a + b) % spec.p
    if isinstance(spec, BinaryField):
        return a ^ b
    return coeff_pack(spec, [(x + y) % spec.p for x, y in zip(coeff_decompose(spec, a), coeff_decompose(spec, b))])


def field_neg(spec: FieldSpec, a: int) -> int:
    check_element(spec, a)
    if isinstance(spec, PrimeField):
        return -a % spec.p
    if isinstance(spec, BinaryField):
        return a
    return coeff_pack(spec, [-c % spec.p for c in coeff_decompose(spec, a)])


def field_sub(spec: FieldSpec, a: int, b: int) -> int:
    return field_add(spec, a, field_neg(spec, b))


def field_mul(spec: FieldSpec, a: int, b: int) -> int:
    check_element(spec, a)
    check_element(spec, b)
    if isinstance(spec, PrimeField):
        return a * b % spec.p
    if isinstance(spec, BinaryField):
        return gf2_mulmod(a, b, spec.modulus)
    product = poly_mod(poly_mul(coeff_decompose(spec, a), coeff_decompose(spec, b), spec.p), spec.modulus, spec.p)
    return coeff_pack(spec, product)


def field_inv(spec: FieldSpec, a: int) -> int:
    """Inverso por Euclides extendido (entero o polinomial)"""
    check_element(spec, a)
    if a == 0:
        raise NotInvertible("0 no tiene inverso multiplicativo")
    if isinstance(spec, PrimeField):
        return pow(a, -1, spec.p)
    if isinstance(spec, BinaryField):
        return gf2_inverse(a, spec.modulus)
    g, s, _ = poly_xgcd(coeff_decompose(spec, a), spec.modulus, spec.p)
    if len(g) != 1:
        raise NotInvertible(f"{a} no es invertible; ¿Q reducible?")
    return coeff_pack(spec, poly_scale(s, pow(g[0], -1, spec.p), spec.p))


def field_pow(spec: FieldSpec, a: int, e: int) -> int:
    result = 1
    base = check_element(spec, a)
    if e < 0:
        base, e = field_inv(spec, base), -e
    while e:
        if e & 1:
            result = field_mul(spec, result, base)
        base = field_mul(spec, base, base)
        e >>= 1
    return result


def monomial(spec: FieldSpec, i: int) -> int:
    """El elemento x^i reducido módulo Q"""
    if isinstance(spec, PrimeField):
        raise InvalidElement("GF(p) no tiene monomios x^i")
    if isinstance(spec, BinaryField):
        return gf2_mulmod(1, 1 << i, spec.modulus)
    return coeff_pack(spec, poly_mod([0] * i + [1], spec.modulus, spec.p))


def precompute_shift_table(spec: FieldSpec, a: int) -> ShiftTable:
    """
    Binario: A_(0)..A_(n-1) con A_(i+1) = x·A_(i) mod Q.
    Extensión: 2^j·A_(i) mod Q para i < k, j < l, en orden de filas.
    """
    check_element(spec, a)
    if isinstance(spec, BinaryField):
        entries, current = [], a
        for _ in range(spec.n):
            entries.append(current)
            current = gf2_mulmod(current, 0b10, spec.modulus)
        return ShiftTable(tuple(entries), rows=spec.n)
    if isinstance(spec, ExtensionField):
        entries = []
        current = coeff_decompose(spec, a)
        for _ in range(spec.k):
            for j in range(spec.coeff_bits):
                entries.append(coeff_pack(spec, poly_scale(current, pow(2, j, spec.p), spec.p)))
            current = poly_mod(poly_mul(current, [0, 1], spec.p), spec.modulus, spec.p)
        return ShiftTable(tuple(entries), rows=spec.k, cols=spec.coeff_bits)
    raise InvalidElement("la tabla de desplazamientos no aplica a GF(p)")


def doubling_operands(p: int, a: int, n: int) -> list[int]:
    """Operandos de la add-mult en GF(p): 2^i·a mod p para i < n"""
    return [(a << i) % p for i in range(n)]
