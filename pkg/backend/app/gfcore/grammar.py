"""
Gramática de especificación de cuerpos
p:<primo> | 2^<n>:Q=<binario> | p^k:<p>,<k>,Q=<c_k,...,c_0>
"""

import re

from pydantic import ValidationError

from app.core.errors import FieldSpecSyntaxError
from app.gfcore.arithmetic import validate_field
from app.schemas.fields import BinaryField, ExtensionField, FieldSpec, PrimeField

_PRIME = re.compile(r"p:(\d+)")
_BINARY = re.compile(r"2\^(\d+):Q=([01]+)")
_EXTENSION = re.compile(r"p\^k:(\d+),(\d+),Q=(\d+(?:,\d+)*)")


def parse_field_spec(text: str, validate: bool = True) -> FieldSpec:
    """Interpretar la cadena; con validate=True revisa también primalidad e irreducibilidad"""
    text = text.strip()
    try:
        if match := _PRIME.fullmatch(text):
            spec = PrimeField(p=int(match[1]))
        elif match := _BINARY.fullmatch(text):
            spec = BinaryField(n=int(match[1]), modulus=int(match[2], 2))
        elif match := _EXTENSION.fullmatch(text):
            coeffs = [int(c) for c in match[3].split(",")]
            spec = ExtensionField(p=int(match[1]), k=int(match[2]), modulus=tuple(reversed(coeffs)))
        else:
            raise FieldSpecSyntaxError(f"Especificación de cuerpo no reconocida: {text!r}")
    except ValidationError as e:
        raise FieldSpecSyntaxError(f"Especificación de cuerpo inválida {text!r}: {e.errors()[0]['msg']}") from e
    return validate_field(spec) if validate else spec


def format_field_spec(spec: FieldSpec) -> str:
    """Inversa de parse_field_spec"""
    if isinstance(spec, PrimeField):
        return f"p:{spec.p}"
    if isinstance(spec, BinaryField):
        return f"2^{spec.n}:Q={spec.modulus:b}"
    coeffs = ",".join(str(c) for c in reversed(spec.modulus))
    return f"p^k:{spec.p},{spec.k},Q={coeffs}"
