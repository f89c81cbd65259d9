from app.gfcore.arithmetic import (
    ShiftTable,
    check_element,
    coeff_decompose,
    coeff_pack,
    doubling_operands,
    element_at,
    field_add,
    field_elements,
    field_inv,
    field_mul,
    field_neg,
    field_pow,
    field_sub,
    is_element,
    monomial,
    precompute_shift_table,
    validate_field,
)
from app.gfcore.grammar import format_field_spec, parse_field_spec
from app.gfcore.polynomials import find_binary_irreducible, find_irreducible
from app.gfcore.primes import is_prime

__all__ = [
    "ShiftTable",
    "check_element",
    "coeff_decompose",
    "coeff_pack",
    "doubling_operands",
    "element_at",
    "field_add",
    "field_elements",
    "field_inv",
    "field_mul",
    "field_neg",
    "field_pow",
    "field_sub",
    "find_binary_irreducible",
    "find_irreducible",
    "format_field_spec",
    "is_element",
    "is_prime",
    "monomial",
    "parse_field_spec",
    "precompute_shift_table",
    "validate_field",
]
