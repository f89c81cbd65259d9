"""
Fórmulas cerradas de recursos
Ancho, conteo promedio por tipo de compuerta y profundidad de cada circuito
"""

from fractions import Fraction as F
from typing import Callable, Optional

from app.core.errors import OutOfDomain
from app.models.circuit import GateHistogram
from app.models.kinds import AdderFamily, CircuitKind
from app.models.resources import ResourceEstimate
from app.schemas.fields import ExtensionField, FieldSpec

CS = AdderFamily.CARRY_SUM
PHI = AdderFamily.PHI

Key = tuple[CircuitKind, Optional[AdderFamily], int]
Formula = Callable[[int, int, int], ResourceEstimate]

_REGISTRY: dict[Key, Formula] = {}
_MIN_N: dict[Key, int] = {}


def _register(kind: CircuitKind, family: Optional[AdderFamily] = None, controls: int = 0, min_n: int = 2):
    def decorator(fn: Formula) -> Formula:
        _REGISTRY[(kind, family, controls)] = fn
        _MIN_N[(kind, family, controls)] = min_n
        return fn
    return decorator


def _est(width, depth, **counts) -> ResourceEstimate:
    return ResourceEstimate(int(width), GateHistogram.of(**counts), F(depth))


# Sumadores de enteros
@_register(CircuitKind.CARRY_SUM_ADDER, controls=0)
def _carry_sum_0(n, k, l):
    return _est(2 * n, F(11, 2) * n - F(13, 2), C2N=2 * n - 3, CN=2 * n - F(3, 2), N=F(3, 2) * n - 2)


@_register(CircuitKind.CARRY_SUM_ADDER, controls=1)
def _carry_sum_1(n, k, l):
    return _est(2 * n + 1, F(11, 2) * n - F(13, 2),
                C3N=1, C2N=3 * n - F(9, 2), CN=F(3, 2) * n - 1, N=n - 2)


@_register(CircuitKind.CARRY_SUM_ADDER, controls=2)
def _carry_sum_2(n, k, l):
    return _est(2 * n + 2, F(11, 2) * n - F(13, 2),
                C4N=1, C3N=n - F(1, 2), C2N=F(5, 2) * n - 4, CN=n - 1, N=n - 2)


@_register(CircuitKind.PHI_ADDER, controls=0, min_n=1)
def _phi_0(n, k, l):
    return _est(n + 1, 1, P=n)


@_register(CircuitKind.PHI_ADDER, controls=1, min_n=1)
def _phi_1(n, k, l):
    return _est(n + 2, n, CP=n)


@_register(CircuitKind.PHI_ADDER, controls=2, min_n=1)
def _phi_2(n, k, l):
    return _est(n + 3, n, C2P=n)


@_register(CircuitKind.QFT, min_n=0)
def _qft(n, k, l):
    """QFT sobre n+1 qubits"""
    return _est(n + 1, 2 * n + 1, CP=F(n * n + n, 2), H=n + 1)


@_register(CircuitKind.CSWAP, min_n=1)
def _cswap(n, k, l):
    return _est(2 * n + 1, n + 2, C2N=n, CN=2 * n)


# GF(p)
@_register(CircuitKind.MOD_ADDER_GFP, CS, 0)
def _mod_cs_0(n, k, l):
    return _est(2 * n + 1, F(55, 2) * n - F(57, 2),
                C3N=1, C2N=11 * n - F(33, 2), CN=F(19, 2) * n - 5, N=7 * n - 8)


@_register(CircuitKind.MOD_ADDER_GFP, CS, 2)
def _mod_cs_2(n, k, l):
    return _est(2 * n + 3, F(55, 2) * n - F(57, 2),
                C4N=3, C3N=3 * n - F(1, 2), C2N=F(25, 2) * n - F(39, 2), CN=F(13, 2) * n - F(7, 2),
                N=F(11, 2) * n - 8)


@_register(CircuitKind.MOD_ADDER_GFP, PHI, 0)
def _mod_phi_0(n, k, l):
    return _est(n + 2, 9 * n + 12, CP=2 * n * n + 3 * n, P=4 * n, CN=2, N=2, H=4 * n + 4)


@_register(CircuitKind.MOD_ADDER_GFP, PHI, 2)
def _mod_phi_2(n, k, l):
    return _est(n + 4, 12 * n + 9, C2P=3 * n, CP=2 * n * n + 3 * n, P=n, CN=2, N=2, H=4 * n + 4)


@_register(CircuitKind.ADDMULT_GFP, CS)
def _addmult_cs(n, k, l):
    return _est(3 * n + 2, F(55, 2) * n * n - F(57, 2) * n,
                C4N=3 * n, C3N=3 * n * n - F(n, 2), C2N=F(25, 2) * n * n - F(39, 2) * n,
                CN=F(13, 2) * n * n - F(7, 2) * n, N=F(11, 2) * n * n - 8 * n)


@_register(CircuitKind.ADDMULT_GFP, PHI)
def _addmult_phi(n, k, l):
    """Incluye la QFT y su inversa alrededor del acumulador"""
    return _est(2 * n + 3, 12 * n * n + 13 * n + 2,
                C2P=3 * n * n, CP=2 * n ** 3 + 4 * n * n + n, P=n * n, CN=2 * n, N=2 * n,
                H=4 * n * n + 6 * n + 2)


@_register(CircuitKind.CMULT_GFP, CS)
def _cmult_cs(n, k, l):
    return _est(3 * n + 2, 55 * n * n - 56 * n + 2,
                C4N=6 * n, C3N=6 * n * n - n, C2N=25 * n * n - 38 * n, CN=13 * n * n - 5 * n,
                N=11 * n * n - 16 * n)


@_register(CircuitKind.CMULT_GFP, PHI)
def _cmult_phi(n, k, l):
    return _est(2 * n + 3, 24 * n * n + 27 * n + 6,
                C2P=6 * n * n, CP=4 * n ** 3 + 8 * n * n + 2 * n, P=2 * n * n, C2N=n, CN=6 * n, N=4 * n,
                H=8 * n * n + 12 * n + 4)


# GF(2^n)
@_register(CircuitKind.ADDER_GF2N, controls=0, min_n=2)
def _gf2n_adder_0(n, k, l):
    return _est(n, 1, N=F(n, 2))


@_register(CircuitKind.ADDER_GF2N, controls=2, min_n=2)
def _gf2n_adder_2(n, k, l):
    return _est(n + 2, F(n, 2), C2N=F(n, 2))


@_register(CircuitKind.ADDMULT_GF2N, min_n=2)
def _gf2n_addmult(n, k, l):
    return _est(2 * n + 1, F(n * n, 2), C2N=F(n * n, 2))


@_register(CircuitKind.CMULT_GF2N, min_n=2)
def _gf2n_cmult(n, k, l):
    return _est(2 * n + 1, n * n + n + 2, C2N=n * n + n, CN=2 * n)


# GF(p^k), n = k·l
@_register(CircuitKind.ADDER_GFPK, CS, 0)
def _gfpk_adder_cs_0(n, k, l):
    return _est(n + k + l, F(55, 2) * n - F(57, 2) * k,
                C3N=k, C2N=11 * n - F(33, 2) * k, CN=F(19, 2) * n - 5 * k, N=7 * n - 8 * k)


@_register(CircuitKind.ADDER_GFPK, CS, 2)
def _gfpk_adder_cs_2(n, k, l):
    return _est(n + k + l + 2, F(55, 2) * n - F(57, 2) * k,
                C4N=3 * k, C3N=3 * n - F(k, 2), C2N=F(25, 2) * n - F(39, 2) * k,
                CN=F(13, 2) * n - F(7, 2) * k, N=F(11, 2) * n - 8 * k)


@_register(CircuitKind.ADDER_GFPK, PHI, 0)
def _gfpk_adder_phi_0(n, k, l):
    return _est(n + 2, 13 * n + 14 * k,
                CP=3 * n * l + 4 * n, P=4 * n, CN=2 * k, N=2 * k, H=6 * n + 6 * k)


@_register(CircuitKind.ADDER_GFPK, PHI, 2)
def _gfpk_adder_phi_2(n, k, l):
    return _est(n + 4, 16 * n + 11 * k,
                C2P=3 * n, CP=3 * n * l + 4 * n, P=n, CN=2 * k, N=2 * k, H=6 * n + 6 * k)


@_register(CircuitKind.ADDMULT_GFPK, CS)
def _gfpk_addmult_cs(n, k, l):
    return _est(2 * n + k + l + 1, F(55, 2) * n * n - F(57, 2) * n * k,
                C4N=3 * n * k, C3N=3 * n * n - F(n * k, 2), C2N=F(25, 2) * n * n - F(39, 2) * n * k,
                CN=F(13, 2) * n * n - F(7, 2) * n * k, N=F(11, 2) * n * n - 8 * n * k)


@_register(CircuitKind.ADDMULT_GFPK, PHI)
def _gfpk_addmult_phi(n, k, l):
    return _est(2 * n + 3, 16 * n * n + 11 * n * k,
                C2P=3 * n * n, CP=3 * n * n * l + 4 * n * n, P=n * n, CN=2 * n * k, N=2 * n * k,
                H=6 * n * n + 6 * n * k)


@_register(CircuitKind.CMULT_GFPK, CS)
def _gfpk_cmult_cs(n, k, l):
    return _est(2 * n + k + l + 1, 55 * n * n - 57 * n * k + n + 2,
                C4N=6 * n * k, C3N=6 * n * n - n * k, C2N=25 * n * n - 39 * n * k + n,
                CN=13 * n * n - 7 * n * k + 2 * n, N=11 * n * n - 16 * n * k)


@_register(CircuitKind.CMULT_GFPK, PHI)
def _gfpk_cmult_phi(n, k, l):
    return _est(2 * n + 3, 32 * n * n + 22 * n * k + n + 2,
                C2P=6 * n * n, CP=6 * n * n * l + 8 * n * n, P=2 * n * n, C2N=n, CN=4 * n * k + 2 * n,
                N=4 * n * k, H=12 * n * n + 12 * n * k)


_EXTENSION_KINDS = (CircuitKind.ADDER_GFPK, CircuitKind.ADDMULT_GFPK, CircuitKind.CMULT_GFPK)


def formula_keys() -> list[Key]:
    return list(_REGISTRY)


def formula(
    kind: CircuitKind,
    n: Optional[int] = None,
    family: Optional[AdderFamily] = None,
    controls: int = 0,
    k: Optional[int] = None,
    l: Optional[int] = None,
) -> ResourceEstimate:
    """
    Valor exacto de la fórmula para el tipo de circuito.
    Para GF(p^k) se pasan k y l (n = k·l); para el resto, n.
    """
    kind = CircuitKind(kind)
    family = AdderFamily(family) if family is not None and kind.uses_family else None
    if kind.uses_family and family is None:
        raise OutOfDomain(f"{kind.value} requiere una familia de sumador")
    key = (kind, family, controls)
    if key not in _REGISTRY:
        raise OutOfDomain(f"sin fórmula para {kind.value} familia={family} controles={controls}")

    if kind in _EXTENSION_KINDS:
        if k is None or l is None:
            raise OutOfDomain(f"{kind.value} requiere k y l")
        if k < 1 or l < 2:
            raise OutOfDomain(f"se requiere k ≥ 1 y l ≥ 2 (p > 2), recibido k={k}, l={l}")
        if n is not None and n != k * l:
            raise OutOfDomain(f"n={n} no coincide con k·l={k * l}")
        n = k * l
    elif n is None:
        raise OutOfDomain(f"{kind.value} requiere n")
    if n < _MIN_N[key]:
        raise OutOfDomain(f"{kind.value} solo es válida para n ≥ {_MIN_N[key]} (n={n})")
    return _REGISTRY[key](n, k or 0, l or 0)


# Parámetros por cuerpo
FIELD_KINDS = {
    "prime": {"adder": CircuitKind.MOD_ADDER_GFP, "addmult": CircuitKind.ADDMULT_GFP, "cmult": CircuitKind.CMULT_GFP},
    "binary": {"adder": CircuitKind.ADDER_GF2N, "addmult": CircuitKind.ADDMULT_GF2N, "cmult": CircuitKind.CMULT_GF2N},
    "extension": {"adder": CircuitKind.ADDER_GFPK, "addmult": CircuitKind.ADDMULT_GFPK, "cmult": CircuitKind.CMULT_GFPK},
}


def field_params(spec: FieldSpec) -> dict[str, int]:
    """n para GF(p) y GF(2^n); k y l para GF(p^k)"""
    if isinstance(spec, ExtensionField):
        return {"k": spec.k, "l": spec.coeff_bits}
    return {"n": spec.bit_width}


def field_formula(spec: FieldSpec, kind: str, family: Optional[AdderFamily] = None, controls: int = 0) -> ResourceEstimate:
    """Fórmula del circuito 'adder' | 'addmult' | 'cmult' para este cuerpo"""
    try:
        circuit_kind = FIELD_KINDS[spec.kind][kind]
    except KeyError as e:
        raise OutOfDomain(f"sin fórmula para {kind} sobre {spec.kind}") from e
    return formula(circuit_kind, family=family, controls=controls, **field_params(spec))
