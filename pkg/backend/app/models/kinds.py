"""
Tipos de compuerta, familias de sumador y tipos de circuito
Tablas de referencia del conjunto elemental de compuertas
"""

from enum import Enum


class GateKind(str, Enum):
    """Conjunto elemental: NOT con hasta 4 controles, fase con hasta 2, Hadamard"""

    N = "N"
    CN = "CN"
    C2N = "C2N"
    C3N = "C3N"
    C4N = "C4N"
    P = "P"
    CP = "CP"
    C2P = "C2P"
    H = "H"

    @property
    def arity(self) -> int:
        """Número de controles"""
        return GATE_ARITY[self]

    @property
    def is_not(self) -> bool:
        return self in NOT_FAMILY

    @property
    def is_phase(self) -> bool:
        return self in PHASE_FAMILY

    @classmethod
    def not_with(cls, controls: int) -> "GateKind":
        if not 0 <= controls < len(NOT_FAMILY):
            raise ValueError(f"NOT con {controls} controles no es elemental")
        return NOT_FAMILY[controls]

    @classmethod
    def phase_with(cls, controls: int) -> "GateKind":
        if not 0 <= controls < len(PHASE_FAMILY):
            raise ValueError(f"Fase con {controls} controles no es elemental")
        return PHASE_FAMILY[controls]


class AdderFamily(str, Enum):
    """Familias de sumador: acarreo-suma y sumador en base de Fourier"""

    CARRY_SUM = "carry-sum"
    PHI = "phi"


class CircuitKind(str, Enum):
    """Un valor por cada circuito con fórmula cerrada de recursos"""

    CARRY_SUM_ADDER = "carry_sum_adder"
    PHI_ADDER = "phi_adder"
    QFT = "qft"
    MOD_ADDER_GFP = "mod_adder_gfp"
    ADDMULT_GFP = "addmult_gfp"
    CSWAP = "cswap"
    CMULT_GFP = "cmult_gfp"
    ADDER_GF2N = "adder_gf2n"
    ADDMULT_GF2N = "addmult_gf2n"
    CMULT_GF2N = "cmult_gf2n"
    ADDER_GFPK = "adder_gfpk"
    ADDMULT_GFPK = "addmult_gfpk"
    CMULT_GFPK = "cmult_gfpk"

    @property
    def uses_family(self) -> bool:
        return self in FAMILY_KINDS

    @property
    def allowed_controls(self) -> tuple[int, ...]:
        return CONTROL_ARITIES.get(self, (0,))


# Tablas de referencia
NOT_FAMILY = (GateKind.N, GateKind.CN, GateKind.C2N, GateKind.C3N, GateKind.C4N)
PHASE_FAMILY = (GateKind.P, GateKind.CP, GateKind.C2P)

GATE_ARITY = {
    GateKind.N: 0, GateKind.CN: 1, GateKind.C2N: 2, GateKind.C3N: 3, GateKind.C4N: 4,
    GateKind.P: 0, GateKind.CP: 1, GateKind.C2P: 2,
    GateKind.H: 0,
}

# Orden de columnas en tablas y CSV
GATE_COLUMNS = (
    GateKind.N, GateKind.CN, GateKind.C2N, GateKind.C3N, GateKind.C4N,
    GateKind.P, GateKind.CP, GateKind.C2P, GateKind.H,
)

FAMILY_KINDS = frozenset({
    CircuitKind.MOD_ADDER_GFP, CircuitKind.ADDMULT_GFP, CircuitKind.CMULT_GFP,
    CircuitKind.ADDER_GFPK, CircuitKind.ADDMULT_GFPK, CircuitKind.CMULT_GFPK,
})

CONTROL_ARITIES = {
    CircuitKind.CARRY_SUM_ADDER: (0, 1, 2),
    CircuitKind.PHI_ADDER: (0, 1, 2),
    CircuitKind.MOD_ADDER_GFP: (0, 2),
    CircuitKind.ADDER_GF2N: (0, 2),
    CircuitKind.ADDER_GFPK: (0, 2),
}
