"""
Representación intermedia de circuitos
Compuertas, registros con nombre y circuitos inmutables
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Union

from app.core.errors import QubitOutOfRange, UnknownRegister
from app.models.kinds import GATE_COLUMNS, GateKind

Number = Union[int, Fraction]


@dataclass(frozen=True, slots=True)
class Gate:
    """Compuerta elemental; la fase está en vueltas (fracción de 2π)"""

    kind: GateKind
    target: int
    controls: tuple[int, ...] = ()
    phase: Optional[Fraction] = None

    def __post_init__(self):
        controls = tuple(sorted(self.controls))
        object.__setattr__(self, "controls", controls)
        if len(set(controls)) != len(controls):
            raise ValueError(f"Controles repetidos en {self.kind.value}: {controls}")
        if self.target in controls:
            raise ValueError(f"El objetivo {self.target} también es control")
        if len(controls) != self.kind.arity:
            raise ValueError(f"{self.kind.value} espera {self.kind.arity} controles, recibió {len(controls)}")
        if min((self.target, *controls)) < 0:
            raise ValueError("Índices de qubit negativos")
        if self.kind.is_phase:
            if self.phase is None:
                raise ValueError(f"{self.kind.value} requiere una fase")
            phase = Fraction(self.phase) % 1
            if phase == 0:
                raise ValueError("No se emiten compuertas de fase nula")
            object.__setattr__(self, "phase", phase)
        elif self.phase is not None:
            raise ValueError(f"{self.kind.value} no lleva fase")

    @property
    def qubits(self) -> tuple[int, ...]:
        return (*self.controls, self.target)

    def inverted(self) -> Optional["Gate"]:
        """Inversa; None si la fase resultante es nula"""
        if not self.kind.is_phase:
            return self
        phase = (1 - self.phase) % 1
        if phase == 0:
            return None
        return Gate(self.kind, self.target, self.controls, phase)


@dataclass(frozen=True, slots=True)
class Register:
    """Ventana contigua de qubits con nombre"""

    name: str
    start: int
    length: int

    @property
    def qubits(self) -> range:
        return range(self.start, self.start + self.length)


@dataclass(frozen=True)
class Circuit:
    """Lista ordenada de compuertas sobre un layout declarado"""

    qubit_count: int
    registers: tuple[Register, ...]
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "registers", tuple(self.registers))
        object.__setattr__(self, "gates", tuple(self.gates))
        cursor = 0
        for reg in sorted(self.registers, key=lambda r: r.start):
            if reg.start != cursor or reg.length <= 0:
                raise QubitOutOfRange(f"Registro {reg.name} no es contiguo con el layout ({reg.start}, {reg.length})")
            cursor += reg.length
        if cursor != self.qubit_count:
            raise QubitOutOfRange(f"Los registros cubren {cursor} qubits de {self.qubit_count}")
        names = [r.name for r in self.registers]
        if len(set(names)) != len(names):
            raise QubitOutOfRange(f"Nombres de registro repetidos: {names}")
        for gate in self.gates:
            if max(gate.qubits) >= self.qubit_count:
                raise QubitOutOfRange(f"{gate.kind.value} usa el qubit {max(gate.qubits)} con ancho {self.qubit_count}")

    @property
    def width(self) -> int:
        return self.qubit_count

    def register(self, name: str) -> Register:
        for reg in self.registers:
            if reg.name == name:
                return reg
        raise UnknownRegister(f"Registro desconocido: {name}")

    def with_gates(self, gates: Iterable[Gate]) -> "Circuit":
        return Circuit(self.qubit_count, self.registers, tuple(gates))

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self) -> Iterator[Gate]:
        return iter(self.gates)


@dataclass(frozen=True)
class GateHistogram:
    """Conteo por tipo de compuerta; racionales exactos para fórmulas"""

    counts: Mapping[GateKind, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for kind, value in self.counts.items():
            value = Fraction(value)
            if value < 0:
                raise ValueError(f"Conteo negativo para {kind.value}")
            if value:
                clean[GateKind(kind)] = value
        object.__setattr__(self, "counts", clean)

    @classmethod
    def of(cls, **counts: Number) -> "GateHistogram":
        return cls({GateKind(k): v for k, v in counts.items()})

    def __getitem__(self, kind: GateKind) -> Fraction:
        return self.counts.get(kind, Fraction(0))

    def __add__(self, other: "GateHistogram") -> "GateHistogram":
        merged = dict(self.counts)
        for kind, value in other.counts.items():
            merged[kind] = merged.get(kind, Fraction(0)) + value
        return GateHistogram(merged)

    def scaled(self, factor: Number) -> "GateHistogram":
        return GateHistogram({k: v * factor for k, v in self.counts.items()})

    def total(self) -> Fraction:
        return sum(self.counts.values(), Fraction(0))

    def as_row(self) -> tuple[Fraction, ...]:
        return tuple(self[k] for k in GATE_COLUMNS)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GateHistogram):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self) -> int:
        return hash(frozenset(self.counts.items()))
