"""
Formato de texto de circuitos
QUBITS, REG y una compuerta por línea; '#' inicia un comentario
"""

from fractions import Fraction
from typing import Mapping, Optional

from app.core.errors import CircuitSyntaxError
from app.models.circuit import Circuit, Gate, Register
from app.models.kinds import GateKind


def format_gate(gate: Gate) -> str:
    controls = " ".join(str(q) for q in gate.controls)
    if gate.kind == GateKind.H:
        return f"H {gate.target}"
    if gate.kind.is_phase:
        phase = f"{gate.phase.numerator}/{gate.phase.denominator}"
        return f"{gate.kind.value} {phase} ; {controls} -> {gate.target}".replace(";  ->", "; ->")
    return f"{gate.kind.value} {gate.target} ; {controls}".rstrip()


def serialize(c: Circuit, header: Optional[Mapping[str, object]] = None) -> str:
    lines = []
    if header:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in header.items()))
    lines.append(f"QUBITS {c.qubit_count}")
    for reg in c.registers:
        lines.append(f"REG {reg.name} {reg.start} {reg.length}")
    lines.extend(format_gate(g) for g in c.gates)
    return "\n".join(lines) + "\n"


def _ints(text: str, line: int) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split())
    except ValueError as e:
        raise CircuitSyntaxError(line, f"índice de qubit inválido en {text!r}") from e


def _parse_gate(text: str, line: int) -> Gate:
    head, _, rest = text.partition(" ")
    try:
        kind = GateKind(head)
    except ValueError as e:
        raise CircuitSyntaxError(line, f"compuerta desconocida {head!r}") from e

    try:
        if kind == GateKind.H:
            (target,) = _ints(rest, line)
            return Gate(kind, target)
        if kind.is_phase:
            phase_text, sep, tail = rest.partition(";")
            controls_text, arrow, target_text = tail.partition("->")
            if not sep or not arrow:
                raise CircuitSyntaxError(line, "se esperaba '<fase> ; <controles> -> <objetivo>'")
            num, slash, den = phase_text.strip().partition("/")
            if not slash:
                raise CircuitSyntaxError(line, f"fase sin forma num/den: {phase_text.strip()!r}")
            (target,) = _ints(target_text, line)
            return Gate(kind, target, _ints(controls_text, line), Fraction(int(num), int(den)))
        target_text, sep, controls_text = rest.partition(";")
        if not sep:
            raise CircuitSyntaxError(line, "se esperaba '<objetivo> ; <controles>'")
        (target,) = _ints(target_text, line)
        return Gate(kind, target, _ints(controls_text, line))
    except CircuitSyntaxError:
        raise
    except (ValueError, ZeroDivisionError) as e:
        raise CircuitSyntaxError(line, str(e)) from e


def parse(text: str) -> Circuit:
    qubits: Optional[int] = None
    registers: list[Register] = []
    gates: list[Gate] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("QUBITS"):
            if qubits is not None:
                raise CircuitSyntaxError(number, "QUBITS repetido")
            values = _ints(line[len("QUBITS"):], number)
            if len(values) != 1:
                raise CircuitSyntaxError(number, "se esperaba 'QUBITS <cantidad>'")
            qubits = values[0]
        elif line.startswith("REG "):
            parts = line.split()
            if len(parts) != 4:
                raise CircuitSyntaxError(number, "se esperaba 'REG <nombre> <inicio> <largo>'")
            start, length = _ints(" ".join(parts[2:]), number)
            registers.append(Register(parts[1], start, length))
        else:
            if qubits is None:
                raise CircuitSyntaxError(number, "falta la cabecera QUBITS")
            gates.append(_parse_gate(line, number))
    if qubits is None:
        raise CircuitSyntaxError(1, "circuito vacío: falta QUBITS")
    return Circuit(qubits, tuple(registers), tuple(gates))


def read_header(text: str) -> dict[str, str]:
    """Metadatos 'clave=valor' de los comentarios iniciales"""
    meta: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line.startswith("#"):
            break
        for token in line[1:].split():
            key, sep, value = token.partition("=")
            if sep:
                meta[key] = value
    return meta
