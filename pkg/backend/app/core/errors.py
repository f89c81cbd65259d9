"""
Jerarquía de errores del toolkit
Cada error lleva un código de salida, como HTTPException lleva status_code
"""


class GFQuantError(Exception):
    """Error base con detalle legible y código de salida del CLI"""

    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# Cuerpos
class FieldSpecError(GFQuantError):
    pass


class NotPrime(FieldSpecError):
    pass


class ReducibleModulus(FieldSpecError):
    pass


class DegreeMismatch(FieldSpecError):
    pass


class NonMonicModulus(FieldSpecError):
    pass


class FieldSpecSyntaxError(FieldSpecError):
    pass


# Elementos
class ElementError(GFQuantError):
    pass


class InvalidElement(ElementError):
    pass


class NotInvertible(ElementError):
    pass


# Circuitos
class CircuitError(GFQuantError):
    pass


class ArityOverflow(CircuitError):
    pass


class QubitOutOfRange(CircuitError):
    pass


class UnknownRegister(CircuitError):
    pass


class CircuitSyntaxError(CircuitError):
    def __init__(self, line: int, detail: str):
        super().__init__(f"línea {line}: {detail}")
        self.line = line


# Constructores
class BuilderError(GFQuantError):
    pass


class WidthTooSmall(BuilderError):
    pass


class OperandOutOfRange(BuilderError):
    pass


# Simulación
class SimulationError(GFQuantError):
    pass


class NonClassicalGate(SimulationError):
    pass


class WidthCapExceeded(SimulationError):
    exit_code = 4


class NotBasisOutput(SimulationError):
    exit_code = 3


class MissingAssignment(SimulationError):
    pass


# Recursos
class ResourceError(GFQuantError):
    pass


class OutOfDomain(ResourceError):
    pass


class EmptySamples(ResourceError):
    pass


class VerificationFailed(GFQuantError):
    exit_code = 1
