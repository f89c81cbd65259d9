"""
Schemas de Pydantic para la descripción de cuerpos finitos
Valida la forma; las propiedades algebraicas las revisa gfcore.validate_field
"""

from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class _FieldBase(BaseModel):
    model_config = ConfigDict(frozen=True)

    @property
    def order(self) -> int:
        raise NotImplementedError

    @property
    def bit_width(self) -> int:
        """Qubits por elemento (n en las fórmulas)"""
        raise NotImplementedError


class PrimeField(_FieldBase):
    """GF(p) con p primo impar"""

    kind: Literal["prime"] = "prime"
    p: int = Field(..., ge=3, description="Primo impar")

    @property
    def order(self) -> int:
        return self.p

    @property
    def bit_width(self) -> int:
        return self.p.bit_length()


class BinaryField(_FieldBase):
    """GF(2^n) con módulo Q codificado como entero, bit i = coeficiente de x^i"""

    kind: Literal["binary"] = "binary"
    n: int = Field(..., ge=2, le=30, description="Grado de la extensión")
    modulus: int = Field(..., ge=1, description="Polinomio Q sobre GF(2), bit n incluido")

    @property
    def order(self) -> int:
        return 1 << self.n

    @property
    def bit_width(self) -> int:
        return self.n


class ExtensionField(_FieldBase):
    """GF(p^k); modulus guarda los coeficientes de Q de menor a mayor grado"""

    kind: Literal["extension"] = "extension"
    p: int = Field(..., ge=3, description="Característica")
    k: int = Field(..., ge=2, le=12, description="Grado de la extensión")
    modulus: tuple[int, ...] = Field(..., min_length=2, description="Coeficientes c_0..c_k")

    @field_validator("modulus")
    @classmethod
    def quitar_ceros_altos(cls, v):
        """Recortar ceros en el grado más alto"""
        v = list(v)
        while len(v) > 1 and v[-1] == 0:
            v.pop()
        return tuple(v)

    @model_validator(mode="after")
    def validar_coeficientes(self):
        """Cada coeficiente de Q debe estar en [0, p)"""
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError(f"Coeficientes de Q fuera de [0, {self.p})")
        return self

    @property
    def coeff_bits(self) -> int:
        """l = ⌈lg p⌉"""
        return (self.p - 1).bit_length()

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def bit_width(self) -> int:
        return self.k * self.coeff_bits


FieldSpec = Annotated[Union[PrimeField, BinaryField, ExtensionField], Field(discriminator="kind")]
