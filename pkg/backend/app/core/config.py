"""
Configuración del toolkit desde variables de entorno
Aritmética cuántica sobre cuerpos finitos
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Parámetros globales; prefijo GFQ_ en el entorno o en .env"""

    model_config = SettingsConfigDict(env_prefix="GFQ_", env_file=".env", extra="ignore")

    statevector_max_qubits: int = Field(26, ge=1, le=34, description="Límite de ancho para el vector de estado")
    basis_tolerance: float = Field(1e-9, gt=0, lt=0.5, description="Tolerancia de fidelidad al leer un estado base")
    default_seed: int = Field(20240229, ge=0, description="Semilla por defecto del generador")
    log_level: str = Field("WARNING", description="Nivel de logging")
    verify_workers: int = Field(1, ge=1, le=64, description="Hilos para barridos de verificación")
    exhaustive_max_order: int = Field(4096, ge=2, description="Orden máximo del cuerpo en modo exhaustivo")


@lru_cache
def get_settings() -> Settings:
    """Instancia única de configuración"""
    return Settings()
