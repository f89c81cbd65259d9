"""
Dependencias compartidas por los comandos
Configuración y generador aleatorio reproducible
"""

from typing import Optional

import numpy as np

from app.core.config import Settings, get_settings

RNG_NAME = "PCG64"


def get_rng(seed: Optional[int] = None, settings: Optional[Settings] = None) -> tuple[np.random.Generator, int]:
    """
    Generador con nombre y semilla explícita.
    Devuelve también la semilla efectiva para imprimirla en los reportes.
    """
    settings = settings or get_settings()
    effective = settings.default_seed if seed is None else seed
    return np.random.Generator(np.random.PCG64(effective)), effective
