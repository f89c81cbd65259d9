"""
Utilidades comunes de los comandos del CLI
Traducción de errores del dominio a códigos de salida
"""

import functools
import logging
import sys

import click
from pydantic import ValidationError

from app.core.errors import GFQuantError

LOGGER = logging.getLogger(__name__)

USAGE_EXIT = 2


def abort(detail: str, exit_code: int = USAGE_EXIT) -> None:
    click.echo(f"Error: {detail}", err=True)
    sys.exit(exit_code)


def handle_errors(command):
    """Cada error del dominio termina con su propio código de salida"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except GFQuantError as e:
            LOGGER.debug("%s: %s", type(e).__name__, e.detail)
            abort(e.detail, e.exit_code)
        except ValidationError as e:
            abort(f"parámetros inválidos: {e.errors()[0]['msg']}")
        except Exception as e:
            LOGGER.exception("error inesperado en %s", command.__name__)
            abort(f"error interno: {e}")

    return wrapper
