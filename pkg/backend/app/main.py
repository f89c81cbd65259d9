"""
Aritmética cuántica sobre cuerpos finitos
Aplicación principal de línea de comandos
"""

import click

from app.cli.commands import build, estimate, simulate, verify
from app.core.config import get_settings
from app.core.log import configure_logging


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Logging en nivel DEBUG")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Nivel de logging (por defecto GFQ_LOG_LEVEL)")
def cli(verbose: bool, log_level: str):
    """Construir, simular, verificar y estimar circuitos de aritmética sobre GF(p), GF(2^n) y GF(p^k)"""
    configure_logging("DEBUG" if verbose else log_level or get_settings().log_level)


# Subcomandos
cli.add_command(build)
cli.add_command(simulate)
cli.add_command(verify)
cli.add_command(estimate)


if __name__ == "__main__":
    cli()
