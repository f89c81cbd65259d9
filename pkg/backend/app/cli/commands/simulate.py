"""
Comando simulate: ejecutar un circuito sobre una entrada clásica
"""

import logging

import click

from app.circuit import parse
from app.cli import handle_errors
from app.core.config import get_settings
from app.sim import encode_registers, layout_of, read_all, simulate_basis

LOGGER = logging.getLogger(__name__)

# registros que parten en |0⟩ si no se asignan
DEFAULT_ZERO = ("z", "anc")
# registros de control: entran y salen sin cambios, no se imprimen por omisión
CONTROL_REGISTERS = frozenset({"c", "ctl"})


def parse_assignments(items: tuple[str, ...]) -> dict[str, int]:
    """'c=1,x=4' 'z=2' → {'c': 1, 'x': 4, 'z': 2}"""
    values: dict[str, int] = {}
    for item in items:
        for token in filter(None, item.split(",")):
            name, sep, raw = token.partition("=")
            if not sep or not name:
                raise click.BadParameter(f"se esperaba nombre=valor, recibido {token!r}", param_hint="ASSIGNMENT")
            try:
                values[name.strip()] = int(raw.strip(), 0)
            except ValueError:
                raise click.BadParameter(f"valor no entero en {token!r}", param_hint="ASSIGNMENT") from None
    return values


@click.command("simulate")
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.argument("assignments", nargs=-1)
@click.option("--show-controls", is_flag=True, help="Imprimir también los registros de control c y ctl")
@handle_errors
def simulate(path: str, assignments: tuple[str, ...], show_controls: bool):
    """Simular el circuito de PATH e imprimir los registros como nombre=valor"""
    with open(path, encoding="utf-8") as fh:
        circuit = parse(fh.read())
    values = parse_assignments(assignments)
    state = encode_registers(circuit, values, defaults=DEFAULT_ZERO)
    result = simulate_basis(circuit, state, get_settings())
    LOGGER.debug("entrada %d → salida %d", state, result)
    hidden = set() if show_controls else CONTROL_REGISTERS & layout_of(circuit).keys()
    click.echo(" ".join(f"{name}={value}" for name, value in read_all(result, circuit).items() if name not in hidden))
