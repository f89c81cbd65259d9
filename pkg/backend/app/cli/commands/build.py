"""
Comando build: construir un circuito y escribirlo en formato de texto
"""

import logging
from typing import Optional

import click

from app.builders import BUILD_KINDS, build_circuit
from app.circuit import serialize
from app.cli import handle_errors
from app.gfcore import format_field_spec, parse_field_spec
from app.models.kinds import AdderFamily

LOGGER = logging.getLogger(__name__)

FAMILIES = [f.value for f in AdderFamily]


@click.command("build")
@click.option("--field", "field_text", help="Cuerpo: p:7 | 2^3:Q=1011 | p^k:3,2,Q=1,0,1")
@click.option("--kind", type=click.Choice(BUILD_KINDS), required=True, help="Tipo de circuito")
@click.option("--a", "a", type=int, default=0, show_default=True, help="Operando clásico")
@click.option("--family", type=click.Choice(FAMILIES), default=AdderFamily.CARRY_SUM.value, show_default=True)
@click.option("--controls", type=click.IntRange(0, 2), default=0, show_default=True)
@click.option("--bits", type=click.IntRange(min=1), help="Ancho n para qft, cswap e int-adder")
@click.option("-o", "--output", type=click.Path(dir_okay=False, writable=True), help="Archivo de salida (stdout si falta)")
@handle_errors
def build(field_text: Optional[str], kind: str, a: int, family: str, controls: int, bits: Optional[int], output: Optional[str]):
    """Construir un circuito y escribirlo con su cabecera de metadatos"""
    spec = parse_field_spec(field_text) if field_text else None
    circuit = build_circuit(kind, spec, a, AdderFamily(family), controls, bits)

    meta = {
        "kind": kind,
        "field": format_field_spec(spec) if spec else "-",
        "a": a,
        "family": family,
        "controls": controls,
    }
    if bits is not None:
        meta["bits"] = bits
    header, body = serialize(circuit, meta).split("\n", 1)
    text = f"{header}\n# width={circuit.width}\n{body}"

    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
        LOGGER.info("%s escrito en %s: %d qubits, %d compuertas", kind, output, circuit.width, len(circuit))
    else:
        click.echo(text, nl=False)
