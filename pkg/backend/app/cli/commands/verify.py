"""
Comando verify: barrido contra el oráculo clásico del cuerpo
"""

from typing import Optional

import click

from app.cli import handle_errors
from app.core.errors import VerificationFailed
from app.gfcore import parse_field_spec
from app.models.kinds import AdderFamily
from app.verify import verify_field


@click.command("verify")
@click.option("--field", "field_text", required=True, help="Cuerpo a verificar")
@click.option("--family", type=click.Choice([f.value for f in AdderFamily]), default=AdderFamily.CARRY_SUM.value, show_default=True)
@click.option("--exhaustive", is_flag=True, help="Todo a ≠ 0, todo x, c ∈ {0, 1}")
@click.option("--samples", type=click.IntRange(min=1), help="Cantidad de casos (a, c, x) al azar")
@click.option("--seed", type=click.IntRange(min=0), help="Semilla del generador")
@click.option("--counts", is_flag=True, help="Incluir las leyes de promedio exacto de conteos")
@click.option("--workers", type=click.IntRange(1, 64), help="Hilos para el barrido")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@handle_errors
def verify(field_text: str, family: str, exhaustive: bool, samples: Optional[int], seed: Optional[int],
           counts: bool, workers: Optional[int], fmt: str):
    """Verificar multiplicación controlada y add-mult; código 1 si algún chequeo falla"""
    if exhaustive and samples:
        raise click.UsageError("--exhaustive y --samples son excluyentes")
    spec = parse_field_spec(field_text)
    report = verify_field(
        spec,
        AdderFamily(family),
        exhaustive=not samples,
        samples=samples,
        seed=seed,
        counts=counts,
        workers=workers,
    )
    if fmt == "json":
        click.echo(report.model_dump_json(indent=2))
    else:
        click.echo(report.render_text(), nl=False)
    if not report.passed:
        failed = [c.name for c in report.checks if not c.passed]
        raise VerificationFailed(f"chequeos fallidos: {', '.join(failed)}")
