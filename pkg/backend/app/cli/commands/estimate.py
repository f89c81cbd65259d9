"""
Comando estimate: tablas de complejidad, filas de fórmulas y comparación empírica
"""

import logging
from typing import Optional

import click

from app.cli import handle_errors
from app.core.dependencies import RNG_NAME, get_rng
from app.core.errors import OutOfDomain
from app.gfcore import parse_field_spec
from app.models.kinds import AdderFamily, CircuitKind
from app.resources import (
    FIELD_KINDS,
    FORMULA_HEADER,
    Table,
    compare,
    family_comparison,
    field_params,
    formula,
    formula_row,
    formula_table,
    sample_average,
    table1,
    table2,
)
from app.schemas.fields import ExtensionField, FieldSpec
from app.schemas.resources import CompareReport, format_rational

LOGGER = logging.getLogger(__name__)

FIELD_LEVEL_KINDS = ("adder", "addmult", "cmult")
KIND_CHOICES = (*FIELD_LEVEL_KINDS, *(k.value for k in CircuitKind))


def resolve_kind(kind: str, field_type: str) -> CircuitKind:
    """adder | addmult | cmult dependen del tipo de cuerpo; el resto es un CircuitKind directo"""
    if kind in FIELD_LEVEL_KINDS:
        return FIELD_KINDS[field_type][kind]
    return CircuitKind(kind)


def kind_params(kind: CircuitKind, spec: FieldSpec) -> dict[str, int]:
    if kind in FIELD_KINDS["extension"].values():
        if not isinstance(spec, ExtensionField):
            raise OutOfDomain(f"{kind.value} requiere un cuerpo p^k")
        return field_params(spec)
    if isinstance(spec, ExtensionField):
        return {"n": spec.coeff_bits}
    return {"n": spec.bit_width}


def parse_sweep(text: str) -> range:
    start, sep, stop = text.partition(":")
    try:
        lo, hi = int(start), int(stop)
    except ValueError:
        raise click.BadParameter(f"se esperaba A:B, recibido {text!r}", param_hint="--sweep") from None
    if not sep or lo > hi:
        raise click.BadParameter(f"rango vacío o mal formado: {text!r}", param_hint="--sweep")
    return range(lo, hi + 1)


def deviation_table(report: CompareReport) -> Table:
    rows = [(
        "width",
        str(report.width_formula),
        "/".join(str(w) for w in report.widths),
        "",
        "",
        "yes" if report.width_ok else "no",
    )]
    for row in report.rows:
        relative = "-" if row.relative is None else f"{row.relative:+.4f}"
        rows.append((
            row.metric,
            format_rational(row.formula),
            format_rational(row.empirical),
            format_rational(row.absolute),
            relative,
            "yes" if row.exact else "no",
        ))
    return Table(("metric", "formula", "empirical", "absolute", "relative", "exact"), tuple(rows))


def _family_for(kind: CircuitKind, family: str) -> Optional[AdderFamily]:
    return AdderFamily(family) if kind.uses_family else None


@click.command("estimate")
@click.option("--table", "table_id", type=click.Choice(["1", "2"]), help="Tabla resumen de complejidad")
@click.option("--p", "p", type=int, help="Primo para evaluar los anchos de la tabla 2")
@click.option("--k", "k", type=int, help="Grado de extensión (tabla 2 y barridos p^k)")
@click.option("--bits", type=click.IntRange(min=1), help="n para evaluar los anchos de la tabla 1")
@click.option("--field", "field_text", help="Cuerpo para las filas de fórmulas")
@click.option("--kind", type=click.Choice(KIND_CHOICES), help="Tipo de circuito")
@click.option("--family", type=click.Choice([f.value for f in AdderFamily]), default=AdderFamily.CARRY_SUM.value, show_default=True)
@click.option("--controls", type=click.IntRange(0, 2), default=0, show_default=True)
@click.option("--empirical", type=click.IntRange(min=1), help="Comparar contra N circuitos con operandos al azar")
@click.option("--seed", type=click.IntRange(min=0), help="Semilla del muestreo")
@click.option("--odd-modulus", is_flag=True, help="Fijar en 1 el bit bajo de los módulos muestreados")
@click.option("--sweep", help="Rango A:B de n (o de l para p^k)")
@click.option("--field-type", type=click.Choice(list(FIELD_KINDS)), help="Tipo de cuerpo del barrido")
@click.option("--compare-families", is_flag=True, help="Ancho, tamaño y profundidad de ambas familias")
@click.option("--format", "fmt", type=click.Choice(["text", "csv"]), default="text", show_default=True)
@handle_errors
def estimate(table_id, p, k, bits, field_text, kind, family, controls, empirical, seed, odd_modulus, sweep,
             field_type, compare_families, fmt):
    """Estimaciones de recursos a partir de las fórmulas cerradas"""
    forms = [x for x in (table_id, field_text, sweep) if x is not None]
    if len(forms) != 1:
        raise click.UsageError("se requiere exactamente una de --table, --field o --sweep")

    if table_id == "1":
        click.echo(table1(bits).render(fmt), nl=False)
        return
    if table_id == "2":
        click.echo(table2(p, k).render(fmt), nl=False)
        return

    if kind is None:
        raise click.UsageError("--kind es obligatorio con --field y --sweep")

    if sweep is not None:
        if field_type is None:
            raise click.UsageError("--sweep requiere --field-type")
        circuit_kind = resolve_kind(kind, field_type)
        extension = circuit_kind in FIELD_KINDS["extension"].values()
        if extension and k is None:
            raise click.UsageError("los barridos p^k requieren --k")
        chosen = _family_for(circuit_kind, family)
        rows = []
        for value in parse_sweep(sweep):
            params = {"k": k, "l": value} if extension else {"n": value}
            est = formula(circuit_kind, family=chosen, controls=controls, **params)
            rows.append((str(value), *formula_row(circuit_kind, chosen, controls, est)))
        header = ("l" if extension else "n", *FORMULA_HEADER)
        click.echo(Table(header, tuple(rows)).render(fmt), nl=False)
        return

    spec = parse_field_spec(field_text)
    circuit_kind = resolve_kind(kind, spec.kind)
    params = kind_params(circuit_kind, spec)
    if compare_families:
        click.echo(family_comparison(circuit_kind, controls=controls, **params).render(fmt), nl=False)
        return

    chosen = _family_for(circuit_kind, family)
    est = formula(circuit_kind, family=chosen, controls=controls, **params)
    click.echo(formula_table([(circuit_kind, chosen, controls, est)]).render(fmt), nl=False)

    if empirical:
        rng, effective_seed = get_rng(seed)
        LOGGER.info("muestreo de %d circuitos %s, semilla %d", empirical, circuit_kind.value, effective_seed)
        samples = sample_average(
            circuit_kind, empirical, rng, family=chosen, controls=controls, odd_modulus=odd_modulus, **params
        )
        report = compare(circuit_kind, samples, family=chosen, controls=controls, **params)
        click.echo(
            f"# compare kind={circuit_kind.value} samples={empirical} seed={effective_seed} rng={RNG_NAME}"
            + (" modulus=odd" if odd_modulus else "")
        )
        click.echo(deviation_table(report).render(fmt), nl=False)
