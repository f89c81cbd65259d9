"""
Tablas resumen de complejidad
Enteros y cuerpos finitos, en texto alineado o CSV
"""

import csv
import io
from dataclasses import dataclass
from typing import Optional, Sequence

from app.core.errors import OutOfDomain
from app.gfcore import is_prime
from app.models.kinds import GATE_COLUMNS, AdderFamily, CircuitKind
from app.models.resources import ResourceEstimate
from app.resources.formulas import formula
from app.schemas.resources import format_rational

CS = AdderFamily.CARRY_SUM
PHI = AdderFamily.PHI


@dataclass(frozen=True)
class Table:
    header: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def render(self, fmt: str = "text") -> str:
        if fmt == "csv":
            return render_csv(self.header, self.rows)
        if fmt == "text":
            return render_text(self.header, self.rows)
        raise OutOfDomain(f"formato desconocido: {fmt}")


def render_csv(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [max(len(str(r[i])) for r in (header, *rows)) for i in range(len(header))]
    lines = ["  ".join(str(cell).ljust(w) for cell, w in zip(line, widths)).rstrip() for line in (header, *rows)]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


# Tabla de sumadores de enteros
_TABLE1 = (
    ("carry-sum adder", CircuitKind.CARRY_SUM_ADDER, 0, "2n", "O(n)", "O(n)"),
    ("phi-adder", CircuitKind.PHI_ADDER, 0, "n+1", "O(n)", "1"),
    ("doubly controlled carry-sum adder", CircuitKind.CARRY_SUM_ADDER, 2, "2n+2", "O(n)", "O(n)"),
    ("doubly controlled phi-adder", CircuitKind.PHI_ADDER, 2, "n+3", "O(n)", "O(n)"),
)


def table1(n: Optional[int] = None) -> Table:
    """Con n, el ancho se evalúa con las fórmulas; sin n queda simbólico"""
    rows = []
    for label, kind, controls, width, size, depth in _TABLE1:
        if n is not None:
            width = str(formula(kind, n=n, controls=controls).width)
        rows.append((label, width, size, depth))
    return Table(("adder", "width", "size", "depth"), tuple(rows))


# Tabla de aritmética sobre cuerpos
TABLE2_COLUMNS = ("gfp-carry-sum", "gfp-phi", "gf2n", "gfpk-carry-sum", "gfpk-phi")

_TABLE2_SYMBOLIC = {
    ("adder", "width"): ("2l+1", "l+2", "n", "kl+k+l", "kl+2"),
    ("adder", "size"): ("O(l)", "O(l^2)", "O(n)", "O(kl)", "O(kl^2)"),
    ("adder", "depth"): ("O(l)", "O(l)", "1", "O(kl)", "O(kl)"),
    ("doubly controlled adder", "width"): ("2l+3", "l+4", "n+2", "kl+k+l+2", "kl+4"),
    ("doubly controlled adder", "size"): ("O(l)", "O(l^2)", "O(n)", "O(kl)", "O(kl^2)"),
    ("doubly controlled adder", "depth"): ("O(l)", "O(l)", "O(n)", "O(kl)", "O(kl)"),
    ("controlled multiplication", "width"): ("3l+2", "2l+3", "2n+1", "2kl+k+l+1", "2kl+3"),
    ("controlled multiplication", "size"): ("O(l^2)", "O(l^3)", "O(n^2)", "O(k^2l^2)", "O(k^2l^3)"),
    ("controlled multiplication", "depth"): ("O(l^2)", "O(l^2)", "O(n^2)", "O(k^2l^2)", "O(k^2l^2)"),
}


def _table2_widths(row: str, l: int, k: int) -> tuple[str, ...]:
    n = k * l
    if row == "controlled multiplication":
        estimates = (
            formula(CircuitKind.CMULT_GFP, n=l, family=CS),
            formula(CircuitKind.CMULT_GFP, n=l, family=PHI),
            formula(CircuitKind.CMULT_GF2N, n=n),
            formula(CircuitKind.CMULT_GFPK, family=CS, k=k, l=l),
            formula(CircuitKind.CMULT_GFPK, family=PHI, k=k, l=l),
        )
    else:
        controls = 2 if row == "doubly controlled adder" else 0
        estimates = (
            formula(CircuitKind.MOD_ADDER_GFP, n=l, family=CS, controls=controls),
            formula(CircuitKind.MOD_ADDER_GFP, n=l, family=PHI, controls=controls),
            formula(CircuitKind.ADDER_GF2N, n=n, controls=controls),
            formula(CircuitKind.ADDER_GFPK, family=CS, controls=controls, k=k, l=l),
            formula(CircuitKind.ADDER_GFPK, family=PHI, controls=controls, k=k, l=l),
        )
    return tuple(str(e.width) for e in estimates)


def table2(p: Optional[int] = None, k: Optional[int] = None) -> Table:
    """
    Anchos evaluados con l = ⌈lg p⌉ y n = k·l cuando se dan p y k.
    Tamaño y profundidad se expresan como clases asintóticas.
    """
    evaluated = p is not None or k is not None
    if evaluated:
        if p is None or k is None:
            raise OutOfDomain("table2 requiere p y k juntos")
        if p < 3 or not is_prime(p):
            raise OutOfDomain(f"p={p} debe ser un primo impar")
        if k < 1:
            raise OutOfDomain(f"k={k} debe ser ≥ 1")
        l = p.bit_length()
    rows = []
    for (row, metric), cells in _TABLE2_SYMBOLIC.items():
        if evaluated and metric == "width":
            cells = _table2_widths(row, l, k)
        rows.append((row, metric, *cells))
    return Table(("row", "metric", *TABLE2_COLUMNS), tuple(rows))


# Filas de fórmulas
FORMULA_HEADER = ("circuit_kind", "family", "controls", "width", *(g.value for g in GATE_COLUMNS), "depth")


def formula_row(kind: CircuitKind, family: Optional[AdderFamily], controls: int, est: ResourceEstimate) -> tuple[str, ...]:
    return (
        CircuitKind(kind).value,
        AdderFamily(family).value if family else "",
        str(controls),
        str(est.width),
        *(format_rational(v) for v in est.counts.as_row()),
        format_rational(est.depth),
    )


def formula_table(rows: Sequence[tuple[CircuitKind, Optional[AdderFamily], int, ResourceEstimate]]) -> Table:
    return Table(FORMULA_HEADER, tuple(formula_row(*r) for r in rows))


def family_comparison(kind: CircuitKind, **params) -> Table:
    """Ancho, tamaño total y profundidad de ambas familias para el mismo circuito"""
    kind = CircuitKind(kind)
    families = (CS, PHI) if kind.uses_family else (None,)
    rows = []
    for family in families:
        est = formula(kind, family=family, **params)
        rows.append((
            family.value if family else "-",
            str(est.width),
            format_rational(est.size),
            format_rational(est.depth),
        ))
    return Table(("family", "width", "size", "depth"), tuple(rows))
