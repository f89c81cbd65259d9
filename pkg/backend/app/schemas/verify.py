"""
Schemas del reporte de verificación
"""

from typing import Optional

from pydantic import BaseModel, Field, computed_field


class CheckResult(BaseModel):
    name: str
    passed: bool
    cases: int = Field(0, ge=0)
    failures: int = Field(0, ge=0)
    detail: Optional[str] = None


class VerifyReport(BaseModel):
    """Resultados por chequeo; la cabecera identifica cuerpo, modo y semilla"""

    field: str
    family: str
    mode: str
    seed: int
    rng: str
    checks: list[CheckResult] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def header(self) -> str:
        return f"# verify field={self.field} family={self.family} mode={self.mode} seed={self.seed} rng={self.rng}"

    def render_text(self) -> str:
        lines = [self.header()]
        for check in self.checks:
            status = "PASS" if check.passed else "FAIL"
            line = f"{status} {check.name} cases={check.cases}"
            if check.failures:
                line += f" failures={check.failures}"
            if check.detail:
                line += f" ({check.detail})"
            lines.append(line)
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines) + "\n"
