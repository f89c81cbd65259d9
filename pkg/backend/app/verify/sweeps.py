"""
Barridos de verificación contra el oráculo clásico
Multiplicación controlada, add-mult, anchos y leyes de conteo exacto
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from app.builders import build_circuit
from app.core.config import Settings, get_settings
from app.core.dependencies import RNG_NAME, get_rng
from app.core.errors import OutOfDomain
from app.gfcore import element_at, field_add, field_elements, field_mul, format_field_spec, validate_field
from app.models.kinds import AdderFamily, CircuitKind
from app.resources import compare, exact_average, field_formula
from app.schemas.fields import BinaryField, ExtensionField, FieldSpec, PrimeField
from app.schemas.verify import CheckResult, VerifyReport
from app.sim import encode_registers, read_register, simulate_many

LOGGER = logging.getLogger(__name__)

# tope de instancias para las leyes de promedio exacto
_EXACT_MAX_INSTANCES = 4096


@dataclass
class Tally:
    cases: int = 0
    failures: int = 0

    def record(self, ok: bool) -> None:
        self.cases += 1
        self.failures += not ok

    def __iadd__(self, other: "Tally") -> "Tally":
        self.cases += other.cases
        self.failures += other.failures
        return self

    def result(self, name: str, detail: Optional[str] = None) -> CheckResult:
        return CheckResult(name=name, passed=self.failures == 0, cases=self.cases, failures=self.failures, detail=detail)


@dataclass
class CmultOutcome:
    oracle: Tally
    ancilla: Tally
    identity: Tally


def check_cmult(
    spec: FieldSpec, family: AdderFamily, a: int, xs: Sequence[int], controls_on: Sequence[int], settings: Settings
) -> CmultOutcome:
    """Un circuito por a; todas las entradas (c, x) pasan en un solo lote"""
    circuit = build_circuit("cmult", spec, a, family)
    inputs = [encode_registers(circuit, {"c": c, "x": x}, defaults=("anc",)) for c, x in zip(controls_on, xs)]
    outputs = simulate_many(circuit, inputs, settings)
    out = CmultOutcome(Tally(), Tally(), Tally())
    for c, x, state in zip(controls_on, xs, outputs):
        x_out = read_register(state, circuit, "x")
        c_out = read_register(state, circuit, "c")
        out.ancilla.record(read_register(state, circuit, "anc") == 0)
        if c:
            out.oracle.record(c_out == 1 and x_out == field_mul(spec, a, x))
        else:
            out.identity.record(c_out == 0 and x_out == x)
    return out


def check_addmult(
    spec: FieldSpec, family: AdderFamily, a: int, xs: Sequence[int], zs: Sequence[int], settings: Settings
) -> Tally:
    """|1, x, z⟩ → |1, x, z + a·x⟩ con ancillas en 0"""
    circuit = build_circuit("addmult", spec, a, family)
    inputs = [encode_registers(circuit, {"c": 1, "x": x, "z": z}, defaults=("anc",)) for x, z in zip(xs, zs)]
    tally = Tally()
    for x, z, state in zip(xs, zs, simulate_many(circuit, inputs, settings)):
        values = {reg.name: read_register(state, circuit, reg.name) for reg in circuit.registers}
        tally.record(
            values["x"] == x
            and values["z"] == field_add(spec, z, field_mul(spec, a, x))
            and values.get("anc", 0) == 0
        )
    return tally


def check_widths(spec: FieldSpec, family: AdderFamily) -> Tally:
    tally = Tally()
    for kind, controls in (("cmult", 0), ("addmult", 0), ("adder", 0), ("adder", 2)):
        built = build_circuit(kind, spec, 1, family, controls)
        expected = field_formula(spec, kind, family, controls).width
        ok = built.width == expected
        if not ok:
            LOGGER.warning("ancho de %s (controles=%d): %d, se esperaba %d", kind, controls, built.width, expected)
        tally.record(ok)
    return tally


def _exact_laws(spec: FieldSpec, family: AdderFamily) -> list[tuple[str, CircuitKind, dict]]:
    """(nombre, tipo, parámetros) de cada ley de promedio exacto aplicable"""
    laws = []
    if isinstance(spec, ExtensionField):
        n_int = spec.coeff_bits
    else:
        n_int = spec.bit_width
    if not isinstance(spec, BinaryField):
        for controls in (0, 1, 2):
            laws.append((f"counts carry-sum adder c={controls}", CircuitKind.CARRY_SUM_ADDER, {"n": n_int, "controls": controls}))
            laws.append((f"counts phi-adder c={controls}", CircuitKind.PHI_ADDER, {"n": n_int, "controls": controls}))
        laws.append(("counts qft", CircuitKind.QFT, {"n": n_int}))
    laws.append(("counts cswap", CircuitKind.CSWAP, {"n": spec.bit_width}))
    if isinstance(spec, PrimeField) and 1 << (2 * n_int) <= _EXACT_MAX_INSTANCES:
        for controls in (0, 2):
            laws.append((f"counts mod adder c={controls}", CircuitKind.MOD_ADDER_GFP,
                         {"n": n_int, "family": family, "controls": controls}))
    if isinstance(spec, BinaryField) and 1 << spec.n <= _EXACT_MAX_INSTANCES:
        for controls in (0, 2):
            laws.append((f"counts gf2n adder c={controls}", CircuitKind.ADDER_GF2N, {"n": spec.n, "controls": controls}))
        laws.append(("counts gf2n addmult", CircuitKind.ADDMULT_GF2N, {"n": spec.n}))
        laws.append(("counts gf2n cmult", CircuitKind.CMULT_GF2N, {"n": spec.n}))
    if isinstance(spec, ExtensionField) and 1 << (spec.coeff_bits * (spec.k + 1)) <= _EXACT_MAX_INSTANCES:
        for controls in (0, 2):
            laws.append((f"counts gfpk adder c={controls}", CircuitKind.ADDER_GFPK,
                         {"k": spec.k, "l": spec.coeff_bits, "family": family, "controls": controls}))
    return laws


def check_exact_counts(spec: FieldSpec, family: AdderFamily) -> list[CheckResult]:
    results = []
    for name, kind, params in _exact_laws(spec, family):
        samples = exact_average(kind, **params)
        report = compare(kind, samples, tolerance=0, **params)
        failing = [r.metric for r in report.rows if r.metric != "depth" and not r.exact]
        if not report.width_ok:
            failing.append("width")
        results.append(CheckResult(
            name=name,
            passed=not failing,
            cases=len(samples),
            failures=len(failing),
            detail=", ".join(failing) or None,
        ))
        LOGGER.info("%s: %s", name, "PASS" if not failing else f"FAIL {failing}")
    return results


def _map(fn: Callable, items: Sequence, workers: int) -> list:
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def verify_field(
    spec: FieldSpec,
    family: AdderFamily = AdderFamily.CARRY_SUM,
    exhaustive: bool = True,
    samples: Optional[int] = None,
    seed: Optional[int] = None,
    counts: bool = False,
    workers: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> VerifyReport:
    """
    Exhaustivo: todo a ≠ 0, todo x y c ∈ {0, 1}.
    Muestreo: samples ternas (a, c, x) al azar, agrupadas por a.
    """
    settings = settings or get_settings()
    spec = validate_field(spec)
    family = AdderFamily(family)
    workers = workers or settings.verify_workers
    rng, seed = get_rng(seed, settings)

    def draw(size: int, low: int = 0) -> list[int]:
        return [element_at(spec, int(i)) for i in rng.integers(low, spec.order, size=size)]

    if exhaustive:
        if spec.order > settings.exhaustive_max_order:
            raise OutOfDomain(f"orden {spec.order} excede el máximo exhaustivo {settings.exhaustive_max_order}")
        elements = list(field_elements(spec))
        plan = {a: ([c for c in (0, 1) for _ in elements], [x for _ in (0, 1) for x in elements]) for a in elements[1:]}
        addmult_xs = {a: elements for a in plan}
        mode = "exhaustive"
    else:
        if not samples or samples < 1:
            raise OutOfDomain("el modo por muestreo requiere --samples ≥ 1")
        plan = {}
        for a, c, x in zip(draw(samples, low=1), rng.integers(0, 2, size=samples), draw(samples)):
            cs, xs = plan.setdefault(a, ([], []))
            cs.append(int(c))
            xs.append(x)
        plan = dict(sorted(plan.items()))
        addmult_xs = {a: plan[a][1] for a in plan}
        mode = f"samples={samples}"

    # z para la add-mult: uno por (a, x), fijado por la semilla
    z_plan = {a: draw(len(addmult_xs[a])) for a in plan}

    report = VerifyReport(field=format_field_spec(spec), family=family.value, mode=mode, seed=seed, rng=RNG_NAME)

    cmult = _map(lambda a: check_cmult(spec, family, a, plan[a][1], plan[a][0], settings), list(plan), workers)
    oracle, ancilla, identity = Tally(), Tally(), Tally()
    for outcome in cmult:
        oracle += outcome.oracle
        ancilla += outcome.ancilla
        identity += outcome.identity
    report.checks.append(oracle.result("cmult oracle"))
    report.checks.append(ancilla.result("ancilla restoration"))
    report.checks.append(identity.result("control off identity"))

    addmult = Tally()
    for tally in _map(lambda a: check_addmult(spec, family, a, addmult_xs[a], z_plan[a], settings), list(plan), workers):
        addmult += tally
    report.checks.append(addmult.result("addmult oracle"))

    report.checks.append(check_widths(spec, family).result("width"))
    if counts:
        report.checks.extend(check_exact_counts(spec, family))

    for check in report.checks:
        LOGGER.info("%s %s: %d casos, %d fallas", "PASS" if check.passed else "FAIL", check.name, check.cases, check.failures)
    return report
