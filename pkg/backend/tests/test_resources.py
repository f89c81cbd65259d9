"""
Fórmulas de recursos, promedios exactos y muestreados, tablas resumen
"""

from fractions import Fraction
from pathlib import Path

import pytest

from app.builders import gfp, gfpk
from app.core.dependencies import get_rng
from app.core.errors import EmptySamples, OutOfDomain
from app.models.kinds import AdderFamily, CircuitKind, GateKind
from app.resources import (
    compare,
    exact_average,
    family_comparison,
    field_formula,
    fit_scaling_exponent,
    formula,
    formula_keys,
    lower_order_terms,
    mean_counts,
    measure,
    random_instance,
    sample_average,
    table1,
    table2,
)
from app.resources.compare import DEPTH_TOLERANCE
from tests.conftest import binary_field, extension_field, prime_field

CS = AdderFamily.CARRY_SUM
PHI = AdderFamily.PHI
GOLDEN = Path(__file__).parent / "golden"

EXTENSION_KINDS = (CircuitKind.ADDER_GFPK, CircuitKind.ADDMULT_GFPK, CircuitKind.CMULT_GFPK)


def estimates_over_n(kind, family, controls):
    if kind in EXTENSION_KINDS:
        return [formula(kind, family=family, controls=controls, k=2, l=l) for l in range(2, 9)]
    return [formula(kind, n=n, family=family, controls=controls) for n in range(2, 12)]


class TestFormulas:
    def test_sumador_acarreo_suma_n4(self):
        est = formula(CircuitKind.CARRY_SUM_ADDER, n=4)
        assert est.width == 8
        assert est.counts[GateKind.C2N] == 5
        assert est.counts[GateKind.CN] == Fraction(13, 2)
        assert est.counts[GateKind.N] == 4
        assert est.depth == Fraction(31, 2)

    def test_cmult_gf2n_n5(self):
        est = formula(CircuitKind.CMULT_GF2N, n=5)
        assert est.width == 11
        assert est.counts[GateKind.C2N] == 30
        assert est.counts[GateKind.CN] == 10
        assert est.depth == 32

    def test_qft_n0(self):
        est = formula(CircuitKind.QFT, n=0)
        assert est.width == 1
        assert est.counts[GateKind.H] == 1
        assert est.counts[GateKind.CP] == 0
        assert est.depth == 1

    def test_tamano_total(self):
        est = formula(CircuitKind.CMULT_GFP, n=8, family=PHI)
        assert est.size == sum(est.counts.as_row())

    @pytest.mark.parametrize("key", formula_keys(), ids=lambda key: "-".join(str(getattr(v, "value", v)) for v in key))
    def test_monotonas_en_n(self, key):
        kind, family, controls = key
        estimates = estimates_over_n(kind, family, controls)
        for smaller, larger in zip(estimates, estimates[1:]):
            assert smaller.width < larger.width
            assert smaller.size < larger.size
            assert smaller.depth <= larger.depth

    def test_fuera_de_dominio(self):
        with pytest.raises(OutOfDomain):
            formula(CircuitKind.CARRY_SUM_ADDER, n=1)
        with pytest.raises(OutOfDomain):
            formula(CircuitKind.CMULT_GFP, n=4)
        with pytest.raises(OutOfDomain):
            formula(CircuitKind.CMULT_GFP, n=4, family=CS, controls=2)
        with pytest.raises(OutOfDomain):
            formula(CircuitKind.CMULT_GFPK, family=CS, k=2)
        with pytest.raises(OutOfDomain):
            formula(CircuitKind.CMULT_GFPK, family=CS, k=2, l=3, n=5)
        with pytest.raises(OutOfDomain):
            formula(CircuitKind.ADDER_GFPK, family=PHI, k=2, l=1)

    def test_field_formula(self):
        assert field_formula(prime_field(251), "cmult", PHI).width == 19
        assert field_formula(binary_field(8), "cmult").width == 17
        assert field_formula(extension_field(11, 3), "cmult", CS).width == 32
        with pytest.raises(OutOfDomain):
            field_formula(prime_field(7), "qft")


class TestExactAverages:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8])
    @pytest.mark.parametrize("controls", [0, 1, 2])
    def test_sumador_acarreo_suma(self, n, controls):
        report = compare(
            CircuitKind.CARRY_SUM_ADDER, exact_average(CircuitKind.CARRY_SUM_ADDER, n=n, controls=controls),
            n=n, controls=controls,
        )
        assert report.width_ok
        assert all(r.exact for r in report.rows if r.metric != "depth")

    @pytest.mark.parametrize("n", [1, 2, 5, 9])
    @pytest.mark.parametrize("controls", [0, 1, 2])
    def test_sumador_phi(self, n, controls):
        counts, _ = mean_counts(exact_average(CircuitKind.PHI_ADDER, n=n, controls=controls))
        assert counts == formula(CircuitKind.PHI_ADDER, n=n, controls=controls).counts

    @pytest.mark.parametrize("n", [0, 1, 4, 7])
    def test_qft(self, n):
        report = compare(CircuitKind.QFT, exact_average(CircuitKind.QFT, n=n), n=n)
        assert report.passed
        assert report.row("depth").exact

    @pytest.mark.parametrize("n", [1, 3, 8])
    def test_cswap(self, n):
        report = compare(CircuitKind.CSWAP, exact_average(CircuitKind.CSWAP, n=n), n=n)
        assert report.passed
        assert report.row("depth").exact

    def test_sin_enumeracion_exacta(self):
        with pytest.raises(OutOfDomain):
            exact_average(CircuitKind.CMULT_GFP, n=3, family=CS)


class TestCompare:
    def test_sin_muestras(self):
        with pytest.raises(EmptySamples):
            compare(CircuitKind.QFT, [], n=2)
        with pytest.raises(EmptySamples):
            mean_counts([])

    def test_ancho_distinto(self):
        samples = exact_average(CircuitKind.CARRY_SUM_ADDER, n=3)
        report = compare(CircuitKind.CARRY_SUM_ADDER, samples, n=4, tolerance=1.0, depth_tolerance=1.0)
        assert not report.width_ok
        assert not report.passed

    def test_desviaciones(self):
        samples = exact_average(CircuitKind.CARRY_SUM_ADDER, n=4)
        report = compare(CircuitKind.CARRY_SUM_ADDER, samples, n=4)
        row = report.row("CN")
        assert row.formula == Fraction(13, 2)
        assert row.absolute == 0
        assert row.relative == 0.0
        assert report.samples == 16
        assert report.params == {"n": 4}
        with pytest.raises(KeyError):
            report.row("C4N")

    def test_conteo_ausente_en_la_formula(self):
        # muestras de un sumador con controles contra la fórmula sin controles
        samples = exact_average(CircuitKind.CARRY_SUM_ADDER, n=4, controls=1)
        report = compare(CircuitKind.CARRY_SUM_ADDER, samples, n=4, tolerance=10.0, depth_tolerance=10.0)
        row = report.row("C3N")
        assert row.formula == 0 and row.empirical == 1
        assert not row.within_tolerance
        assert row.relative == float("inf")


class TestScaling:
    def test_exponente_cuadratico(self):
        ns = list(range(2, 12))
        depths = [float(formula(CircuitKind.CMULT_GFP, n=n, family=CS).depth) for n in ns]
        linear = lower_order_terms(CircuitKind.CMULT_GFP, ns, family=CS)
        assert linear == pytest.approx((-56.0, 2.0), abs=1e-6)
        assert fit_scaling_exponent(ns, depths, linear) == pytest.approx(2.0, abs=0.001)

    def test_log_log_puro_sesgado(self):
        # sin restar b·n + d la fórmula 55n²−56n+2 parece más que cuadrática
        ns = list(range(4, 11))
        depths = [float(formula(CircuitKind.CMULT_GFP, n=n, family=CS).depth) for n in ns]
        assert fit_scaling_exponent(ns, depths) > 2.1

    def test_exponente_cubico(self):
        ns = list(range(2, 12))
        depths = [3 * n ** 3 + 5 * n * n for n in ns]
        assert fit_scaling_exponent(ns, depths) > 2.5

    def test_pocos_puntos(self):
        with pytest.raises(EmptySamples):
            fit_scaling_exponent([2, 3, 4], [1.0, 2.0, 3.0])

    def test_resto_no_positivo(self):
        with pytest.raises(OutOfDomain):
            fit_scaling_exponent([2, 3, 4, 5], [10.0, 20.0, 30.0, 40.0], linear=(10.0, 0.0))

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "kind, family",
        [(CircuitKind.CMULT_GFP, CS), (CircuitKind.CMULT_GFP, PHI), (CircuitKind.CMULT_GF2N, None)],
    )
    def test_profundidad_medida_cuadratica(self, kind, family, settings):
        rng, _ = get_rng(7, settings)
        ns = list(range(4, 11))
        params = {"family": family} if family else {}
        depths = []
        for n in ns:
            _, depth = mean_counts(sample_average(kind, 40, rng, n=n, **params))
            expected = formula(kind, n=n, **params).depth
            assert abs(float(depth / expected) - 1) <= DEPTH_TOLERANCE, (n, float(depth), float(expected))
            depths.append(float(depth))
        exponent = fit_scaling_exponent(ns, depths, lower_order_terms(kind, ns, **params))
        assert 1.9 <= exponent <= 2.1


@pytest.mark.slow
class TestSampledAverages:
    @pytest.mark.parametrize(
        "kind, family, params",
        [
            (CircuitKind.MOD_ADDER_GFP, CS, {"n": 8}),
            (CircuitKind.MOD_ADDER_GFP, PHI, {"n": 8}),
            (CircuitKind.ADDMULT_GFP, CS, {"n": 8}),
            (CircuitKind.ADDMULT_GFP, PHI, {"n": 8}),
            (CircuitKind.CMULT_GFP, CS, {"n": 8}),
            (CircuitKind.CMULT_GFP, PHI, {"n": 8}),
            (CircuitKind.CMULT_GFPK, CS, {"k": 2, "l": 4}),
            (CircuitKind.CMULT_GFPK, PHI, {"k": 2, "l": 4}),
        ],
    )
    def test_dentro_de_la_banda(self, kind, family, params, settings):
        rng, _ = get_rng(None, settings)
        samples = sample_average(kind, 200, rng, family=family, **params)
        report = compare(kind, samples, family=family, tolerance=0.05, **params)
        assert report.width_ok
        assert report.passed, [r for r in report.rows if not r.within_tolerance]

    def test_semilla_reproducible(self, settings):
        first, _ = get_rng(11, settings)
        second, _ = get_rng(11, settings)
        a = sample_average(CircuitKind.CMULT_GF2N, 20, first, n=6)
        b = sample_average(CircuitKind.CMULT_GF2N, 20, second, n=6)
        assert mean_counts(a) == mean_counts(b)

    def test_muestras_invalidas(self, settings):
        rng, _ = get_rng(1, settings)
        with pytest.raises(EmptySamples):
            sample_average(CircuitKind.QFT, 0, rng, n=3)


class TestOddModulus:
    @pytest.mark.parametrize(
        "module, builder, position, kind, params",
        [
            (gfp, "mod_adder_from_operands", 2, CircuitKind.MOD_ADDER_GFP, {"n": 6}),
            (gfp, "cmult_from_operands", 3, CircuitKind.CMULT_GFP, {"n": 4}),
            (gfpk, "cmult_from_operands", 2, CircuitKind.CMULT_GFPK, {"k": 2, "l": 3}),
        ],
    )
    def test_modulo_impar(self, module, builder, position, kind, params, settings, monkeypatch):
        seen = []
        original = getattr(module, builder)

        def spy(*args, **kwargs):
            seen.append(args[position])
            return original(*args, **kwargs)

        monkeypatch.setattr(module, builder, spy)
        rng, _ = get_rng(3, settings)
        for _ in range(40):
            random_instance(kind, rng, family=PHI, odd_modulus=True, **params)
        assert len(seen) == 40 and all(p % 2 for p in seen)
        seen.clear()
        for _ in range(40):
            random_instance(kind, rng, family=PHI, **params)
        assert any(p % 2 == 0 for p in seen)

    def test_fases_p_con_modulo_impar(self, settings):
        # con p impar ninguna fase de la resta de p es entera
        rng, _ = get_rng(5, settings)
        n = 4
        for s in sample_average(CircuitKind.CMULT_GFP, 20, rng, n=n, family=PHI, odd_modulus=True):
            assert s.counts[GateKind.P] == 2 * n * (n + 1)
        k, l = 2, 3
        for s in sample_average(CircuitKind.CMULT_GFPK, 10, rng, k=k, l=l, family=PHI, odd_modulus=True):
            assert s.counts[GateKind.P] == 2 * (k * l) * k * (l + 1)

    def test_bloque_del_bit_bajo(self, settings):
        # mismas semillas: los pares solo difieren en el bit bajo del módulo
        uniform, _ = get_rng(9, settings)
        odd, _ = get_rng(9, settings)
        shifts = set()
        for _ in range(60):
            base = measure(random_instance(CircuitKind.MOD_ADDER_GFP, uniform, n=8, family=CS))
            forced = measure(random_instance(CircuitKind.MOD_ADDER_GFP, odd, n=8, family=CS, odd_modulus=True))
            shifts.add((
                forced.counts[GateKind.CN] - base.counts[GateKind.CN],
                forced.counts[GateKind.N] - base.counts[GateKind.N],
            ))
        assert shifts == {(0, 0), (5, 1)}

    @pytest.mark.slow
    def test_desvio_de_cmult_phi(self, settings):
        n = 8
        rng, _ = get_rng(13, settings)
        samples = sample_average(CircuitKind.CMULT_GFP, 200, rng, n=n, family=PHI, odd_modulus=True)
        report = compare(CircuitKind.CMULT_GFP, samples, family=PHI, n=n, tolerance=0.05)
        outside = {r.metric for r in report.rows if not r.within_tolerance}
        assert outside == {GateKind.P.value}
        counts, _ = mean_counts(samples)
        assert counts[GateKind.P] == formula(CircuitKind.CMULT_GFP, n=n, family=PHI).counts[GateKind.P] + 2 * n


class TestTables:
    def test_tabla1_simbolica(self):
        assert table1().render("csv") == (GOLDEN / "table1.csv").read_text()

    def test_tabla1_evaluada(self):
        assert [row[1] for row in table1(8).rows] == ["16", "9", "18", "11"]

    def test_tabla2_simbolica(self):
        assert table2().render("csv") == (GOLDEN / "table2.csv").read_text()

    def test_tabla2_evaluada(self):
        rows = {(row[0], row[1]): row[2:] for row in table2(p=11, k=3).rows}
        assert rows[("adder", "width")] == ("9", "6", "12", "19", "14")
        assert rows[("doubly controlled adder", "width")] == ("11", "8", "14", "21", "16")
        assert rows[("controlled multiplication", "width")] == ("14", "11", "25", "32", "27")
        assert rows[("adder", "size")] == ("O(l)", "O(l^2)", "O(n)", "O(kl)", "O(kl^2)")

    def test_tabla2_parametros(self):
        with pytest.raises(OutOfDomain):
            table2(p=11)
        with pytest.raises(OutOfDomain):
            table2(p=9, k=2)

    def test_texto_alineado(self):
        lines = table1().render("text").splitlines()
        assert lines[0].split() == ["adder", "width", "size", "depth"]
        assert set(lines[1].replace(" ", "")) == {"-"}
        with pytest.raises(OutOfDomain):
            table1().render("xml")

    def test_comparacion_de_familias(self):
        table = family_comparison(CircuitKind.CMULT_GFP, n=8)
        assert [(row[0], row[1]) for row in table.rows] == [("carry-sum", "26"), ("phi", "19")]
        table = family_comparison(CircuitKind.CMULT_GF2N, n=8)
        assert table.rows == (("-", "17", "88", "74"),)
