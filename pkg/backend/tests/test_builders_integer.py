"""
Sumadores de enteros, QFT e intercambio controlado
"""

from fractions import Fraction

import numpy as np
import pytest

from app.builders import build_carry_sum_adder, build_cswap, build_phi_adder, build_phi_adder_sandwich, build_qft
from app.circuit import depth, tally
from app.core.errors import OperandOutOfRange, WidthTooSmall
from app.models.circuit import GateHistogram
from app.models.kinds import CircuitKind, GateKind
from app.resources import exact_average, formula, mean_counts
from app.sim import basis_state, encode_registers, read_register, run_permutation, run_statevector, simulate_many


def controls_value(controls: int) -> int:
    return (1 << controls) - 1


class TestCarrySumAdder:
    @pytest.mark.parametrize("n", [2, 3, 4])
    @pytest.mark.parametrize("controls", [0, 1, 2])
    def test_suma_exhaustiva(self, n, controls):
        modulus = 1 << (n + 1)
        for a in range(1 << n):
            c = build_carry_sum_adder(a, n, controls)
            for ctl in range(1 << controls):
                for z in range(modulus):
                    values = {"z": z, "ctl": ctl} if controls else {"z": z}
                    out = run_permutation(c, encode_registers(c, values, defaults=("anc",)))
                    expected = (z + a) % modulus if ctl == controls_value(controls) else z
                    assert read_register(out, c, "z") == expected, (a, ctl, z)
                    assert read_register(out, c, "anc") == 0
                    if controls:
                        assert read_register(out, c, "ctl") == ctl

    @pytest.mark.parametrize("n", range(2, 9))
    def test_anchos(self, n):
        assert build_carry_sum_adder(1, n).width == 2 * n
        assert build_carry_sum_adder(1, n, 1).width == 2 * n + 1
        assert build_carry_sum_adder(1, n, 2).width == 2 * n + 2

    def test_promedio_exacto_n4(self):
        counts, _ = mean_counts(exact_average(CircuitKind.CARRY_SUM_ADDER, n=4))
        assert counts == GateHistogram.of(C2N=5, CN=Fraction(13, 2), N=4)

    @pytest.mark.parametrize("n", range(2, 9))
    @pytest.mark.parametrize("controls", [0, 1, 2])
    def test_promedio_exacto_contra_formula(self, n, controls):
        counts, _ = mean_counts(exact_average(CircuitKind.CARRY_SUM_ADDER, n=n, controls=controls))
        assert counts == formula(CircuitKind.CARRY_SUM_ADDER, n=n, controls=controls).counts

    @pytest.mark.parametrize("n", range(4, 11))
    @pytest.mark.parametrize("controls", [0, 2])
    def test_profundidad_promedio(self, n, controls):
        # cadena de acarreos en serie: 5n − 13/2 frente a 11n/2 − 13/2
        _, mean_depth = mean_counts(exact_average(CircuitKind.CARRY_SUM_ADDER, n=n, controls=controls))
        assert mean_depth == 5 * n - Fraction(13, 2)
        expected = formula(CircuitKind.CARRY_SUM_ADDER, n=n, controls=controls).depth
        assert abs(float(mean_depth / expected) - 1) <= 0.1

    def test_acarreo_ascendente_en_serie(self):
        # con a = 1…1 cada acarreo espera al anterior
        n = 6
        c = build_carry_sum_adder((1 << n) - 1, n)
        carries = set(c.register("anc").qubits)
        up_chain = list(c.gates[: 1 + 3 * (n - 2)])
        assert all(set(g.qubits) & carries for g in up_chain)
        assert depth(c.with_gates(up_chain)) == len(up_chain)

    def test_dominio(self):
        with pytest.raises(WidthTooSmall):
            build_carry_sum_adder(0, 1)
        with pytest.raises(OperandOutOfRange):
            build_carry_sum_adder(8, 3)
        with pytest.raises(OperandOutOfRange):
            build_carry_sum_adder(1, 3, controls=3)


class TestPhiAdder:
    def test_fases_nulas_no_se_emiten(self):
        c = build_phi_adder(2, 3)
        assert [g.kind for g in c.gates] == [GateKind.P, GateKind.P]
        assert [g.phase for g in c.gates] == [Fraction(1, 2), Fraction(1, 4)]
        assert depth(c) == 1

    def test_cero_es_vacio(self):
        assert len(build_phi_adder(0, 4)) == 0

    @pytest.mark.parametrize("controls, kind", [(1, GateKind.CP), (2, GateKind.C2P)])
    def test_controlado(self, controls, kind):
        c = build_phi_adder(5, 4, controls)
        assert c.width == 4 + controls
        assert {g.kind for g in c.gates} == {kind}

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("controls", [0, 2])
    def test_sandwich_suma_en_la_base(self, n, controls, settings):
        width = n + 1
        for a in range(1 << n):
            c = build_phi_adder_sandwich(a, width, controls)
            cases = [(ctl, z) for ctl in range(1 << controls) for z in range(1 << width)]
            states = [encode_registers(c, {"z": z, "ctl": ctl} if controls else {"z": z}) for ctl, z in cases]
            for (ctl, z), out in zip(cases, simulate_many(c, states, settings)):
                expected = (z + a) % (1 << width) if ctl == controls_value(controls) else z
                assert read_register(out, c, "z") == expected

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("controls", [0, 1, 2])
    def test_promedio_de_fases_es_n(self, n, controls):
        counts, _ = mean_counts(exact_average(CircuitKind.PHI_ADDER, n=n, controls=controls))
        assert counts.total() == n
        assert counts == formula(CircuitKind.PHI_ADDER, n=n, controls=controls).counts


class TestQft:
    @pytest.mark.parametrize("width", range(1, 9))
    def test_conteo_y_profundidad(self, width):
        c = build_qft(width)
        assert tally(c) == GateHistogram.of(CP=Fraction(width * width - width, 2), H=width)
        assert depth(c) == 2 * width - 1

    @pytest.mark.parametrize("z", range(8))
    def test_amplitudes(self, z):
        width = 3
        out = run_statevector(build_qft(width), basis_state(width, z))
        for y in range(1 << width):
            turns = sum(((y >> j) & 1) * Fraction(z, 1 << (j + 1)) for j in range(width))
            expected = np.exp(2j * np.pi * float(turns)) / np.sqrt(1 << width)
            assert out[y] == pytest.approx(expected, abs=1e-9)

    def test_ancho_minimo(self):
        with pytest.raises(WidthTooSmall):
            build_qft(0)


class TestControlledSwap:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_intercambio(self, n):
        c = build_cswap(n)
        for ctl in (0, 1):
            for x in range(1 << n):
                for z in range(1 << n):
                    out = run_permutation(c, encode_registers(c, {"c": ctl, "x": x, "z": z}))
                    assert (read_register(out, c, "x"), read_register(out, c, "z")) == ((z, x) if ctl else (x, z))

    @pytest.mark.parametrize("n", range(1, 11))
    def test_conteo_y_profundidad(self, n):
        c = build_cswap(n)
        assert tally(c) == GateHistogram.of(C2N=n, CN=2 * n)
        assert depth(c) == n + 2
        assert c.width == 2 * n + 1
