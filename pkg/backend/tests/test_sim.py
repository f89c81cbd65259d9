"""
Simuladores: permutación exacta, vector de estado y lectura de registros
"""

from fractions import Fraction

import numpy as np
import pytest

from app.builders import build_carry_sum_adder, build_phi_adder_sandwich, build_qft
from app.circuit import inverse
from app.core.config import Settings
from app.core.errors import (
    MissingAssignment,
    NonClassicalGate,
    NotBasisOutput,
    OperandOutOfRange,
    UnknownRegister,
    WidthCapExceeded,
)
from app.models.circuit import Circuit, Gate, Register
from app.models.kinds import GateKind
from app.sim import (
    SparseBatch,
    basis_batch,
    basis_state,
    compile_permutation,
    encode_registers,
    is_classical,
    iter_basis_inputs,
    layout_of,
    read_all,
    read_basis,
    read_basis_batch,
    read_register,
    run_permutation,
    run_sparse,
    run_statevector,
    simulate_basis,
    simulate_many,
)

LAYOUT = (Register("c", 0, 1), Register("x", 1, 2))


def toffoli() -> Circuit:
    return Circuit(3, LAYOUT, (Gate(GateKind.C2N, 2, (0, 1)),))


class TestPermutation:
    def test_toffoli(self):
        c = toffoli()
        assert is_classical(c)
        for state in range(8):
            expected = state ^ 0b100 if state & 0b011 == 0b011 else state
            assert run_permutation(c, state) == expected

    def test_compuerta_no_clasica(self):
        c = Circuit(3, LAYOUT, (Gate(GateKind.H, 0),))
        assert not is_classical(c)
        with pytest.raises(NonClassicalGate):
            compile_permutation(c)

    def test_estado_fuera_de_rango(self):
        with pytest.raises(ValueError):
            run_permutation(toffoli(), 8)

    def test_coincide_con_vector_de_estado(self, settings):
        c = build_carry_sum_adder(5, 3, controls=1)
        states = list(range(1 << c.width))
        batch = run_statevector(c, basis_batch(c.width, states, settings), settings)
        for column, state in enumerate(states):
            assert read_basis(batch[:, column], settings.basis_tolerance) == run_permutation(c, state)


class TestStatevector:
    def test_hadamard(self, settings):
        c = Circuit(1, (Register("q", 0, 1),), (Gate(GateKind.H, 0),))
        out = run_statevector(c, basis_state(1, 0, settings), settings)
        assert np.allclose(out, [2 ** -0.5, 2 ** -0.5])
        out = run_statevector(c, basis_state(1, 1, settings), settings)
        assert np.allclose(out, [2 ** -0.5, -(2 ** -0.5)])

    def test_fase_controlada(self, settings):
        c = Circuit(2, (Register("q", 0, 2),), (Gate(GateKind.CP, 1, (0,), Fraction(1, 4)),))
        for state in range(4):
            out = run_statevector(c, basis_state(2, state, settings), settings)
            expected = 1j if state == 3 else 1
            assert out[state] == pytest.approx(expected)

    def test_no_modifica_la_entrada(self, settings):
        c = build_qft(3)
        state = basis_state(3, 5, settings)
        run_statevector(c, state, settings)
        assert state[5] == 1 and np.count_nonzero(state) == 1

    def test_norma(self, settings):
        c = build_qft(4)
        out = run_statevector(c, basis_state(4, 9, settings), settings)
        assert np.linalg.norm(out) == pytest.approx(1.0)

    def test_tramo_monomial(self, settings):
        # X, CP, X en un solo tramo: la fase se evalúa sobre el índice ya permutado
        gates = (Gate(GateKind.N, 0), Gate(GateKind.CP, 1, (0,), Fraction(1, 4)), Gate(GateKind.N, 0))
        c = Circuit(2, (Register("q", 0, 2),), gates)
        batch = run_statevector(c, basis_batch(2, range(4), settings), settings)
        assert np.allclose(np.diag(batch), [1, 1, 1j, 1])
        assert np.allclose(batch - np.diag(np.diag(batch)), 0)

    def test_tramos_separados_por_h(self, settings):
        c = build_qft(3)
        round_trip = c.with_gates(inverse(c).gates + c.gates)
        states = list(range(8))
        out = run_statevector(round_trip, basis_batch(3, states, settings), settings)
        assert read_basis_batch(out, settings.basis_tolerance) == states

    def test_tamano_incorrecto(self, settings):
        with pytest.raises(ValueError):
            run_statevector(build_qft(3), np.zeros(4, dtype=complex), settings)

    def test_limite_de_ancho(self):
        capped = Settings(_env_file=None, statevector_max_qubits=4)
        with pytest.raises(WidthCapExceeded) as exc:
            basis_state(5, 0, capped)
        assert exc.value.exit_code == 4
        with pytest.raises(WidthCapExceeded):
            simulate_many(build_phi_adder_sandwich(1, 5), [0], capped)

    def test_limite_por_entorno(self, monkeypatch):
        monkeypatch.setenv("GFQ_STATEVECTOR_MAX_QUBITS", "3")
        with pytest.raises(WidthCapExceeded):
            basis_state(4, 0)


class TestSparse:
    def test_coincide_con_vector_de_estado(self, settings):
        c = build_phi_adder_sandwich(5, 4, controls=1)
        states = list(range(1 << c.width))
        dense = run_statevector(c, basis_batch(c.width, states, settings), settings)
        assert run_sparse(c, states, settings) == read_basis_batch(dense, settings.basis_tolerance)

    def test_soporte_tras_la_qft(self):
        c = build_qft(3)
        batch = SparseBatch(3, [5, 0])
        for gate in c.gates:
            batch.apply(gate)
        assert len(batch.index) == 16
        assert np.allclose(np.abs(batch.amplitude), 8 ** -0.5)
        for gate in inverse(c).gates:
            batch.apply(gate)
        assert sorted(zip(batch.column.tolist(), batch.index.tolist())) == [(0, 5), (1, 0)]

    def test_salida_fuera_de_la_base(self, settings):
        assert run_sparse(build_qft(2), [0, 3], settings) == [None, None]

    def test_estado_fuera_de_rango(self, settings):
        with pytest.raises(ValueError):
            run_sparse(build_qft(2), [4], settings)

    def test_limite_de_ancho(self):
        capped = Settings(_env_file=None, statevector_max_qubits=2)
        with pytest.raises(WidthCapExceeded):
            run_sparse(build_qft(3), [0], capped)

class TestReadout:
    def test_read_basis(self):
        v = np.zeros(4, dtype=complex)
        v[2] = 1
        assert read_basis(v, 1e-9) == 2
        assert read_basis(np.full(4, 0.5, dtype=complex), 1e-9) is None

    def test_tolerancia_invalida(self):
        with pytest.raises(ValueError):
            read_basis(np.ones(1, dtype=complex), 0.5)

    def test_encode_y_read(self):
        c = toffoli()
        state = encode_registers(c, {"c": 1, "x": 2})
        assert state == 0b101
        assert read_register(state, c, "x") == 2
        assert read_all(state, c) == {"c": 1, "x": 2}

    def test_layout_por_nombre(self):
        layout = layout_of(toffoli())
        assert list(layout) == ["c", "x"]
        assert layout["x"].start == 1 and layout["x"].length == 2

    def test_faltantes_y_valores_fuera_de_rango(self):
        c = toffoli()
        with pytest.raises(MissingAssignment):
            encode_registers(c, {"c": 1})
        assert encode_registers(c, {"c": 1}, defaults=("x",)) == 1
        with pytest.raises(OperandOutOfRange):
            encode_registers(c, {"c": 1, "x": 4})
        with pytest.raises(UnknownRegister):
            encode_registers(c, {"c": 1, "x": 0, "y": 0})

    def test_iter_basis_inputs(self):
        c = toffoli()
        inputs = list(iter_basis_inputs(c, {"x": range(4)}))
        assert [values for values, _ in inputs] == [{"x": x} for x in range(4)]
        assert [state for _, state in inputs] == [x << 1 for x in range(4)]


class TestAutoPath:
    def test_camino_clasico(self, settings):
        c = build_carry_sum_adder(3, 3)
        state = encode_registers(c, {"z": 4}, defaults=("anc",))
        assert read_register(simulate_basis(c, state, settings), c, "z") == 7

    def test_camino_cuantico(self, settings):
        c = build_phi_adder_sandwich(3, 4)
        outs = simulate_many(c, [encode_registers(c, {"z": z}) for z in range(16)], settings)
        assert [read_register(s, c, "z") for s in outs] == [(z + 3) % 16 for z in range(16)]

    def test_salida_fuera_de_la_base(self, settings):
        with pytest.raises(NotBasisOutput) as exc:
            simulate_basis(build_qft(2), 0, settings)
        assert exc.value.exit_code == 3
