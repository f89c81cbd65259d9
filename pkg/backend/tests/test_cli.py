"""
Línea de comandos: build, simulate, verify y estimate
"""

import importlib
from pathlib import Path

import pytest
from click.testing import CliRunner

from app.core.config import get_settings
from app.main import cli

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def built(runner, tmp_path):
    """Construye un circuito en un archivo temporal y devuelve su ruta"""

    def _build(*args: str) -> Path:
        path = tmp_path / "circuit.txt"
        result = runner.invoke(cli, ["build", *args, "-o", str(path)])
        assert result.exit_code == 0, result.output
        return path

    return _build


class TestBuild:
    def test_cmult_gfp(self, runner):
        result = runner.invoke(cli, ["build", "--field", "p:7", "--kind", "cmult", "--a", "3"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0] == "# kind=cmult field=p:7 a=3 family=carry-sum controls=0"
        assert lines[1] == "# width=11"
        assert lines[2] == "QUBITS 11"

    def test_cmult_gf2n(self, runner):
        result = runner.invoke(cli, ["build", "--field", "2^3:Q=1011", "--kind", "cmult", "--a", "3"])
        assert result.exit_code == 0
        assert "# width=7" in result.output.splitlines()

    def test_qft_por_bits(self, runner):
        result = runner.invoke(cli, ["build", "--kind", "qft", "--bits", "3"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0].endswith("bits=3")

    def test_a_cero_no_invertible(self, runner):
        result = runner.invoke(cli, ["build", "--field", "p:7", "--kind", "cmult", "--a", "0"])
        assert result.exit_code == 2
        assert "a ≠ 0" in result.output

    def test_cuerpo_invalido(self, runner):
        result = runner.invoke(cli, ["build", "--field", "p:9", "--kind", "adder", "--a", "1"])
        assert result.exit_code == 2

    def test_opcion_desconocida(self, runner):
        result = runner.invoke(cli, ["build", "--kind", "shor"])
        assert result.exit_code == 2


class TestSimulate:
    def test_cmult(self, runner, built):
        path = built("--field", "p:7", "--kind", "cmult", "--a", "3")
        result = runner.invoke(cli, ["simulate", str(path), "c=1", "x=4"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "x=5 anc=0"

    def test_cmult_control_apagado(self, runner, built):
        path = built("--field", "p:7", "--kind", "cmult", "--a", "3")
        result = runner.invoke(cli, ["simulate", str(path), "c=0", "x=4"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "x=4 anc=0"

    def test_mostrar_controles(self, runner, built):
        path = built("--field", "p:7", "--kind", "cmult", "--a", "3")
        result = runner.invoke(cli, ["simulate", str(path), "c=1", "x=4", "--show-controls"])
        assert result.exit_code == 0, result.output
        assert result.output.strip() == "c=1 x=5 anc=0"

    def test_sumador_con_controles(self, runner, built):
        path = built("--field", "p:7", "--kind", "adder", "--a", "3", "--controls", "2")
        result = runner.invoke(cli, ["simulate", str(path), "ctl=3", "z=5"])
        assert result.exit_code == 0, result.output
        assert result.output.split()[0] == "z=1"
        assert not any(token.startswith("ctl=") for token in result.output.split())

    def test_addmult(self, runner, built):
        path = built("--field", "p:7", "--kind", "addmult", "--a", "3")
        result = runner.invoke(cli, ["simulate", str(path), "c=1,x=4,z=2"])
        assert result.exit_code == 0, result.output
        assert "z=0" in result.output.split()

    def test_addmult_phi(self, runner, built):
        path = built("--field", "p:7", "--kind", "addmult", "--a", "3", "--family", "phi")
        result = runner.invoke(cli, ["simulate", str(path), "c=1", "x=4", "z=2"])
        assert result.exit_code == 0, result.output
        assert "z=0" in result.output.split()

    def test_salida_fuera_de_la_base(self, runner, tmp_path):
        path = tmp_path / "h.txt"
        path.write_text("QUBITS 1\nREG q 0 1\nH 0\n")
        result = runner.invoke(cli, ["simulate", str(path), "q=0"])
        assert result.exit_code == 3

    def test_limite_de_ancho(self, runner, built, monkeypatch):
        path = built("--field", "p:7", "--kind", "cmult", "--a", "3", "--family", "phi")
        monkeypatch.setenv("GFQ_STATEVECTOR_MAX_QUBITS", "4")
        get_settings.cache_clear()
        result = runner.invoke(cli, ["simulate", str(path), "c=1", "x=4"])
        assert result.exit_code == 4

    def test_asignacion_mal_formada(self, runner, built):
        path = built("--field", "p:7", "--kind", "cmult", "--a", "3")
        result = runner.invoke(cli, ["simulate", str(path), "c1"])
        assert result.exit_code == 2

    def test_registro_sin_asignar(self, runner, built):
        path = built("--field", "p:7", "--kind", "cmult", "--a", "3")
        result = runner.invoke(cli, ["simulate", str(path), "x=4"])
        assert result.exit_code == 2


class TestVerify:
    def test_pasa(self, runner):
        result = runner.invoke(cli, ["verify", "--field", "p:7", "--exhaustive"])
        assert result.exit_code == 0, result.output
        assert result.output.splitlines()[-1] == "PASS"

    def test_json(self, runner):
        result = runner.invoke(cli, ["verify", "--field", "2^3:Q=1011", "--samples", "20", "--seed", "3",
                                     "--format", "json"])
        assert result.exit_code == 0, result.output
        assert '"passed": true' in result.output
        assert '"seed": 3' in result.output

    def test_modulo_reducible(self, runner):
        result = runner.invoke(cli, ["verify", "--field", "2^2:Q=101"])
        assert result.exit_code == 2

    def test_modos_excluyentes(self, runner):
        result = runner.invoke(cli, ["verify", "--field", "p:7", "--exhaustive", "--samples", "5"])
        assert result.exit_code == 2

    def test_falla_con_codigo_1(self, runner, monkeypatch):
        from app.schemas.verify import CheckResult, VerifyReport

        def failing(*args, **kwargs):
            report = VerifyReport(field="p:7", family="carry-sum", mode="exhaustive", seed=0, rng="PCG64")
            report.checks.append(CheckResult(name="cmult oracle", passed=False, cases=1, failures=1))
            return report

        monkeypatch.setattr(importlib.import_module("app.cli.commands.verify"), "verify_field", failing)
        result = runner.invoke(cli, ["verify", "--field", "p:7"])
        assert result.exit_code == 1
        assert "FAIL cmult oracle" in result.output


class TestEstimate:
    def test_cmult_phi_p251(self, runner):
        result = runner.invoke(cli, ["estimate", "--field", "p:251", "--kind", "cmult", "--family", "phi",
                                     "--format", "csv"])
        assert result.exit_code == 0, result.output
        header, row = result.output.splitlines()
        assert header.split(",")[3] == "width"
        assert row.split(",")[:4] == ["cmult_gfp", "phi", "0", "19"]

    def test_cmult_gf2n_aes(self, runner):
        result = runner.invoke(cli, ["estimate", "--field", "2^8:Q=100011011", "--kind", "cmult", "--format", "csv"])
        assert result.exit_code == 0, result.output
        assert result.output.splitlines()[1] == "cmult_gf2n,,0,17,0,16,72,0,0,0,0,0,0,74"

    @pytest.mark.parametrize("table", ["1", "2"])
    def test_tablas(self, runner, table):
        result = runner.invoke(cli, ["estimate", "--table", table, "--format", "csv"])
        assert result.exit_code == 0
        assert result.output == (GOLDEN / f"table{table}.csv").read_text()

    def test_tabla2_evaluada(self, runner):
        result = runner.invoke(cli, ["estimate", "--table", "2", "--p", "11", "--k", "3", "--format", "csv"])
        assert result.exit_code == 0
        assert "controlled multiplication,width,14,11,25,32,27" in result.output.splitlines()

    def test_barrido(self, runner):
        result = runner.invoke(cli, ["estimate", "--sweep", "2:5", "--field-type", "binary", "--kind", "cmult",
                                     "--format", "csv"])
        assert result.exit_code == 0, result.output
        lines = result.output.splitlines()
        assert lines[0].startswith("n,circuit_kind")
        assert [line.split(",")[4] for line in lines[1:]] == ["5", "7", "9", "11"]

    def test_barrido_extension_requiere_k(self, runner):
        result = runner.invoke(cli, ["estimate", "--sweep", "2:4", "--field-type", "extension", "--kind", "cmult"])
        assert result.exit_code == 2

    def test_comparacion_de_familias(self, runner):
        result = runner.invoke(cli, ["estimate", "--field", "p:251", "--kind", "cmult", "--compare-families",
                                     "--format", "csv"])
        assert result.exit_code == 0
        assert result.output.splitlines()[2].startswith("phi,19,")

    def test_empirico(self, runner):
        result = runner.invoke(cli, ["estimate", "--field", "2^4:Q=10011", "--kind", "cmult", "--empirical", "5",
                                     "--seed", "9", "--format", "csv"])
        assert result.exit_code == 0, result.output
        assert "# compare kind=cmult_gf2n samples=5 seed=9 rng=PCG64" in result.output
        assert "width,9,9,,,yes" in result.output

    def test_empirico_con_modulo_impar(self, runner):
        result = runner.invoke(cli, ["estimate", "--field", "p:11", "--kind", "cmult", "--family", "phi",
                                     "--empirical", "4", "--seed", "2", "--odd-modulus", "--format", "csv"])
        assert result.exit_code == 0, result.output
        assert "seed=2 rng=PCG64 modulus=odd" in result.output
        # n = 4: cada resta de p aporta n+1 fases P
        assert "\nP,32,40," in result.output

    def test_formas_excluyentes(self, runner):
        result = runner.invoke(cli, ["estimate", "--table", "1", "--field", "p:7", "--kind", "cmult"])
        assert result.exit_code == 2
        result = runner.invoke(cli, ["estimate"])
        assert result.exit_code == 2
