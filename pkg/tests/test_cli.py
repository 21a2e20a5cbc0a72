import io
import json
import math

import pytest

from statmech import save_spectrum, EnergySpectrum
from statmech.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def single_level(tmp_path):
    path = tmp_path / "s.csv"
    save_spectrum(EnergySpectrum.from_levels([(0.0, 1)]), path)
    return str(path)


def test_occupations_fd_symmetry_point(single_level):
    code, out, _ = call("occupations", "--stats", "fd", "--beta", "1", "--mu", "0", "--spectrum", single_level)
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.split(",")[:3] == ["energy", "degeneracy", "mean_occupancy"]
    assert float(row.split(",")[2]) == 0.5


def test_occupations_solves_mu():
    code, out, _ = call("occupations", "--stats", "BE", "--beta", "1", "--n", "2",
                        "--uniform", "0:1:5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert sum(r["mean_occupancy"] for r in doc["rows"]) == pytest.approx(2.0, rel=1e-10)
    assert doc["diagnostics"]["mu"] < 0


def test_huggett_impenetrable():
    code, out, _ = call("huggett", "--n", "2", "--k", "2", "--impenetrable")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "occupancy,gamma_frequency,z_frequency,agrees"
    assert lines[1:] == ["1 1,1/1,1/1,true"]


def test_huggett_check():
    code, out, _ = call("huggett", "--check", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["diagnostics"]["holds"] is True
    assert doc["diagnostics"]["negative_control_disagrees"] is True


def test_sweep_be_vs_mb():
    code, out, _ = call("sweep", "--quantity", "be-vs-mb", "--beta-eps-mu", "1:20:39")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 40
    assert float(lines[-1].split(",")[-1]) < 1e-8


def test_json_schema_and_precision():
    code, out, _ = call("solve-mu", "--stats", "FD", "--beta", "1", "--n", "1",
                        "--uniform", "0:2:2", "--format", "json")
    doc = json.loads(out)
    assert list(doc) == ["command", "config_echo", "result", "diagnostics"]
    assert doc["command"] == "solve-mu"
    assert doc["config_echo"]["units"] == "reduced"
    assert doc["result"]["mu"] == pytest.approx(1.0, abs=1e-9)
    # 17 significant digits round-trip
    assert '"tol": 1e-10' in out


def test_free_energy_and_blackbody_and_classicality():
    assert call("free-energy", "--stats", "MB", "--beta", "1", "--n", "3", "--uniform", "0:1:4",
                "--finite-difference")[0] == 0
    code, out, _ = call("blackbody", "--temperature", "1", "--eps-range", "0.1:2:5", "--units", "reduced")
    assert code == 0 and len(out.strip().splitlines()) == 6
    code, out, _ = call("classicality", "--temperature", "300", "--volume", "1", "--n", "1e20",
                        "--units", "SI", "--mass", "9.1093837015e-31", "--format", "json")
    assert code == 0
    assert json.loads(out)["result"]["classical"] is True


def test_exit_codes():
    # domain error: FD over capacity
    code, _, err = call("solve-mu", "--stats", "FD", "--beta", "1", "--n", "5", "--uniform", "0:1:2")
    assert code == 1
    assert "chemical-potential solve" in err
    # convergence failure carries the bracket
    code, _, err = call("solve-mu", "--stats", "FD", "--beta", "1", "--n", "7.3", "--uniform", "0:0.1:40",
                        "--max-iter", "2", "--tol", "1e-15")
    assert code == 1 and "bracket" in err
    # usage errors
    assert call("classicality", "--temperature", "1", "--volume", "1", "--n", "1", "--units", "SI")[0] == 2
    assert call("occupations", "--stats", "FD", "--beta", "1", "--uniform", "0:1:2")[0] == 2
    assert call("huggett", "--n", "2")[0] == 2
    assert call("occupations", "--stats", "FD", "--beta", "1", "--mu", "0", "--spectrum", "/nope.csv")[0] == 2


@pytest.mark.parametrize("argv, flag", [
    (["occupations", "--stats", "FD", "--beta", "-1", "--mu", "0", "--uniform", "0:1:2"], "--beta"),
    (["blackbody", "--temperature", "1", "--eps-range", "1:2"], "--eps-range"),
    (["occupations", "--stats", "QQ", "--beta", "1", "--mu", "0", "--uniform", "0:1:2"], "--stats"),
    (["huggett", "--n", "0", "--k", "2"], "--n"),
])
def test_flag_validation_names_flag(argv, flag, capsys):
    assert call(*argv)[0] == 2
    assert flag in capsys.readouterr().err


def test_env_unit_mode(monkeypatch):
    monkeypatch.setenv("STATMECH_UNITS", "SI")
    code, out, _ = call("blackbody", "--temperature", "300", "--eps-range", "1e-21:1e-20:3", "--format", "json")
    assert code == 0
    assert json.loads(out)["config_echo"]["units"] == "SI"
    monkeypatch.setenv("STATMECH_UNITS", "furlongs")
    assert call("blackbody", "--temperature", "1", "--eps-range", "1:2:3")[0] == 2


def test_output_file(tmp_path):
    path = tmp_path / "out.json"
    code, out, _ = call("huggett", "--n", "3", "--k", "5", "--impenetrable", "--format", "json", "-o", str(path))
    assert code == 0 and out == ""
    doc = json.loads(path.read_text())
    assert len(doc["rows"]) == 10
    assert "output" not in doc["config_echo"]


def test_non_finite_json():
    code, out, _ = call("solve-mu", "--stats", "MB", "--beta", "1", "--n", "1", "--uniform", "0:1:2",
                        "--format", "json")
    doc = json.loads(out)
    assert math.isinf(float(doc["result"]["bracket_lo"]))
