import json
import subprocess
import sys

import pytest

from orbitclosure.cli import apply_fault, main
from orbitclosure.paperdata import PaperData


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_json_passes(capsys):
    code, out, _ = run(["verify", "--suite", "minors", "--trials", "30", "--seed", "42", "--format", "json"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True and report["seed"] == 42
    assert report["duration_ms"] is None


def test_verify_is_byte_deterministic(capsys):
    argv = ["verify", "--suite", "cover", "--trials", "10", "--format", "json"]
    _, a, _ = run(argv, capsys)
    _, b, _ = run(argv, capsys)
    assert a == b


def test_verify_timing_flag(capsys):
    _, out, _ = run(["verify", "--suite", "minors", "--trials", "5", "--format", "json", "--timing"], capsys)
    assert json.loads(out)["duration_ms"] > 0


def test_verify_text_to_file(tmp_path, capsys):
    path = tmp_path / "r.txt"
    code, out, _ = run(["verify", "--suite", "sets", "--primes", "2", "--out", str(path)], capsys)
    assert code == 0 and out == ""
    text = path.read_text()
    assert "OVERALL: PASS" in text and "sets.F2.VS_eq_O_eta_u_0" in text


def test_enumerate_writes_eight_rows(tmp_path, capsys):
    path = tmp_path / "vs_f2.csv"
    code, _, _ = run(["enumerate", "--system", "S", "--prime", "2", "--out", str(path)], capsys)
    assert code == 0
    lines = path.read_text().strip().split("\n")
    assert lines[0].startswith("g121,")
    assert len(lines) == 1 + 8


def test_orbit_prints_seven_vectors(capsys):
    code, out, _ = run(["orbit", "--base", "eta", "--prime", "2"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 1 + 7
    assert "0,0,0,0,0,0,1,0,0" in lines


def test_orbit_full_coordinates(capsys):
    code, out, _ = run(["orbit", "--base", "zero", "--prime", "3", "--full"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2 and len(lines[0].split(",")) == 27


@pytest.mark.parametrize("argv", [
    ["enumerate", "--system", "S", "--prime", "4"],
    ["verify", "--primes", "2,9"],
    ["verify", "--bogus"],
    ["orbit", "--base", "sigma", "--prime", "2"],
    ["verify", "--trials", "0"],
    [],
    ["verify", "--inject-fault", "s3:99:0"],
    ["verify", "--inject-fault", "entry:nope:1:1"],
    ["verify", "--inject-fault", "garbage"],
])
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_budget_exceeded_exits_2(monkeypatch, capsys):
    monkeypatch.setenv("ORBITCLOSURE_BUDGET", "100")
    code, _, err = run(["enumerate", "--system", "S", "--prime", "3"], capsys)
    assert code == 2
    assert "ORBITCLOSURE_BUDGET" in err


def test_injected_fault_exits_1(capsys):
    code, out, _ = run(["verify", "--suite", "cover", "--trials", "5", "--format", "json",
                        "--inject-fault", "s3:4:1"], capsys)
    assert code == 1
    report = json.loads(out)
    bad = [c for c in report["claims"] if c["status"] == "fail"]
    assert bad and all("counterexample" in c for c in bad)
    assert report["mutations"]


def test_apply_fault_entry_is_one_based():
    data = apply_fault(PaperData.default(), "entry:g1:2:1")
    assert data.witness("g1").flips == frozenset({(1, 0)})


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbitclosure", "orbit", "--base", "rho", "--prime", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert len(proc.stdout.strip().split("\n")) > 1
