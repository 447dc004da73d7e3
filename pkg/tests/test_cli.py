import csv
import io
import json
import subprocess
import sys

import pytest

from artifact import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_pair_diag_index(capsys):
    code, doc = run_json(capsys, "pair", "--type", "A1", "--weight", "2", "--proj", "diag-index", "2")
    assert code == 0 and doc["schema"] == cli.SCHEMA and doc["ok"]
    rep = doc["result"]["reports"][0]
    assert rep["chi"] == {"1": "q + q^(-1)"} and rep["eta"] == {"1": "q + q^(-1)"}
    assert all(c["oracle"] for c in doc["checks"])


def test_grassmannian_report(capsys):
    code, doc = run_json(capsys, "grassmannian", "--r", "2", "--n", "4")
    res = doc["result"]
    assert code == 0 and doc["ok"]
    assert res["trace"] == res["trace_expected"] == "q^(-1) + q^(-3)"
    assert res["chi_r"] == "1" and res["levi_subset"] == [1, 3]
    assert len(res["entries"]) == 4


def test_build_rep(capsys):
    code, doc = run_json(capsys, "build-rep", "--type", "A2", "--weight", "1,1", "--matrices")
    res = doc["result"]
    assert code == 0 and res["dim"] == 8 and res["weight_multiplicities"]["0,0"] == 2
    assert set(res["E"]) == {"1", "2"}
    assert {c["name"] for c in doc["checks"]} >= {"relation:serre_E", "relation:S2"}


def test_units_markdown_and_csv(capsys):
    code, out, _ = run(capsys, "units", "--type", "A1", "--weight", "2", "--check", "all", "--format", "markdown")
    assert code == 0 and "| M:product | PASS | exact |" in out
    code, out, _ = run(capsys, "units", "--type", "A1", "--weight", "1", "--check", "antipode", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len([r for r in rows if r["kind"] == "check"]) == 4
    assert all(r["ok"] == "True" for r in rows if r["kind"] == "check")


def test_cycle(capsys):
    code, doc = run_json(capsys, "cycle", "--type", "A2", "--weight", "1,0", "--proj", "diag:1,0,0", "--pair", "a=1,2")
    sides = doc["result"]["cycles"][0]["sides"]
    assert code == 0 and sides["P"]["chain_terms"] == 27
    assert sides["P"]["pairings"] == {"eta_1": "q^(-1)", "eta_2": "0"}
    assert sides["Q"]["pairings"] == {"eta_1": "q", "eta_2": "0"}
    assert any(c["name"].endswith("boundary:identity") for c in doc["checks"])


def test_pair_all_roots_markdown(capsys):
    code, out, _ = run(capsys, "pair", "--type", "A2", "--weight", "1,1", "--all-roots", "--format", "markdown")
    assert code == 0
    assert "| chi_a(P) | q + q^(-1) | -q^(-3) |" in out
    assert "| chi_a(P) | q^(-3) | q^(-3) |" in out


def test_independence(capsys):
    code, doc = run_json(capsys, "independence", "--family", "n-omega1-plus-omega2", "--max-n", "3",
                         "--type", "G2", "--side", "P", "--pipeline-max", "2")
    cert = doc["result"]["certificates"][0]
    assert code == 0 and cert["all_independent"] and cert["root_system"] == "G2"
    assert cert["ratios"] == cert["expected_ratios"]
    code, doc = run_json(capsys, "independence", "--type", "A2", "--weight", "1,1",
                         "--proj", "weight:2,-1", "weight:-1,2", "weight:1,1", "--side", "P")
    assert code == 0 and doc["result"]["certificates"][0]["ratios"] == ["-q^4 - q^2", "(-q^(-2))/(q^2 + 1)", "1"]


def test_flags(capsys):
    code, doc = run_json(capsys, "flags", "--type", "A2", "--weight", "1,0")
    assert code == 0 and doc["result"]["entries_checked"] == {"M": 27, "N": 27}


@pytest.mark.parametrize("argv", [
    ["pair", "--type", "X9", "--weight", "1"],
    ["pair", "--type", "A2", "--weight", "1,-1"],
    ["pair", "--type", "A2"],
    ["cycle", "--type", "A2", "--weight", "1,0", "--proj", "diag:1,0"],
    ["cycle", "--type", "A2", "--weight", "1,0", "--proj", "unit:0,1"],
    ["cycle", "--type", "A2", "--weight", "1,0", "--proj", "nonsense"],
    ["pair", "--type", "A2", "--weight", "1,0", "--root", "3"],
    ["pair", "--type", "A2", "--weight", "1,0", "--proj", "diag-index", "1"],
    ["grassmannian", "--r", "3", "--n", "3"],
    ["independence", "--type", "A2", "--weight", "1,0", "--proj", "unit:1,1"],
    ["bogus"],
    ["units", "--type", "A1", "--weight", "1", "--format", "xml"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_computation_errors_exit_1(capsys):
    code, out, _ = run(capsys, "pair", "--type", "A2", "--weight", "1,0", "--proj", "unit:1,2")
    doc = json.loads(out)
    assert code == 1 and doc["ok"] is False and doc["error"]["type"] == "OutOfContract"


def test_reports_are_deterministic(capsys):
    argv = ["verify-all", "--type", "A1", "--weight", "2", "--no-examples", "--seed", "5", "--format", "json"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b and a[0] == 0


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("ARTIFACT_EQ_BUDGET", "777")
    _, doc = run_json(capsys, "units", "--type", "A1", "--weight", "1", "--check", "counit")
    assert doc["config"]["budget"] == 777
    _, doc = run_json(capsys, "units", "--type", "A1", "--weight", "1", "--check", "counit", "--budget", "9")
    assert doc["config"]["budget"] == 9


def test_verify_all_reports_failures(capsys, monkeypatch):
    def broken(rep):
        return {"KE": False}

    monkeypatch.setattr(cli, "relation_checks", broken)
    code, doc = run_json(capsys, "verify-all", "--type", "A1", "--weight", "1", "--no-examples")
    assert code == 1 and not doc["ok"] and doc["result"]["failed"] == ["relations:KE"]


def test_verify_all_adjoint(capsys):
    code, doc = run_json(capsys, "verify-all", "--type", "A2", "--weight", "1,1")
    assert code == 0 and doc["summary"]["failed"] == 0
    assert all(c["oracle"].startswith("exact") for c in doc["checks"])


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "artifact", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("artifact ")


def test_grassmannian_markdown(capsys):
    code, out, _ = run(capsys, "grassmannian", "--r", "2", "--n", "4", "--format", "markdown")
    assert code == 0 and "| Tr(K_2rho^-1 P) | q^(-1) + q^(-3) | q^(-1) + q^(-3) |" in out
