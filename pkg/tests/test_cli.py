import json
import subprocess
import sys

import pytest

from metacs.cli import main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_examples(capsys):
    assert run(capsys, "eval", "cs", "--k", "1", "--lambda", "2", "--theta")[1].strip() == "u^2"
    assert run(capsys, "eval", "hl", "--k", "2", "--lambda", "2,0")[1].strip() == "x1^2 + (1 - t)*x1*x2 + x2^2"
    assert run(capsys, "eval", "hilbert", "--p", "7", "--a", "7", "--b", "7")[1].strip() == "-1"
    assert run(capsys, "eval", "gamma", "--p", "7", "--a", "7")[1].strip() == "i"
    assert run(capsys, "eval", "gamma", "--p", "7", "--a", "7", "--convention", "minus")[1].strip() == "-i"
    assert run(capsys, "eval", "zeta-coeff", "--k", "1", "--degree", "4")[1].strip() == "x1^4"


def test_eval_cs_numeric_and_json(capsys):
    code, out, _ = run(capsys, "eval", "cs", "--k", "1", "--lambda", "0", "--char", "2", "--eps", "-1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"version", "command", "seed", "result"}
    assert doc["result"]["value"] == "(-4*u^2 + 1)/(u^4 + 1)"


@pytest.mark.parametrize("argv", [
    ["eval", "cs", "--k", "2", "--lambda", "1,2"],
    ["eval", "cs", "--k", "2", "--lambda", "2,0", "--char", "2"],
    ["eval", "cs", "--k", "1", "--lambda", "0", "--char", "1"],
    ["eval", "cs", "--k", "2", "--lambda", "x"],
    ["eval", "hilbert", "--p", "2", "--a", "1", "--b", "1"],
    ["eval", "hilbert", "--p", "5", "--a", "0", "--b", "1"],
    ["eval", "hl", "--k", "2"],
    ["verify", "cocycle", "--n", "3"],
    ["verify", "nonsense"],
    ["verify", "theta", "--k", "9"],
])
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_verify_pass_and_formats(capsys):
    code, out, _ = run(capsys, "verify", "zeta", "--k", "2", "--trunc", "8")
    assert code == 0 and out.splitlines()[-1] == "2 checks, 0 not passing"
    code, out, _ = run(capsys, "verify", "theta", "--k", "2", "--max-norm", "4", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["command"] == "verify theta" and doc["seed"] == 0
    assert [r["status"] for r in doc["reports"]] == ["pass"]
    assert doc["reports"][0]["duration_ms"] == 0
    code, out, _ = run(capsys, "verify", "hilbert", "--p", "5", "--trials", "20", "--format", "csv")
    assert code == 0 and out.startswith("check,status,params,witness,duration_ms\n")


def test_small_prime_is_flagged(capsys):
    code, out, _ = run(capsys, "verify", "hilbert", "--p", "3", "--trials", "10", "--format", "json")
    assert code == 0
    assert all("flag" in r["params"] for r in json.loads(out)["reports"])


def test_failing_check_exits_one_with_witness(capsys, monkeypatch):
    from metacs import suites

    def broken(ctx, **kw):
        return [suites.run(ctx, "demo.broken", {}, lambda: (False, {"why": "forced"}))]
    monkeypatch.setitem(suites.SUITES, "hl", broken)
    code, out, _ = run(capsys, "verify", "hl", "--format", "json")
    assert code == 1
    rep = json.loads(out)["reports"][0]
    assert rep["status"] == "fail" and rep["witness"] == {"why": "forced"}


def test_exceptions_become_error_reports(capsys, monkeypatch):
    from metacs import suites

    def boom(ctx, **kw):
        return [suites.run(ctx, "demo.boom", {}, lambda: 1 / 0)]
    monkeypatch.setitem(suites.SUITES, "hl", boom)
    code, out, _ = run(capsys, "verify", "hl")
    assert code == 1 and out.startswith("ERROR demo.boom")


def test_seeded_runs_are_byte_identical(capsys):
    argv = ["verify", "cocycle", "--p", "5", "--n", "2", "--trials", "30", "--seed", "4", "--format", "json"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    other = run(capsys, *argv[:-3], "5", "--format", "json")[1]
    assert first == second
    assert json.loads(first)["seed"] == 4 and json.loads(other)["seed"] == 5


def test_tables(capsys, tmp_path):
    out = tmp_path / "theta.csv"
    code, _, _ = run(capsys, "table", "theta", "--k", "2", "--max-norm", "6", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "lambda,value" and lines[1] == '"0,0",1' and len(lines) == 7
    code, text, _ = run(capsys, "table", "q", "--n", "3")
    assert text.splitlines()[-1] == "3,u^12 + 2*u^8 + 2*u^4 + 1"
    code, text, _ = run(capsys, "table", "hilbert", "--p", "5", "--format", "json")
    doc = json.loads(text)
    assert doc["columns"] == ["a", "b", "symbol"] and len(doc["rows"]) == 16
    assert [5, 5, 1] in doc["rows"] and [2, 5, -1] in doc["rows"]


def test_unwritable_output_exits_one(capsys, tmp_path):
    code, _, err = run(capsys, "table", "q", "--n", "2", "--out", str(tmp_path / "missing" / "q.csv"))
    assert code == 1 and "error" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "metacs", "eval", "hilbert", "--p", "5", "--a", "5", "--b", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "-1"
