"""Command-line interface: formats, determinism, exit codes."""

import json

import pytest

import simplest_cubic.verify as verify_mod
from simplest_cubic.cli import main


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_solve_json(capsys):
    code, out = run(capsys, ["solve", "--m", "2", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    rec = doc["results"][0]
    assert rec["m"] == 2
    assert rec["certificate"] == "bounded-only"
    assert rec["t"] == 19 and rec["t_factored"] == "19"
    assert rec["orbits"] == [
        {"N": -2392, "lambda": 1, "solutions": [[-7, -2], [-2, 9], [9, -7]]}
    ]


def test_solve_csv_row(capsys):
    code, out = run(capsys, ["solve", "--m", "2", "--format", "csv"])
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "m,N,-N-3,2m+3,lambda,m^2+3m+9,xy(x+y),solutions"
    assert lines[1] == '2,-2392,2389,7,1,19,-126,"(-7,-2) (-2,9) (9,-7)"'


def test_solve_text_empty_index(capsys):
    code, out = run(capsys, ["solve", "--m", "4"])
    assert code == 0
    assert "no nontrivial solutions" in out
    assert "m=4" in out


def test_solve_range_deterministic(capsys):
    argv = ["solve-range", "--from", "28", "--to", "33", "--format", "json"]
    _, out1 = run(capsys, argv)
    _, out2 = run(capsys, argv)
    assert out1 == out2
    doc = json.loads(out1)
    assert [r["m"] for r in doc["results"]] == [28, 29, 30, 31, 32, 33]
    certs = {r["m"]: r["certificate"] for r in doc["results"]}
    assert certs[29] == "bounded-only" and certs[30] == "bounded+convergent"


def test_classify_formats(capsys):
    argv = ["classify", "--from", "-1", "--to", "100"]
    code, out = run(capsys, argv + ["--format", "text"])
    assert code == 0
    assert "class: -1 5 12" in out
    assert "pairs: 7" in out
    code, out = run(capsys, argv + ["--format", "csv"])
    assert out.split("\n")[0] == "m,n"
    assert "0,54" in out
    code, out = run(capsys, argv + ["--format", "json"])
    doc = json.loads(out)
    assert [0, 3, 54] in doc["classes"]
    assert [1, 66] in doc["classes"]
    assert len(doc["pairs"]) == 7


def test_conductor_formats(capsys):
    code, out = run(capsys, ["conductor", "--m", "516"])
    assert code == 0 and out == "89271\n"
    code, out = run(capsys, ["conductor", "--m", "516", "--format", "json"])
    doc = json.loads(out)
    assert doc["conductor"] == 89271
    assert doc["three_part"] == 9
    assert doc["odd_primes"] == [7, 13, 109]


def test_cf_text_format(capsys):
    code, out = run(capsys, ["cf", "--m", "28", "--terms", "10"])
    assert code == 0
    assert out == "-1;1,29,14,1,3,1,1,6,4\n"


def test_cf_json(capsys):
    code, out = run(capsys, ["cf", "--m", "18", "--terms", "8", "--format", "json"])
    doc = json.loads(out)
    assert doc["quotients"][:3] == [-1, 1, 19]
    assert doc["terms"] == 8


def test_verify_fast_checks_pass(capsys):
    code, out = run(capsys, ["verify", "--equal-conductor", "--small-lambda"])
    assert code == 0
    assert "[ok] equal-conductor" in out
    assert "[ok] small-lambda" in out


def test_verify_mismatch_exits_one(capsys, monkeypatch):
    monkeypatch.setitem(verify_mod.CHECKS, "overlaps", lambda: (False, ["boom"]))
    code, out = run(capsys, ["verify", "--overlaps"])
    assert code == 1
    assert "[FAIL] overlaps" in out
    assert "boom" in out


def test_output_file_and_quiet(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out = run(
        capsys,
        ["conductor", "--m", "13", "--format", "json", "--output", str(target)],
    )
    assert code == 0 and out == ""
    doc = json.loads(target.read_text())
    assert doc["conductor"] == 217

    code, out = run(capsys, ["conductor", "--m", "13", "--quiet"])
    assert code == 0 and out == ""


def test_usage_errors_exit_two(capsys):
    cases = [
        ["solve", "--m", "-5"],
        ["solve-range", "--from", "5", "--to", "4"],
        ["solve-range", "--from", "-2", "--to", "4"],
        ["classify", "--from", "3", "--to", "1"],
        ["cf", "--m", "10", "--terms", "0"],
        ["verify"],
        ["nonsense"],
    ]
    for argv in cases:
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2, argv
        capsys.readouterr()
