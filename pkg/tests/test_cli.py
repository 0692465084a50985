import json
import subprocess
import sys

import pytest

from topoarg import fixture_path
from topoarg.cli import main

FIG1 = str(fixture_path("fig1"))
UNIFORM = str(fixture_path("uniform3"))


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_validate(capsys, caplog):
    code, out, err = run(capsys, "validate", FIG1)
    assert code == 0 and "8 opens" in out and "whole domain" in caplog.text
    code, out, err = run(capsys, "validate", FIG1, "--strict")
    assert code == 2 and "whole domain" in err


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "validate", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "validate", bad)[0] == 2
    data = json.loads(open(FIG1).read())
    data["attack"]["pairs"].remove([["1"], ["2", "3"]])
    bad.write_text(json.dumps(data))
    code, _, err = run(capsys, "validate", bad)
    assert code == 2 and "condition 1" in err and "{1}, {2,3}" in err
    assert run(capsys, "check", FIG1, "--formula", "p &")[0] == 2
    assert run(capsys, "check", FIG1, "--formula", "r")[0] == 2
    assert run(capsys, "believes", FIG1, "--prop", '["9"]')[0] == 2


def test_topology(capsys):
    code, out, _ = run(capsys, "topology", FIG1)
    assert out.split() == ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
    code, data = run_json(capsys, "topology", FIG1)
    assert len(data["opens"]) == 8


def test_grounded(capsys):
    code, data = run_json(capsys, "grounded", FIG1)
    assert data["grounded"] == [["1", "2"], ["2", "3"], ["1", "2", "3"]]
    assert data["iterations"][0] == []
    code, out, _ = run(capsys, "grounded", FIG1, "--dot")
    assert out.startswith("digraph") and '"{2,3}" -> "{1}"' in out


def test_classify(capsys):
    code, data = run_json(capsys, "classify", FIG1, "--set", '[["1","2"],["2","3"],["1","2","3"]]')
    assert data == {"conflict_free": True, "admissible": True, "complete": True,
                    "stable": False, "preferred": False}
    assert run(capsys, "classify", FIG1, "--set", "[[")[0] == 2


@pytest.mark.parametrize("prop,notion,expected", [
    ('["1","2"]', "grounded", True), ('["2"]', "grounded", False),
    ('["1","2"]', "bel", False), ('["1","2","3"]', "vbp", True)])
def test_believes(capsys, prop, notion, expected):
    code, data = run_json(capsys, "believes", FIG1, "--prop", prop, "--notion", notion)
    assert code == 0 and data["believed"] is expected


def test_compare_tsv(capsys):
    code, out, _ = run(capsys, "compare", FIG1)
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert rows[0] == ["proposition", "B", "Bel"]
    assert ["{1,2}", "1", "0"] in rows and ["{1,2,3}", "1", "1"] in rows and ["{2}", "0", "0"] in rows


def test_check(capsys):
    code, data = run_json(capsys, "check", FIG1, "--formula", "B p & B q & ~B(p & q)")
    assert data["extension"] == ["1", "2", "3"]
    code, data = run_json(capsys, "check", FIG1, "--formula", "p", "--world", "3")
    assert data["truth"] == {"3": False}


def test_axioms(capsys):
    code, data = run_json(capsys, "axioms", FIG1)
    rows = {r["schema"]: r for r in data["schemas"]}
    assert code == 0 and data["sound"]
    assert rows["C"]["valid"] is False and rows["C"]["witness"] == [["1", "2"], ["2", "3"]]


def test_convert_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "convert", FIG1, "--to", "neighborhood")
    data = json.loads(out)
    assert data["neighborhood"] == [["1", "2"], ["2", "3"], ["1", "2", "3"]]
    path = tmp_path / "n.json"
    path.write_text(out)
    code, out, _ = run(capsys, "convert", path, "--to", "tam")
    tam = tmp_path / "t.json"
    tam.write_text(out)
    code, data = run_json(capsys, "grounded", tam)
    assert data["grounded"] == [["1", "2"], ["2", "3"], ["1", "2", "3"]]


def test_prob(capsys):
    code, data = run_json(capsys, "prob", UNIFORM, "--correspond")
    assert code == 0 and data["holds"] and data["lfp_equals_threshold_sets"]
    code, data = run_json(capsys, "prob", UNIFORM, "--formula", "p & q")
    assert data["measure"] == "1/3" and data["PB"] is False
    assert run(capsys, "prob", UNIFORM)[0] == 2


def test_random_is_seeded(capsys):
    a = run(capsys, "random", "--seed", "7", "--worlds", "3", "--mode", "symmetric")[1]
    b = run(capsys, "random", "--seed", "7", "--worlds", "3", "--mode", "symmetric")[1]
    assert a == b and json.loads(a)["worlds"] == ["1", "2", "3"]


def test_sweep(capsys):
    code, data = run_json(capsys, "sweep", "--count", "20", "--properties", "prop31,lfp_oracle")
    assert code == 0 and data["ok"] and data["models"] == 20
    code, out, _ = run(capsys, "sweep", "--count", "10", "--neighborhood")
    assert code == 0 and "lfp_eq_neighborhood" in out
    assert run(capsys, "sweep", "--count", "5", "--properties", "bogus")[0] == 2


def test_sweep_counterexample_replays(capsys, tmp_path):
    code, data = run_json(capsys, "sweep", "--count", "200", "--properties",
                          "closure_under_intersection")
    assert code == 0 and data["counterexamples"]
    cx = data["counterexamples"][0]
    path = tmp_path / "cx.json"
    path.write_text(json.dumps(cx["model"]))
    code, data = run_json(capsys, "validate", path, "--strict", "--property", cx["property"])
    assert data["properties"][cx["property"]][:5] == cx["messages"]


def test_failure_exit_code(capsys, monkeypatch):
    from topoarg import sweep
    monkeypatch.setitem(sweep.REGISTRY, "prop31",
                        sweep.Property("prop31", lambda m: ["forced"], sweep.MUST_HOLD))
    assert run(capsys, "validate", FIG1, "--property", "prop31")[0] == 1
    assert run(capsys, "sweep", "--count", "3", "--properties", "prop31")[0] == 1


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "topoarg.cli", "topology", FIG1],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "{1,2,3}" in out.stdout
