import json
import subprocess
import sys

import jsonschema
import pytest

from pkaequiv.cli import run

from conftest import FIXTURES

RATIONAL = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
CHECK_SCHEMA = {
    "type": "object",
    "required": ["verdict", "stages", "generators", "basis_size", "witness"],
    "additionalProperties": False,
    "properties": {
        "verdict": {"enum": ["equivalent", "not_equivalent"]},
        "stages": {"type": "integer", "minimum": 0},
        "generators": {"type": "integer", "minimum": 0},
        "basis_size": {"type": "integer", "minimum": 0},
        "witness": {"oneOf": [{"type": "null"}, {
            "type": "object",
            "required": ["depth", "profile", "left", "right"],
            "additionalProperties": False,
            "properties": {
                "depth": {"type": "integer", "minimum": 1},
                "profile": {"type": "object",
                            "additionalProperties": {"type": "integer", "minimum": 1}},
                "left": RATIONAL,
                "right": RATIONAL,
            },
        }]},
    },
}


def fx(name):
    return str(FIXTURES / name)


def check_json(capsys, name, *extra):
    code = run(["check", fx(name), "--json", *extra])
    payload = json.loads(capsys.readouterr().out)
    jsonschema.validate(payload, CHECK_SCHEMA)
    return code, payload


def test_check_cycle(capsys):
    code, payload = check_json(capsys, "cycle_vs_geometric.pa")
    assert code == 0
    assert payload == {"verdict": "equivalent", "stages": 2, "generators": 2,
                       "basis_size": 2, "witness": None}


def test_check_eps_pair(capsys):
    code, payload = check_json(capsys, "eps_vs_eps2.pa")
    assert code == 1
    assert payload["verdict"] == "not_equivalent" and payload["stages"] == 1
    assert payload["witness"] == {"depth": 1, "profile": {"": 1}, "left": "1/2", "right": "0"}


def test_check_zero_seed(capsys):
    code, payload = check_json(capsys, "zero_seed.pa")
    assert code == 0 and payload["stages"] == 0 and payload["basis_size"] == 0


def test_check_fragment_and_no_witness(capsys):
    assert check_json(capsys, "fragment.pa")[0] == 0
    code, payload = check_json(capsys, "geometric.pa", "--no-witness")
    assert code == 1 and payload["witness"] is None


def test_check_human_output(capsys):
    assert run(["check", fx("cycle_vs_geometric.pa")]) == 0
    out = capsys.readouterr().out
    assert "equivalent after 2 stage(s)" in out and "s - u" in out
    assert run(["check", fx("eps_vs_eps2.pa")]) == 1
    out = capsys.readouterr().out
    assert "not equivalent at stage 1" in out
    assert "witness at depth 1: ε:1 left 1/2 right 0" in out


def test_trace_goes_to_stderr(capsys):
    assert run(["check", fx("cycle_vs_geometric.pa"), "--trace", "--json"]) == 0
    captured = capsys.readouterr()
    assert "stage 1:" in captured.err and "stage 2:" in captured.err
    json.loads(captured.out)


def test_stage_cap_exit_code(capsys):
    assert run(["check", fx("cycle_vs_geometric.pa"), "--max-stages", "1"]) == 3
    assert "no verdict within 1 stages" in capsys.readouterr().err


def test_semantics_table(capsys):
    assert run(["semantics", fx("geometric.pa"), "--side", "left", "--depth", "2"]) == 0
    assert capsys.readouterr().out.splitlines() == ["(ε:1) = 1/2", "(a:1) = 1/4", "(none) = 1/4"]
    assert run(["semantics", fx("geometric.pa"), "--side", "right", "--depth", "1", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["rows"] == [{"profile": {"": 1}, "value": "1/3"},
                               {"profile": {}, "value": "2/3"}]


def test_witness_command(capsys):
    assert run(["witness", fx("geometric.pa"), "--cap", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {
        "witness": {"depth": 1, "profile": {"": 1}, "left": "1/2", "right": "1/3"}}
    assert run(["witness", fx("cycle_vs_geometric.pa"), "--cap", "3"]) == 1
    assert "no separating profile up to depth 3" in capsys.readouterr().out


def test_input_errors(tmp_path, capsys):
    assert run(["check", str(tmp_path / "missing.pa")]) == 2
    bad = tmp_path / "bad.pa"
    bad.write_text("alphabet a\nstate s\ntrans s = 3/4 eps + 1/2 a.s\nleft 1 { s }\nright 1 { s }\n")
    assert run(["check", str(bad)]) == 2
    assert "mass 5/4" in capsys.readouterr().err
    assert run(["check", str(bad), "--relaxed"]) == 0
    syntax = tmp_path / "syntax.pa"
    syntax.write_text("alphabet a\nstate s\ntrans s = ?\n")
    assert run(["semantics", str(syntax), "--side", "left", "--depth", "1"]) == 2
    assert "line 3, column 11" in capsys.readouterr().err
    assert run(["check"]) == 2
    assert run(["witness", fx("geometric.pa"), "--cap", "0"]) == 2


def test_signed_seed_needs_relaxed(tmp_path, capsys):
    f = tmp_path / "signed.pa"
    f.write_text("alphabet a\nstate s\ntrans s = eps\nleft 2 { s }\nright 1 { s }\nright 1 { s }\n")
    assert run(["check", str(f)]) == 2
    assert "weights sum to 2" in capsys.readouterr().err
    assert run(["check", str(f), "--relaxed"]) == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pkaequiv", "check", fx("eps_vs_eps2.pa"), "--json"],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["verdict"] == "not_equivalent"


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.pa")), ids=lambda p: p.name)
def test_json_schema_all_fixtures(path, capsys):
    code = run(["check", str(path), "--json"])
    assert code in (0, 1)
    jsonschema.validate(json.loads(capsys.readouterr().out), CHECK_SCHEMA)
