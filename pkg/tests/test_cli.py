"""CLI behavior: text output, JSON schema conformance, exit codes."""

import json
from importlib import resources

import jsonschema
import pytest

from arfbetti.cli import EXIT_MATH, EXIT_OK, EXIT_USAGE, main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, command, *argv):
    code, out, err = run(capsys, *argv)
    payload = json.loads(out)
    schema = json.loads(
        resources.files("arfbetti").joinpath(f"schemas/{command}.json").read_text()
    )
    jsonschema.validate(payload, schema)
    return code, payload, err


def test_info_text(capsys):
    code, out, err = run(capsys, "info", "3,7,8")
    assert code == EXIT_OK
    assert err == ""
    assert out.splitlines() == [
        "generators: 3,7,8",
        "multiplicity: 3",
        "embedding dimension: 3",
        "conductor: 6",
        "frobenius: 5",
        "genus: 4",
        "gaps: 1,2,4,5",
        "min mod multiplicity: 0,7,8",
        "arf: yes",
    ]


def test_info_json(capsys):
    code, payload, _ = run_json(capsys, "info", "info", "3,7,8", "--json")
    assert code == EXIT_OK
    assert payload["generators"] == [3, 7, 8]
    assert payload["conductor"] == 6
    assert payload["arf"] is True


def test_arf_check_positive(capsys):
    code, out, _ = run(capsys, "arf-check", "3,7,8")
    assert code == EXIT_OK
    assert out == "Arf\n"


def test_arf_check_negative_witness(capsys):
    code, out, _ = run(capsys, "arf-check", "4,6,7")
    assert code == EXIT_OK  # an answer, not an error
    assert out == "not Arf: witness s=6 t=7 u=4 (9 \u2209 S)\n"


def test_arf_check_json(capsys):
    code, payload, _ = run_json(capsys, "arf_check", "arf-check", "4,6,7", "--json")
    assert code == EXIT_OK
    assert payload["arf"] is False
    assert payload["witness"] == {"s": 6, "t": 7, "u": 4, "missing": 9}


def test_arf_closure(capsys):
    code, out, _ = run(capsys, "arf-closure", "4,6,7")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "input: 4,6,7"
    assert lines[1].startswith("closure: ")
    assert lines[2] == "changed: yes"
    code, payload, _ = run_json(
        capsys, "arf_closure", "arf-closure", "4,6,7", "--json"
    )
    assert payload["changed"] is True


def test_blowup_text_and_json(capsys):
    code, out, _ = run(capsys, "blowup", "3,7,8")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "input: 3,7,8",
        "blowup: 3,4,5",
        "multiplicity preserved: yes",
    ]
    code, payload, _ = run_json(capsys, "blowup", "blowup", "2,3", "--json")
    assert payload["blowup_generators"] == [1]
    assert payload["multiplicity_preserved"] is False


def test_complex_output(capsys):
    code, out, _ = run(capsys, "complex", "3,4,5", "8")
    assert code == EXIT_OK
    assert out.splitlines() == [
        "s: 8",
        "vertices: 3",
        "dim: 1",
        "faces: [] [1] [2] [3] [1,3]",
    ]
    code, payload, _ = run_json(capsys, "complex", "complex", "3,4,5", "2", "--json")
    assert payload["faces"] == []  # void
    code, out, err = run(capsys, "complex", "3,4,5", "--", "-2")
    assert code == EXIT_USAGE
    assert "nonnegative" in err


def test_betti_text(capsys):
    code, out, _ = run(capsys, "betti", "3,4,5")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "generators: 3,4,5"
    assert lines[1] == "field: Q"
    assert lines[2].startswith("i\\s")
    assert lines[-1] == "total: i=0:1 i=1:3 i=2:2"


def test_betti_json(capsys):
    code, payload, _ = run_json(
        capsys, "betti", "betti", "3,4,5", "--field", "gf:2", "--json"
    )
    assert code == EXIT_OK
    assert payload["field"] == "GF(2)"
    assert {"i": 2, "s": 13, "dim": 1} in payload["betti"]
    assert payload["total"] == {"0": 1, "1": 3, "2": 2}


def test_betti_scale_abort(capsys):
    code, out, err = run(capsys, "betti", ",".join(str(v) for v in range(14, 28)))
    assert code == EXIT_MATH
    assert err.startswith("scale limit:")
    assert out == ""


def test_verify_text(capsys):
    code, out, _ = run(capsys, "verify", "3,7,8")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "generators: 3,7,8" in lines
    assert "blowup: 3,4,5" in lines
    assert "shift base: 3" in lines
    assert "checked pairs: 5" in lines
    assert "mismatches: 0" in lines
    assert "unmatched faces: type1=0 type2=0 type3=0 type4=0" in lines
    assert "verdict: pass" in lines


def test_verify_json(capsys):
    code, payload, _ = run_json(capsys, "verify", "verify", "3,7,8", "--json")
    assert code == EXIT_OK
    assert payload["verdict"] == "pass"
    assert payload["classification"]["pairs"] == 5
    assert payload["i0_excluded"] is True


def test_verify_precondition_exits(capsys):
    code, out, err = run(capsys, "verify", "2,3")
    assert code == EXIT_USAGE
    assert err == "blowup multiplicity drops\n"
    assert out == ""
    code, out, err = run(capsys, "verify", "4,6,7")
    assert code == EXIT_USAGE
    assert err == "not an Arf semigroup\n"


def test_sweep_text_and_json(capsys):
    code, out, _ = run(capsys, "sweep", "--bound", "6")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert "total: 11" in lines
    assert "eligible: 4" in lines
    assert "passes: 4" in lines
    assert "verdict: pass" in lines
    code, payload, _ = run_json(capsys, "sweep", "sweep", "--bound", "6", "--json")
    assert payload["passes"] == 4
    assert payload["completed"] is True


def test_enumerate_output(capsys):
    code, out, _ = run(capsys, "enumerate", "--bound", "2")
    assert code == EXIT_OK
    assert out.splitlines() == ["count: 2", "1", "2,3"]
    code, payload, _ = run_json(
        capsys, "enumerate", "enumerate", "--bound", "2", "--json"
    )
    assert payload["count"] == 2
    assert payload["semigroups"] == [[1], [2, 3]]
    code, out, err = run(capsys, "enumerate", "--bound", "-3")
    assert code == EXIT_USAGE
    assert "nonnegative" in err


def test_bad_generator_input(capsys):
    code, out, err = run(capsys, "info", "2,4")
    assert code == EXIT_USAGE
    assert err != ""
    code, out, err = run(capsys, "info", "0")
    assert code == EXIT_USAGE
    code, out, err = run(capsys, "info", "3,x")
    assert code == EXIT_USAGE


def test_bad_field_argument(capsys):
    code, out, err = run(capsys, "betti", "3,4,5", "--field", "gf:6")
    assert code == EXIT_USAGE
    assert "gf:6" in err or "prime" in err


def test_unknown_subcommand(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == EXIT_USAGE
    assert err != ""


def test_missing_subcommand(capsys):
    code, _, err = run(capsys)
    assert code == EXIT_USAGE


def test_help_exits_zero(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "arfbetti" in out


def test_json_is_compact_single_line(capsys):
    _, out, _ = run(capsys, "info", "3,7,8", "--json")
    assert out.count("\n") == 1
    assert ": " not in out
