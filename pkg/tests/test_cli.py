import json
import subprocess
import sys
from pathlib import Path

import pytest

from cubic_thue.cli import main

GOLDEN = Path(__file__).parent / "golden"

CASES = [
    ("certify_avanesov_k2.json", ["certify", "--form", "1,-2,-5,-1", "--k", "2"], 0),
    ("certify_avanesov_k1.json", ["certify", "--form", "1,-2,-5,-1", "--k", "1"], 1),
    ("certify_mordell.json", ["certify", "--kind", "mordell", "--form", "1,-2,-5,-3", "--t", "2"], 0),
    ("solve_avanesov_k1.json", ["solve", "--form", "1,-2,-5,-1", "--k", "1", "--box", "10"], 0),
    ("field_conductor31.json", ["field", "--form", "1,1,-10,-8"], 0),
    ("analyze_avanesov.json", ["analyze", "--form", "1,-2,-5,-1"], 0),
    ("family_kishi.json", ["family", "--name", "kishi", "--n", "-1:1"], 0),
    ("family_togbe.json", ["family", "--name", "togbe-washington", "--n", "3:5"], 0),
    ("verify_avanesov.json", ["verify", "--form", "1,-2,-5,-1", "--box", "20"], 0),
]


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name, argv, expected_code", CASES)
def test_golden(name, argv, expected_code, capsys, monkeypatch):
    monkeypatch.delenv("CUBIC_THUE_LIFT_DEPTH", raising=False)
    code, out, _ = run(argv, capsys)
    assert code == expected_code
    assert out == (GOLDEN / name).read_text()
    # byte-identical on repeat
    assert run(argv, capsys)[1] == out


def test_certify_reports_no_solutions(capsys):
    code, out, _ = run(["certify", "--form", "1,-2,-5,-1", "--k", "2"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == "NoSolutions"


def test_solve_lists_three_known_solutions(capsys):
    code, out, _ = run(["solve", "--form", "1,-2,-5,-1", "--k", "1", "--box", "10"], capsys)
    sols = json.loads(out)["solutions"]
    assert code == 0
    assert {("1", "0"), ("0", "-1"), ("-1", "1")} <= {tuple(s) for s in sols}


def test_field_conductor_31(capsys):
    code, out, _ = run(["field", "--form", "1,1,-10,-8"], capsys)
    doc = json.loads(out)
    assert code == 0
    assert doc["splitting_type_2"] == "TotallySplit" and doc["common_index_divisor_2"] is True


def test_field_depth_option_and_env(capsys, monkeypatch):
    _, out, _ = run(["field", "--form", "1,-2,-5,-1", "--depth", "20"], capsys)
    assert json.loads(out)["depth"] == "20"
    monkeypatch.setenv("CUBIC_THUE_LIFT_DEPTH", "33")
    _, out, _ = run(["field", "--form", "1,-2,-5,-1"], capsys)
    assert json.loads(out)["depth"] == "33"


def test_solve_jobs_identical(capsys):
    argv = ["solve", "--form", "3,-1,-10,-3", "--k", "-27", "--box", "80"]
    _, serial, _ = run(argv, capsys)
    _, parallel, _ = run(argv + ["--jobs", "4"], capsys)
    assert serial == parallel


def test_family_simplest_range(capsys):
    code, out, _ = run(["family", "--name", "simplest", "--m", "1:3", "--n", "0:4"], capsys)
    doc = json.loads(out)
    assert code == 0 and len(doc["instances"]) == 15
    by_param = {(e["parameters"]["m"], e["parameters"]["n"]): e for e in doc["instances"]}
    assert by_param["2", "1"]["splitting_2"] == "TotallySplit"
    assert by_param["1", "2"]["theorem_applicable"] is True


def test_out_file(tmp_path, capsys):
    target = tmp_path / "cert.json"
    code, out, _ = run(["--out", str(target), "certify", "--form", "1,-2,-5,-1", "--k", "2"], capsys)
    assert target.read_text() == out


@pytest.mark.parametrize("argv", [
    ["certify", "--form", "1,2,3", "--k", "2"],
    ["certify", "--form", "1,-2,-5,-1", "--k", "2.5"],
    ["certify", "--form", "1,-2,-5,-1", "--k", "0"],
    ["certify", "--form", "0,1,1,1", "--k", "2"],
    ["certify", "--kind", "mordell", "--form", "1,0,0,0"],
    ["solve", "--form", "1,-2,-5,-1", "--k", "1", "--box", "0"],
    ["field", "--form", "1,0,-1,-1"],
    ["verify", "--form", "1,0,1,1", "--box", "5"],
    ["family", "--name", "simplest", "--m", "0", "--n", "1"],
    ["family", "--name", "nope", "--n", "1"],
    ["frobnicate"],
    [],
])
def test_input_errors_are_json(argv, capsys):
    code, out, err = run(argv, capsys)
    assert code == 2 and out == ""
    assert "error" in json.loads(err)


def test_verify_violation_exit_code(capsys, monkeypatch):
    from cubic_thue import oracle

    monkeypatch.setattr(oracle, "_require_theorem_shape", lambda f: None)
    code, out, _ = run(["verify", "--form", "1,1,-10,-8", "--box", "10"], capsys)
    assert code == 1 and json.loads(out)["total_violations"] > 0


def test_negative_values_after_flags(capsys):
    code, out, _ = run(["analyze", "--form", "-1,2,5,1"], capsys)
    assert code == 0 and json.loads(out)["hessian"] == ["19", "19", "19"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubic_thue", "certify", "--form", "1,-2,-5,-1",
                           "--k", "4"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "NoSolutions"
