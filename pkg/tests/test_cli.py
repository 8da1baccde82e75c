import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from charclass.cli import infer_variables, main

NODAL = ["-e", "x0^3+x1^3-x0*x1*x2", "--vars", "x0,x1,x2"]
SCHEMA = json.loads(resources.files("charclass").joinpath("report.schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc, err


def test_csm_nodal(capsys):
    code, doc, err = run_json(capsys, "csm", *NODAL)
    assert code == 0 and err == ""
    assert doc["classes"]["csm"] == [0, 3, 1]
    assert doc["euler_characteristic"] == 1
    assert doc["bidegrees"]["characteristic"] == [3, 5]
    assert doc["verdicts"]["reduced"] is True
    assert doc["schema"] == 1 and doc["command"] == "csm"


def test_xcond_cusp(capsys):
    code, doc, _ = run_json(capsys, "xcond", "-e", "x1^2*x2-x0^3", "--vars", "x0,x1,x2")
    assert code == 0
    assert doc["verdicts"]["xcondition"] is True and doc["witness"] is None


def test_non_reduced_exit_1(capsys):
    code, doc, err = run_json(capsys, "csm", "-e", "x0^2*x1", "--vars", "x0,x1,x2")
    assert code == 1
    assert doc["error"]["code"] == "NON_REDUCED"
    assert "NON_REDUCED" in err


def test_budget_exit_2(capsys):
    code, doc, err = run_json(capsys, "csm", *NODAL, "--budget", "5")
    assert code == 2 and doc["error"]["code"] == "BUDGET_EXHAUSTED"
    assert err.startswith("charclass: error")


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CHARCLASS_BUDGET", "5")
    code, _, _ = run(capsys, "csm", *NODAL)
    assert code == 2


@pytest.mark.parametrize("argv", [
    ["csm"],                                           # missing -e
    ["bogus", "-e", "x0"],
    ["csm", *NODAL, "--field", "fp:12"],
    ["csm", "-e", "x0^2+x1", "--vars", "x0,x1"],       # not homogeneous
    ["csm", "-e", "x0 +", "--vars", "x0,x1"],          # parse error
    ["csm", *NODAL, "--seed", "-1"],
    ["csm", *NODAL, "--affine"],                       # blow-up flag only
    ["csm", "-e", "x0*y", "--vars", "x0,x1"],          # unknown variable
])
def test_usage_errors_exit_3(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 3
    assert "charclass: error" in err


def test_all_commands_validate(capsys):
    for cmd in ("cmather", "fulton", "fj", "conormal", "charcycle", "rees", "sym", "qsym",
                "weaklin", "crosscheck"):
        code, doc, _ = run_json(capsys, cmd, *NODAL)
        assert code == 0, cmd
    code, doc, _ = run_json(capsys, "cmather", *NODAL)
    assert doc["classes"]["cmather"] == [0, 3, 2]
    code, doc, _ = run_json(capsys, "crosscheck", *NODAL)
    assert doc["verdicts"]["printran_crosscheck"] is True


def test_report_runs_everything(capsys):
    code, doc, _ = run_json(capsys, "report", *NODAL, "--seed", "17")
    assert code == 0
    assert doc["classes"] == {"csm": [0, 3, 1], "cmather": [0, 3, 2],
                              "fulton": [0, 3, 0], "fulton_johnson": [0, 3, 0]}
    assert doc["bidegrees"] == {"conormal": [3, 4], "characteristic": [3, 5]}
    assert all(v is not None for v in doc["verdicts"].values())
    assert {"csm", "cmather", "sections"} <= set(doc["timings_ms"])


def test_determinism_without_timings(capsys):
    argv = ["report", *NODAL, "--seed", "3", "--no-timings"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)["timings_ms"] == {}


def test_rational_and_prime_field_agree(capsys):
    _, q, _ = run_json(capsys, "csm", *NODAL, "--no-timings")
    _, p, _ = run_json(capsys, "csm", *NODAL, "--no-timings", "--field", "fp:32003")
    assert q["classes"] == p["classes"] and q["bidegrees"] == p["bidegrees"]


def test_text_format_has_same_numbers(capsys):
    code, out, _ = run(capsys, "csm", *NODAL, "--format", "text")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)
    assert lines["csm"] == "0 3 1"
    assert lines["euler_characteristic"] == "1"
    assert lines["bidegrees[characteristic]"] == "3 5"


def test_affine_blowup(capsys):
    code, doc, _ = run_json(capsys, "weaklin", "-e", "x^2+y^3", "--vars", "x,y", "--affine")
    assert code == 0 and doc["input"]["affine"] is True
    assert isinstance(doc["verdicts"]["weak_linearity"], bool)
    code, doc, _ = run_json(capsys, "rees", "-e", "x*y", "--affine")
    assert doc["presentation"]["kind"] == "Rees"


def test_infer_variables_natural_order():
    assert infer_variables("x10 + x2*x1") == ["x1", "x2", "x10"]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "charclass", "fulton", *NODAL, "--no-timings"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["classes"]["fulton"] == [0, 3, 0]
