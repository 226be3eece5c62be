import json
import shutil
import subprocess
import sys

import pytest

from hochcat.catalog import ENTRIES, explicit_config
from hochcat.cli import main, render_text, run


def _run(builtin, command, p=None, **extra):
    cfg = {"algebra": {"builtin": builtin}, "command": command}
    if p is not None:
        cfg["field"] = {"characteristic": p}
    cfg.update(extra)
    return run(cfg)


def test_catalog_contents(capsys):
    assert main(["catalog"]) == 0
    names = [e["name"] for e in json.loads(capsys.readouterr().out)]
    for want in ("cell_D", "cd_extension", "unit", "vecg_c2", "vecg_c3", "vecg_c5",
                 "cell_D+dual", "cd_extension+mat2", "vecg_c5+mat2", "unit+dual"):
        assert want in names
    assert main(["catalog", "--format", "text"]) == 0
    assert "cd_extension" in capsys.readouterr().out


def test_example_runs():
    status, rep = _run("cell_D", "hh0")
    assert status == 0 and rep["dim"] == 1
    status, rep = _run("vecg_c3", "hh1", 3)
    assert status == 0 and rep["dim"] == 1 and rep["field"] == "F3"
    status, rep = _run("cd_extension", "hh2")
    assert status == 0 and rep["dim"] == 1
    assert rep["command"] == "hh2" and rep["algebra_id"] == "cd_extension" and rep["field"] == "Q"
    assert all(c["passed"] for c in rep["checks"])


def test_unit_entry():
    assert _run("unit", "hh0")[1]["dim"] == 2
    for n in (1, 2, 3):
        status, rep = _run("unit", {"hh": {"degree": n}})
        assert status == 0 and rep["dim"] == 0


def test_other_commands():
    status, rep = _run("cd_extension", "ext1")
    assert status == 0 and rep["dim"] == 1
    status, rep = _run("cell_D", "separable")
    assert status == 0 and rep["separable"] and "e0" in rep["witnesses"]
    status, rep = _run("vecg_c3", "separable", 3)
    assert status == 0 and rep["separable"] is False
    status, rep = _run("cell_D", {"kunneth": {"r": {"builtin": "dual_numbers"}, "degree": 1}})
    assert status == 0 and rep["left"] == rep["right"] == 1
    status, rep = _run("cd_extension", {"inflate": {"r": {"builtin": "matrix_algebra(2)"}}})
    assert status == 0 and rep["dims"] == {"hh0": 1, "hh1": 0, "hh2": 1}
    status, rep = _run("cd_extension", "check")
    assert status == 0 and rep["A0"] == [0] and rep["A1"] == [0]


def test_deform_command():
    g0 = {"source": [0], "target": [0], "blocks": []}
    g1 = {"source": [0], "target": [0], "blocks": [{"target": 0, "source": 0, "matrix": [["1", "0"], ["0", "1"]]}]}
    status, rep = _run("cd_extension", {"deform": {"g0": g0, "g1": g1}})
    assert status == 0, rep
    assert set(rep["witnesses"]) == {"h01", "h10", "eta1"}
    assert {c["name"] for c in rep["checks"]} >= {"associativity"}


def test_deform_non_cocycle():
    # this degree-0 part on the dual-number inflation breaks associativity
    cfg = explicit_config("cd_extension+dual")
    cfg["command"] = "check"
    status, rep = run(cfg)
    assert status == 0
    cfg["command"] = {"deform": {"g0": {"source": [0, 0, 0, 0], "target": [0, 0], "blocks": [
        {"target": 0, "source": 0, "matrix": [["1", "0"], ["0", "1"]]}]},
        "g1": {"source": [0, 0], "target": [0, 0], "blocks": []}}}
    status, rep = run(cfg)
    assert status == 1 and rep["error"]["code"] == "NO-COCYCLE"


@pytest.mark.parametrize("cfg,pointer", [
    ({"algebra": {"builtin": "nope"}, "command": "hh0"}, "/algebra/builtin"),
    ({"algebra": {"builtin": "cell_D"}, "command": "hh9"}, "/command"),
    ({"algebra": {"builtin": "cell_D"}, "command": {"hh": {"degree": -1}}}, "/command/hh/degree"),
    ({"algebra": {"builtin": "cell_D"}, "command": "hh0", "field": {"characteristic": 4}}, "/field/characteristic"),
    ({"algebra": {"builtin": "cell_D"}, "command": "hh0", "extra": 1}, ""),
    ({"algebra": {"explicit": {}}, "command": "hh0"}, "/backend"),
    ({"algebra": {"builtin": "vecg_c3"}, "command": "hh0", "backend": {"graded": {"group_table": [[0, 1], [1, 0]]}}},
     "/backend"),
    ({"algebra": {"builtin": "cell_D"}, "command": "hh0", "output": {"format": "xml"}}, "/output/format"),
])
def test_validation_errors(cfg, pointer):
    status, rep = run(cfg)
    assert status == 1
    assert rep["error"]["code"] == "INVALID"
    prefix = f"INVALID: {pointer}:" if pointer else "INVALID: "
    assert rep["error"]["message"].startswith(prefix)


def test_failing_axioms_are_rejected_before_running():
    cfg = explicit_config("cd_extension")
    alg = cfg["algebra"]["explicit"]
    for blk in alg["mu0"]["blocks"]:
        blk["matrix"] = [[x if x in ("0", 0) else "-" + str(x) for x in row] for row in blk["matrix"]]
    cfg["command"] = "hh0"
    status, rep = run(cfg)
    assert status == 1 and "/algebra" in rep["error"]["message"]
    cfg["command"] = "check"
    status, rep = run(cfg)
    assert status == 1 and any(not c["passed"] for c in rep["checks"])


def test_bad_shapes_are_pointered():
    cfg = explicit_config("cd_extension")
    cfg["algebra"]["explicit"]["iota0"]["blocks"][0]["matrix"] = [["1"]]
    cfg["command"] = "hh0"
    status, rep = run(cfg)
    assert status == 1 and "/algebra/explicit/iota0" in rep["error"]["message"]


def test_depth_bound():
    status, rep = run({"algebra": {"builtin": "unit"}, "command": {"hh": {"degree": 4}}})
    assert status == 1 and rep["error"]["code"] == "DEPTH-EXCEEDED"
    with pytest.warns(UserWarning):
        status, rep = run({"algebra": {"builtin": "unit"}, "command": {"hh": {"degree": 4}}}, max_degree=4)
    assert status == 0 and rep["dim"] == 0


@pytest.mark.parametrize("name", list(ENTRIES))
def test_explicit_round_trip(name):
    commands = ["check", "hh0", "hh1"]
    if "+" not in name:
        commands.append("hh2")
    for cmd in commands:
        a = run({"algebra": {"builtin": name}, "command": cmd}, emit_basis=True)
        cfg = explicit_config(name)
        cfg["command"] = cmd
        b = run(cfg, emit_basis=True)
        assert a == b


def test_reports_are_deterministic():
    cfg = {"algebra": {"builtin": "vecg_c3"}, "field": {"characteristic": 3}, "command": "hh2",
           "output": {"emit_basis": True}}
    first = json.dumps(run(cfg), sort_keys=False)
    assert all(json.dumps(run(cfg), sort_keys=False) == first for _ in range(3))
    rep = run(cfg)[1]
    assert "basis" in rep and len(rep["basis"]) == rep["dim"]


def test_text_rendering():
    _, rep = _run("cd_extension", "hh2")
    text = render_text(rep)
    assert "dim: 1" in text and "check coboundaries are cocycles: ok" in text


def test_main_writes_json(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"algebra": {"builtin": "cell_D"}, "command": "hh0"}))
    assert main(["run", str(path)]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 1
    assert main(["run", str(path), "--format", "text"]) == 0
    assert "dim: 1" in capsys.readouterr().out
    assert main(["run", str(path), "--max-degree", "5"]) == 0
    assert "warning" in capsys.readouterr().err
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["run", str(bad)]) == 1


def test_console_script(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"algebra": {"builtin": "vecg_c2"}, "command": "hh1", "field": {"characteristic": 2}}))
    out = subprocess.run([sys.executable, "-m", "hochcat.cli", "run", str(path)], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["dim"] == 1
    exe = shutil.which("hochcat")
    if exe:
        out = subprocess.run([exe, "catalog"], capture_output=True, text=True)
        assert out.returncode == 0 and "vecg_c2" in out.stdout
    out = subprocess.run([sys.executable, "-m", "hochcat.cli", "selftest", "--quick"], capture_output=True, text=True)
    assert out.returncode == 0, out.stdout + out.stderr
