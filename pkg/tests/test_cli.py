import json
import subprocess
import sys

import pytest

from fredpairs import C1, P1, Z
from fredpairs import checks
from fredpairs.cli import analyze, main
from fredpairs.generators import SynthSpec


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, obj in (("p1", P1), ("c1", C1), ("empty", Z(0, 0))):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(obj.to_json()))
        out[name] = str(path)
    spec = SynthSpec("II", 2, {"NN^2": 1, "Xt_2": 1, "YY2^1": 1})
    out["spec"] = str(tmp_path / "spec.json")
    (tmp_path / "spec.json").write_text(json.dumps(spec.to_json()))
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_analyze_p1(files, capsys):
    code, out, _ = run(capsys, "analyze", files["p1"])
    assert code == 0
    assert "III-2" in out
    code, out, _ = run(capsys, "analyze", files["p1"], "--json")
    rep = json.loads(out)
    assert rep["defects"]["index"] == 1
    assert (rep["classification"]["case"], rep["classification"]["number"]) == ("III", 2)
    assert rep == json.loads(json.dumps(analyze(P1).to_json()))


def test_analyze_empty_pair(files, capsys):
    code, out, _ = run(capsys, "analyze", files["empty"], "--json")
    rep = json.loads(out)
    assert code == 0 and rep["defects"]["index"] == 0
    assert rep["classification"]["case"] == "I" and rep["classification"]["number"] == 1


def test_level_flag(files, capsys):
    _, out, _ = run(capsys, "analyze", files["p1"], "--json", "--level", "1")
    assert json.loads(out)["level"] == 1


def test_fold_c1(files, capsys):
    code, out, _ = run(capsys, "fold", files["c1"], "--json")
    assert code == 0 and json.loads(out)["pair_index"] == 0


def test_other_commands(files, capsys):
    for cmd in ("classify", "ginv", "quotient"):
        code, out, _ = run(capsys, cmd, files["p1"], "--json")
        assert code == 0
        json.loads(out)
    _, out, _ = run(capsys, "ginv", files["p1"], "--json")
    assert json.loads(out)["index"] == -1


def test_synth_then_classify(files, capsys):
    out_path = str(files["dir"] / "synth.json")
    assert main(["synth", files["spec"], "--out", out_path]) == 0
    capsys.readouterr()
    _, out, _ = run(capsys, "classify", out_path, "--json")
    c = json.loads(out)
    assert (c["case"], c["number"]) == ("II", 2)


def test_random_is_seeded(capsys):
    _, a, _ = run(capsys, "random", "--seed", "3", "--x-dim", "4", "--y-dim", "2")
    _, b, _ = run(capsys, "random", "--seed", "3", "--x-dim", "4", "--y-dim", "2")
    _, c, _ = run(capsys, "random", "--seed", "4", "--x-dim", "4", "--y-dim", "2")
    assert a == b != c
    _, d, _ = run(capsys, "random", "--chain", "4")
    assert "boundaries" in json.loads(d)


def test_reports_are_byte_identical(files, capsys):
    outs = {run(capsys, "analyze", files["p1"], "--json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_check_passes(files, capsys):
    code, out, _ = run(capsys, "check", files["p1"], files["c1"], files["spec"])
    assert code == 0 and "13/13" in out


def test_check_reports_first_violation(files, capsys, monkeypatch):
    broken = [("always-fails", lambda p: (False, "forced"))] + checks.PAIR_CHECKS
    monkeypatch.setattr(checks, "PAIR_CHECKS", broken)
    code, out, _ = run(capsys, "check", files["p1"])
    assert code == 4 and "always-fails" in out


def test_malformed_json_reports_line(files, capsys):
    bad = files["dir"] / "bad.json"
    bad.write_text('{\n  "S": [1,\n}')
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 3" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "analyze", "/nonexistent/x.json")
    assert code == 2


def test_shape_error(files, capsys):
    bad = files["dir"] / "shape.json"
    bad.write_text(json.dumps({"S": {"rows": 1, "cols": 2, "entries": [[1, 0]]}, "T": {"rows": 1, "cols": 1, "entries": [[1]]}}))
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 3


def test_wrong_kind(files, capsys):
    code, _, _ = run(capsys, "fold", files["p1"])
    assert code == 2


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "fredpairs", "classify", files["p1"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "III" in proc.stdout


def test_inexact_entries_are_rejected(files, capsys):
    bad = files["dir"] / "float.json"
    bad.write_text(json.dumps({"S": {"rows": 1, "cols": 1, "entries": [[0.5]]}, "T": {"rows": 1, "cols": 1, "entries": [[1]]}}))
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 3 and "exact" in err
