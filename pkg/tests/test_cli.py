import json
import subprocess
import sys

from cliffordtwist.cli import main

KEYS = {"command", "inputs", "results", "witnesses", "timing_ms"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    doc = json.loads(out)
    assert set(doc) == KEYS
    return code, doc


def test_quaternion_table(capsys):
    code, out, _ = run(capsys, "table", "--signature", "--")
    assert code == 0
    rows = [line.split("|")[1].split() for line in out.splitlines()[2:]]
    assert rows[1] == ["e1", "-1", "e1*e2", "-e2"]
    assert rows[3] == ["e1*e2", "e2", "-e1", "-1"]


def test_eval(capsys):
    code, doc = run_json(capsys, "eval", "-s", "--", "e1*e2 - e2*e1")
    assert code == 0 and doc["results"]["value"] == "2*e1*e2"
    assert doc["inputs"]["signature"] == "--"
    assert doc["timing_ms"] is None


def test_eval_error_exit_code(capsys):
    code, _, err = run(capsys, "eval", "-s", "--", "e3")
    assert code == 2 and "position 0" in err


def test_signature_glued_forms(capsys):
    assert run(capsys, "classify", "--signature=-+")[0] == 0
    assert run(capsys, "classify", "-s", "-")[0] == 0


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--signature", "++")
    assert code == 0 and out.splitlines()[0] == "M_2"
    code, doc = run_json(capsys, "classify", "-s", "+++")
    assert doc["results"]["label"] == "M_2+M_2"
    assert doc["results"]["center_dim"] == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--signature", "+++", "--suite", "cocycle")
    assert code == 0 and out.startswith("PASS cocycle")


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_bad_signature(capsys):
    assert run(capsys, "classify", "-s", "1,0")[0] == 2


def test_process(capsys):
    code, doc = run_json(capsys, "process", "--steps", "+,-,+", "--show", "cochain", "--verify", "closed-forms")
    assert code == 0
    assert doc["results"]["equals_clifford"] is True


def test_spinor(capsys):
    code, doc = run_json(capsys, "spinor", "-s", "-", "--check", "compare")
    assert code == 0
    assert doc["results"]["matrices"][0] == [["0", "-1"], ["1", "0"]]


def test_dirac(capsys):
    code, doc = run_json(capsys, "dirac", "--apply", "x1^2", "--check-square", "--max-degree", "2")
    assert code == 0 and doc["results"]["dirac"] == "2*x1*e1"


def test_timing_flag(capsys):
    _, doc = run_json(capsys, "classify", "-s", "++", "--timing")
    assert isinstance(doc["timing_ms"], (int, float))


def test_json_is_deterministic(capsys):
    args = ("verify", "--suite", "cocycle", "--suite", "classify", "--suite", "dirac", "--max-n", "3", "--json")
    first = run(capsys, *args)[1]
    second = run(capsys, *args)[1]
    assert first == second


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "--all")
    assert code == 0
    assert "FAIL" not in out


def test_console_script_entry():
    res = subprocess.run(
        [sys.executable, "-m", "cliffordtwist.cli", "classify", "-s", "--"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and res.stdout.startswith("M_2")
