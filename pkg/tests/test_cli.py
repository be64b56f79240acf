from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from squared_path_lab.cli import main
from squared_path_lab.generators import make_gp
from squared_path_lab.graph import read_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_tightness_gp(capsys):
    code, out, _ = run(capsys, "verify", "tightness", "gp", "15", "9")
    assert code == 0
    assert out.strip() == "PASS (longest P² = 8 = sqp(15,9))"


def test_verify_tightness_gc(capsys):
    code, out, _ = run(capsys, "verify", "tightness", "gc", "20", "12")
    assert code == 0 and out.startswith("PASS")


def test_thresholds_csv(capsys):
    code, out, _ = run(capsys, "thresholds", "100", "--range", "51..66")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "delta,value,jump" and len(lines) == 17
    assert "60,46,1" in lines


def test_thresholds_cycle_variant(capsys):
    code, out, _ = run(capsys, "thresholds", "100", "--range", "57..57", "--variant", "cycle")
    assert out.splitlines()[1] == "57,22,0"  # sqc(100,56) = 21


def test_find_absent(capsys):
    code, out, _ = run(capsys, "find", "k4", "--cycle", "--len", "5")
    assert code == 0
    assert json.loads(out) == {"kind": "squared_cycle", "length": 5, "status": "ABSENT"}


def test_find_found(capsys):
    code, out, _ = run(capsys, "find", "gp:15:9", "--path", "--len", "8")
    data = json.loads(out)
    assert code == 0 and data["status"] == "FOUND" and len(data["vertices"]) == 8


def test_find_too_large(capsys, monkeypatch):
    monkeypatch.delenv("SPL_EXACT_CAP", raising=False)
    code, out, _ = run(capsys, "find", "k30", "--path", "--len", "3")
    assert code == 3 and json.loads(out)["status"] == "TOO_LARGE"


def test_exact_cap_flag(capsys, monkeypatch):
    monkeypatch.delenv("SPL_EXACT_CAP", raising=False)
    code, out, _ = run(capsys, "--exact-cap", "40", "find", "k30", "--path", "--len", "3")
    assert code == 0 and json.loads(out)["status"] == "FOUND"


def test_exact_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("SPL_EXACT_CAP", "5")
    code, _, _ = run(capsys, "find", "k6", "--path", "--len", "3")
    assert code == 3


def test_usage_errors(capsys):
    assert run(capsys, "find", "k4", "--len", "3")[0] == 2
    assert run(capsys, "thresholds", "100", "--range", "40..60")[0] == 2
    assert run(capsys, "gen", "gp", "10", "5")[0] == 2
    assert run(capsys, "gen", "zz", "10")[0] == 2
    assert run(capsys, "find", "no-such-file", "--path", "--len", "3")[0] == 2
    assert run(capsys, "stability", "c5", "--eta", "1/100")[0] == 2
    assert run(capsys, "stability", "k5", "--eta", "abc")[0] == 2
    assert run(capsys, "verify", "lemma3", "--trials", "2")[0] == 2
    assert run(capsys, "verify", "tightness", "tripartite", "10", "6")[0] == 2
    assert run(capsys)[0] == 2


def test_gen_writes_sidecar(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run(capsys, "gen", "gp", "15", "9", "-o", str(out))
    assert code == 0
    assert read_graph(out) == make_gp(15, 9).graph
    labels = (tmp_path / "g.txt.labels").read_text().splitlines()
    assert labels[0] == "0 Y" and len(labels) == 15


def test_gen_stdout_and_file_input(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "gc", "20", "12")
    path = tmp_path / "gc.txt"
    path.write_text(out)
    code, out, _ = run(capsys, "find", str(path), "--cycle", "--len", "9")
    assert json.loads(out)["status"] == "FOUND"


def test_decompose_table(capsys):
    code, out, _ = run(capsys, "decompose", "gp:15:9")
    lines = out.splitlines()
    assert lines[0] == "component\tvertices\tedges\tinterior\texterior\tk4"
    assert len(lines) == 3
    assert lines[1].split("\t")[:5] == ["0", "10", "30", "6", "4"]


def test_ctf_json(capsys):
    code, out, _ = run(capsys, "ctf", "gp:20:12")
    data = json.loads(out)
    assert code == 0 and data["size"] == 9 and data["method"] == "exact"
    code, out, _ = run(capsys, "ctf", "gp:20:12", "--bound")
    assert json.loads(out)["method"] == "bound"


def test_stability_json(capsys):
    code, out, _ = run(capsys, "stability", "gp:20:12", "--eta", "1/100")
    data = json.loads(out)
    assert code == 0 and data["outcome"] == "S3" and data["eta"] == "1/100"
    assert out.strip() == json.dumps(data, sort_keys=True)


def test_verify_suites(capsys):
    for suite in ("lemma3", "prop4", "parity"):
        code, out, _ = run(capsys, "verify", suite, "--trials", "10", "--seed", "3")
        assert code == 0 and out.startswith(f"PASS {suite}")
    code, out, _ = run(capsys, "verify", "nicepath", "--trials", "1", "--seed", "3")
    assert code == 0


def test_deterministic_output(capsys):
    a = run(capsys, "--deterministic", "find", "gc:20:12", "--cycle", "--len", "9")
    b = run(capsys, "--deterministic", "find", "gc:20:12", "--cycle", "--len", "9")
    assert a == b


@pytest.mark.skipif(shutil.which("spl") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["spl", "verify", "tightness", "gp", "15", "9"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("PASS")


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "squared_path_lab.cli", "find", "k4", "--cycle", "--len", "5"],
        capture_output=True,
        text=True,
    )
    assert res.returncode == 0 and "ABSENT" in res.stdout


def test_library_failure_is_invariant_exit(capsys, monkeypatch):
    from squared_path_lab import cli
    from squared_path_lab.errors import SigmaConditionFails

    def boom(*_):
        raise SigmaConditionFails("no common connector", 3)

    monkeypatch.setattr(cli, "ctf_exact", boom)
    code, _, err = run(capsys, "ctf", "k4")
    assert code == 4 and "SigmaConditionFails" in err
    assert json.loads(err.splitlines()[1])["argv"] == ["ctf", "k4"]
