import io
import json
import subprocess
import sys

import pytest

from ddaha import oracle as o
from ddaha.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv)
    assert code == 0, err
    return json.loads(out)


def no_floats(x):
    if isinstance(x, float):
        return False
    if isinstance(x, dict):
        return all(no_floats(v) for v in x.values())
    if isinstance(x, list):
        return all(no_floats(v) for v in x)
    return True


def test_reduce():
    assert run_json("reduce", "--kappa", "3", "--lambda", "0,2") == {"canonical": [1, 1], "witness_word": "σ1"}
    assert run_json("reduce", "--kappa", "3", "--lambda", "1,1") == {"canonical": [1, 1], "witness_word": ""}
    assert run("reduce", "--kappa", "0", "--lambda", "1,0")[0] == 3


def test_reduce_pair():
    data = run_json("reduce", "--kappa", "3", "--lambda", "3,3", "--mu", "2,1")
    assert data["canonical"] == {"kappa": 3, "lambda": [3, 3], "mu": [2, 1]}


def test_negative_entries():
    data = run_json("reduce", "--kappa", "2", "--lambda", "-3,4")
    assert len(data["canonical"]) == 2


def test_classify():
    data = run_json("classify", "--kappa", "3", "--lambda", "2,1", "--mu", "0,0")
    assert data["multisegments"] == [[0, 1], [2, 2]]
    assert data["zeta"] == [0, 1, -1]
    assert data["p"] == 2
    twisted = run_json("classify", "--kappa", "3", "--lambda", "3,3", "--mu", "2,1")
    assert twisted["multisegments"] == data["multisegments"]
    assert run_json("classify", "--kappa", "3", "--lambda", "3", "--mu", "1")["multisegments"] == [[1, 2]]


def test_classify_outside_star():
    assert run("classify", "--kappa", "3", "--lambda", "2,0", "--mu", "0,0")[0] == 3


def test_module():
    data = run_json("module", "--lambda", "2,1", "--mu", "0,0", "--simple")
    assert data["dim"] == 3 and data["dim_L"] == 2
    assert data["factor_dims"] == [1, 2]
    assert run_json("module", "--lambda", "3", "--mu", "0")["dim"] == 1
    data = run_json("module", "--lambda", "2,2", "--mu", "0,0")
    assert data["dim"] == 6 and "p2_report" in data


def test_module_errors(monkeypatch):
    assert run("module", "--lambda", "1,3", "--mu", "0,2", "--simple")[0] == 3
    monkeypatch.setenv("DAHA_DIM_LIMIT", "3")
    assert run("module", "--lambda", "2,2", "--mu", "0,0")[0] == 4


def test_weights():
    data = run_json("weights", "--kappa", "3", "--lambda", "2,1", "--mu", "0,0", "--length-bound", "0")
    assert data["truncated"] is True
    assert data["weights"] == [{"weight": [0, 1, -1], "cstar": 3, "dim": 1, "gen_dim": 1}]
    assert run("weights", "--kappa", "0", "--lambda", "2,1", "--mu", "0,0")[0] == 3


def test_weights_nest():
    prev = set()
    for b in range(3):
        data = run_json("weights", "--kappa", "2", "--lambda", "2,1", "--mu", "0,0", "--length-bound", str(b))
        cur = {tuple(e["weight"]) for e in data["weights"]}
        assert prev <= cur
        prev = cur


def test_verify_codes(tmp_path):
    assert run("verify", "--suite", "nosuch")[0] == 2
    code, out, _ = run("verify", "--suite", "fault")
    assert code == 1 and json.loads(out)["reports"][0]["failures"]
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n_max": 2, "p_max": 2, "kappa_range": [1, 2], "entry_box": [-1, 1]}))
    code, out, _ = run("verify", "--suite", "pairs", "--config", str(cfg))
    assert code == 0 and json.loads(out)["passed"]


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run("reduce", "--kappa", "3", "--lambda", "a,b")[0] == 2
    assert run("classify", "--kappa", "3", "--lambda", "1,2", "--mu", "0")[0] == 3


def test_text_output():
    code, out, _ = run("--output", "text", "classify", "--kappa", "3", "--lambda", "2,1", "--mu", "0,0")
    assert code == 0 and "multisegments:" in out


def test_output_is_exact_and_reproducible():
    argv = ("module", "--lambda", "2,2", "--mu", "0,0", "--simple")
    first = run(*argv)[1]
    assert first == run(*argv)[1]
    assert no_floats(json.loads(first))


def test_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "ddaha", "reduce", "--kappa", "3", "--lambda", "0,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["canonical"] == [1, 1]


def test_verify_all_default_config():
    code, out, _ = run("verify", "--suite", "all")
    data = json.loads(out)
    assert code == 0, [r for r in data["reports"] if r["failures"]][:1]
    assert data["passed"]
    assert {r["suite"] for r in data["reports"]} == set(o.SUITES) - {"fault"}
