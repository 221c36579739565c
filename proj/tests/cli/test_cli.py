import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

BIN = os.environ.get("ASSOCBENCH", "build/assocbench")
SCHEMA = json.loads((pathlib.Path(__file__).parents[2] / "tools" / "report.schema.json").read_text())


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)


def test_quasimodular_small_order():
    r = run("quasimodular", "--q-order", "8", "--format", "json", "--no-timings")
    assert r.returncode == 0, r.stderr
    report = json.loads(r.stdout)
    jsonschema.validate(report, SCHEMA)
    assert report["config"]["q_order"] == 8
    assert report["summary"]["fail"] == 0
    assert report["suite"] == "quasimodular"
    assert any("through q^8" in c["detail"] for c in report["checks"])


@pytest.mark.parametrize("args", [("bogus",), ("all", "--format", "xml"), ("all", "--q-order", "x")])
def test_usage_errors_exit_2(args):
    r = run(*args)
    assert r.returncode == 2
    assert "Usage" in r.stdout + r.stderr or "usage" in (r.stdout + r.stderr).lower()


def test_json_deterministic(tmp_path):
    outs = []
    for i in range(2):
        p = tmp_path / f"r{i}.json"
        r = run("all", "--format", "json", "--no-timings", "--seed", "7", "--trials", "20", "--out", str(p))
        assert r.returncode == 0, r.stderr
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]
    report = json.loads(outs[0])
    jsonschema.validate(report, SCHEMA)
    assert report["suite"] == "all"
    assert report["summary"]["pass"] == len(report["checks"])


def test_text_format():
    r = run("gaussmanin", "--no-timings")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[-1].startswith("summary:")
    body = lines[1:-1]
    assert body and all(" pass " in l for l in body)
    # aligned: status column starts at the same offset on every line
    assert len({l.index(" pass ") for l in body}) == 1
