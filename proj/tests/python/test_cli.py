import json
import os
import subprocess

import pytest

CLI = os.environ.get("HEATSYM_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="HEATSYM_CLI not set")


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def write(tmp_path, name, payload):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_index_density_flat_and_determinism(tmp_path):
    cur = write(tmp_path, "flat.json", {"n": 2, "riemann": []})
    out1 = run("index-density", "--curvature", cur)
    out2 = run("index-density", "--curvature", cur)
    assert out1 == out2
    report = json.loads(out1)
    assert report["pass"] is True
    assert report["density"]["terms"] == []


def test_spectral_flow_report():
    report = json.loads(run("spectral-flow", "--winding", "1", "--cutoff", "64"))
    assert report["sf"] == 1
    assert report["aps"] == 1
    assert report["match"] is True


def test_heat_coeffs_sphere(tmp_path):
    cur = write(tmp_path, "s2.json", {"n": 2, "riemann": [[1, 2, 1, 2, "1"]]})
    csv = tmp_path / "fit.csv"
    report = json.loads(
        run("heat-coeffs", "--curvature", cur, "--operator", "laplace", "--count", "2",
            "--fit-sphere", "--csv", str(csv)))
    a1 = report["coefficients"][1]["terms"][0]["matrix"][0]["str"]
    assert a1 == "1/12*pi^-1"
    assert abs(report["sphere_fit"]["coefficients"][1] - 1 / 3) < 1e-5
    lines = csv.read_text().strip().splitlines()
    assert lines[0] == "t,trace,fit"
    assert len(lines) == 25


def test_malformed_curvature_exits_2(tmp_path):
    bad = write(tmp_path, "bad.json", {"n": 4, "riemann": [[1, 2, 3, 4, "1"]]})
    proc = subprocess.run([CLI, "index-density", "--curvature", bad],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "Bianchi" in proc.stderr


def test_unknown_field_rejected(tmp_path):
    bad = write(tmp_path, "extra.json", {"n": 2, "riemann": [], "mystery": 1})
    proc = subprocess.run([CLI, "index-density", "--curvature", bad],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "unknown field" in proc.stderr


def test_pair_sphere():
    report = json.loads(run("pair", "--kind", "even-sphere"))
    assert report["integer"] is True
    assert report["value"] in (1, -1)


def test_cm_even(tmp_path):
    fns = tmp_path / "fns.json"
    fns.write_text(json.dumps([
        {"terms": [[[-1, -1], ["1", "0", "0", "0"]]]},
        {"terms": [[[1, 0], ["1", "0", "0", "0"]]]},
        {"terms": [[[0, 1], ["1", "0", "0", "0"]]]},
    ]))
    report = json.loads(run("cm-even", "--dim", "2", "--k", "1", "--functions", str(fns)))
    assert report["value"]["str"] == "i*pi^1"
