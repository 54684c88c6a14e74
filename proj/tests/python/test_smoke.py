import csv
import io
import json
import math
import os
import subprocess
from pathlib import Path

import jsonschema
import pytest

import hardysin

ROOT = Path(__file__).resolve().parents[2]
SCHEMA = json.loads((ROOT / "schema" / "report.schema.json").read_text())
CLI = os.environ.get("HARDYSIN_CLI")


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def test_special_functions():
    assert close(hardysin.gamma(0.3 + 0.7j), 0.30968625674374916 - 0.85678775293927057j, 1e-13)
    assert close(hardysin.digamma(7.25), 1.910453526883736, 1e-14)
    assert close(hardysin.hyp2f1(1.25, 0.75, 0.5, 0.3), 1.9035267324744045, 1e-13)
    assert close(hardysin.bessel_j(0, 17.0), -0.16985425215118355, 1e-12)
    with pytest.raises(hardysin.Error):
        hardysin.gamma(-2.0)


def test_spectrum_and_m_function():
    assert hardysin.eigenvalues(0.5, 2) == pytest.approx([1.0, 4.0, 9.0])
    m = hardysin.m_function(0.3, 1 + 0.5j)
    assert close(m, -1.7226783916896254 + 1.075199671182232j, 1e-12)
    assert close(hardysin.m_function(0.3, 1 - 0.5j), m.conjugate(), 1e-12)
    poles = hardysin.scan_poles(0.0, 0.0, 7.0)
    assert poles == pytest.approx([0.25, 2.25, 6.25], abs=1e-8)
    with pytest.raises(hardysin.NearPoleError):
        hardysin.m_function(0.0, 0.25)


def test_closed_form_solutions():
    y = hardysin.eval_y(1, 0.0, 1.7, 1.2)
    assert close(y["value"], 0.86853226627129243, 1e-11)
    t = hardysin.boundary_table(0.3, 2 + 1j)
    assert abs(t["determinant"] + 1) < 1e-12
    assert close(hardysin.principal_at_0(0.0, 1.0)["value"].real, 0.978166825437582639, 1e-11)


def test_rayleigh_and_inequalities():
    r = hardysin.min_rayleigh("sine2", n_basis=50)
    assert r["min_eigenvalue"] == pytest.approx(0.3895708903173586, abs=1e-10)
    assert len(r["coefficients"]) == 50
    probe = hardysin.min_rayleigh("sine2", n_basis=25, enrich_eps=0.01, shift=0.26)
    assert probe["min_eigenvalue"] < 0
    quad, closed = hardysin.trial_quotient(0.1)
    assert quad == pytest.approx(closed, abs=1e-10)
    gap = hardysin.inequality_gap("sine", {"k": 1.0}, "sine2+1/4")
    assert gap == pytest.approx(math.pi / 8, rel=1e-12)
    with pytest.raises(hardysin.AdmissibilityError):
        hardysin.inequality_gap("poly", {"a": 0.6, "b": 0.0}, "x2")
    with pytest.raises(hardysin.DomainError):
        hardysin.min_rayleigh("cubic")


def test_suites():
    [res] = hardysin.run_suites(["closedform"])
    assert res["name"] == "closedform" and res["passed"]
    assert set(hardysin.suite_names()) == {"specfun", "closedform", "spectral", "hardy", "identities"}
    with pytest.raises(hardysin.DomainError):
        hardysin.run_suites(["closedform"], {"no_such_key": 1.0})


def run_cli(*args):
    env = dict(os.environ, HARDYSIN_OUTPUT_DIR="")
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=env)


needs_cli = pytest.mark.skipif(not CLI, reason="HARDYSIN_CLI not set")

COMMANDS = [
    ["eigs", "--s", "0.3", "--n", "4"],
    ["mfun", "--s", "0.3", "--z-re", "1", "--z-im", "0.5", "--verify-quotient"],
    ["mfun", "--s", "0", "--z-re", "0.25"],
    ["rayleigh", "--potential", "dist2", "--n-basis", "40"],
    ["lamb"],
    ["verify", "--suite", "spectral"],
]


@needs_cli
@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_cli_json_matches_schema(args):
    proc = run_cli("--format", "json", *args)
    assert proc.returncode in (0, 3), proc.stderr
    report = json.loads(proc.stdout)
    jsonschema.validate(report, SCHEMA)
    assert report["schema_version"] == hardysin.schema_version


@needs_cli
@pytest.mark.parametrize("args", COMMANDS, ids=lambda a: "-".join(a[:2]))
def test_cli_csv_round_trips_json_rows(args):
    rows_json = json.loads(run_cli("--format", "json", *args).stdout)["results"]
    text = run_cli("--format", "csv", *args).stdout
    table = list(csv.reader(io.StringIO(text)))
    assert table[0] == rows_json["columns"]
    assert len(table) - 1 == len(rows_json["rows"])
    for cells, ref in zip(table[1:], rows_json["rows"]):
        for cell, value in zip(cells, ref):
            if value is None:
                assert cell == ""
            elif isinstance(value, bool):
                assert cell == ("true" if value else "false")
            elif isinstance(value, (int, float)):
                assert float(cell) == value
            else:
                assert cell == value


@needs_cli
def test_cli_output_dir(tmp_path):
    env = dict(os.environ, HARDYSIN_OUTPUT_DIR=str(tmp_path))
    proc = subprocess.run([CLI, "eigs", "--s", "0", "--n", "1"], capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    jsonschema.validate(json.loads((tmp_path / "eigs.json").read_text()), SCHEMA)
