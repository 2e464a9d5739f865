"""End-to-end tests for the command line interface.

Each test drives the installed module through a subprocess, so argument
parsing, exit codes, and byte-exact output all get exercised the way a
shell user would see them.
"""

import json
import subprocess
import sys
from pathlib import Path

import pytest

GOLDEN = Path(__file__).parent / "golden"


def run(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "linser.cli", *args],
        input=stdin,
        capture_output=True,
    )


def golden_bytes(name):
    return (GOLDEN / name).read_bytes()


def gpath(name):
    return str(GOLDEN / name)


def test_basepoints_golden():
    out = run("basepoints", gpath("ex2_input.json"))
    assert out.returncode == 0
    assert out.stdout == golden_bytes("ex2_basepoints.out.json")
    assert out.stderr == b""


def test_basepoints_deterministic():
    first = run("basepoints", gpath("ex2_input.json"))
    second = run("basepoints", gpath("ex2_input.json"))
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_basepoints_reads_stdin():
    data = (GOLDEN / "ex2_input.json").read_bytes()
    out = run("basepoints", "-", stdin=data)
    assert out.returncode == 0
    assert out.stdout == golden_bytes("ex2_basepoints.out.json")


def test_basepoints_output_feeds_series():
    # the basepoints document is exactly what the series command consumes
    tree_doc = run("basepoints", gpath("ex2_input.json")).stdout
    out = run("series", "-", "--basis", "deg:2", stdin=tree_doc)
    assert out.returncode == 0
    assert out.stdout == golden_bytes("ex2_series.out.json")


def test_series_golden():
    out = run("series", gpath("ex2_basepoints.out.json"), "--basis", "deg:2")
    assert out.returncode == 0
    assert out.stdout == golden_bytes("ex2_series.out.json")


def test_series_bidegree_golden():
    out = run("series", gpath("product_tree.json"), "--basis", "bideg:1,1")
    assert out.returncode == 0
    assert out.stdout == golden_bytes("product_series.out.json")
    doc = json.loads(out.stdout)
    assert doc["series"] == ["-u*v + 1", "u + v"]


def test_series_bidegree_dimension():
    out = run("series", gpath("product_tree.json"), "--basis", "bideg:2,2")
    assert out.returncode == 0
    assert len(json.loads(out.stdout)["series"]) == 7


def test_series_empty_tree():
    out = run("series", gpath("empty_tree.json"), "--basis", "deg:1")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["basis"] == ["u", "v", "1"]
    assert doc["matrix"] == []
    assert doc["series"] == ["u", "v", "1"]


def test_invariants_golden():
    out = run("invariants", gpath("conic_input.json"))
    assert out.returncode == 0
    assert out.stdout == golden_bytes("conic_invariants.out.json")


def test_invariants_quintic_golden():
    out = run("invariants", gpath("quintic_input.json"))
    assert out.returncode == 0
    assert out.stdout == golden_bytes("quintic_invariants.out.json")
    doc = json.loads(out.stdout)
    assert doc["degree"] == 20
    assert doc["sectional_genus"] == 5
    assert doc["h0"] == 17
    assert doc["arithmetic_genus"] == 0


def test_complete_golden():
    out = run("complete", gpath("q42_input.json"), "--basis", "deg:2")
    assert out.returncode == 0
    assert out.stdout == golden_bytes("q42_complete.out.json")


def test_adjoint_golden():
    out = run("adjoint", gpath("quintic_input.json"), "--basis", "deg:5")
    assert out.returncode == 0
    assert out.stdout == golden_bytes("quintic_adjoint.out.json")
    doc = json.loads(out.stdout)
    assert doc["series"] == ["u^2", "u*v", "u", "v^2", "v"]


def test_strict_transform_golden():
    out = run("strict-transform", gpath("strict_input.json"))
    assert out.returncode == 0
    assert out.stdout == golden_bytes("strict.out.json")


def test_pretty_goes_to_stderr():
    out = run("basepoints", gpath("ex2_input.json"), "--pretty")
    assert out.returncode == 0
    assert out.stdout == golden_bytes("ex2_basepoints.out.json")
    assert out.stderr == golden_bytes("ex2_pretty.txt")


def test_jobs_flag_does_not_change_output():
    out = run("invariants", gpath("conic_input.json"), "--jobs", "2")
    assert out.returncode == 0
    assert out.stdout == golden_bytes("conic_invariants.out.json")


def test_exit_2_on_parse_error():
    out = run("basepoints", gpath("parse_error_input.json"))
    assert out.returncode == 2
    assert out.stdout == b""
    assert out.stderr != b""


def test_exit_2_on_reducible_extension():
    out = run("basepoints", gpath("reducible_input.json"))
    assert out.returncode == 2


def test_exit_2_on_missing_file():
    out = run("basepoints", gpath("no_such_file.json"))
    assert out.returncode == 2


def test_exit_2_on_bad_basis():
    for spec in ("deg:x", "foo:3", "bideg:1", "deg:-1"):
        out = run("series", gpath("empty_tree.json"), "--basis", spec)
        assert out.returncode == 2, spec


def test_exit_2_when_basis_missing():
    out = run("series", gpath("empty_tree.json"))
    assert out.returncode == 2


def test_exit_2_on_bad_jobs():
    out = run("invariants", gpath("conic_input.json"), "--jobs", "0")
    assert out.returncode == 2


def test_exit_2_on_unknown_command():
    out = run("frobnicate", gpath("conic_input.json"))
    assert out.returncode == 2


def test_exit_3_on_common_factor():
    out = run("basepoints", gpath("common_factor_input.json"))
    assert out.returncode == 3
    assert out.stdout == b""


def test_exit_3_on_no_adjoint():
    out = run("adjoint", gpath("conic_input.json"), "--basis", "deg:2")
    assert out.returncode == 3


def test_exit_3_on_not_a_basepoint():
    out = run("strict-transform", gpath("strict_bad_input.json"))
    assert out.returncode == 3


def test_exit_4_on_depth_limit():
    out = run("series", gpath("deep_tree.json"), "--basis", "deg:1")
    assert out.returncode == 4
    assert out.stdout == b""


def test_max_depth_raises_the_limit():
    out = run("series", gpath("deep_tree.json"), "--basis", "deg:1",
              "--max-depth", "64")
    assert out.returncode == 0


def test_basepoints_max_depth_too_small():
    out = run("basepoints", gpath("ex2_input.json"), "--max-depth", "1")
    assert out.returncode == 4


def test_variables_field_is_checked():
    doc = json.loads((GOLDEN / "conic_input.json").read_text())
    doc["variables"] = ["x", "y"]
    out = run("invariants", "-", stdin=json.dumps(doc).encode())
    assert out.returncode == 2
    doc["variables"] = ["u", "v"]
    out = run("invariants", "-", stdin=json.dumps(doc).encode())
    assert out.returncode == 0


def test_unknown_field_rejected():
    doc = json.loads((GOLDEN / "conic_input.json").read_text())
    doc["serie"] = doc["series"]
    out = run("invariants", "-", stdin=json.dumps(doc).encode())
    assert out.returncode == 2


def test_chart_field_accepted_and_not_echoed():
    doc = json.loads((GOLDEN / "conic_input.json").read_text())
    doc["chart"] = "x0 != 0"
    out = run("invariants", "-", stdin=json.dumps(doc).encode())
    assert out.returncode == 0
    assert out.stdout == golden_bytes("conic_invariants.out.json")
