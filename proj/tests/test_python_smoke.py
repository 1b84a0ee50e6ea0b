"""Smoke tests for the python bindings: catalog, pipeline values on the
hand-derived claw cases, file emission, and verification."""

import subprocess
import sys
from pathlib import Path

import pytest

import phylotoric as pt


def test_catalog_shapes():
    cat = pt.catalog(5)
    assert len(cat) == 6
    assert cat[0] == {"tree_id": 1, "n_leaves": 3, "n_edges": 3, "newick": "(1,2,3);"}
    assert [e["tree_id"] for e in cat] == [1, 2, 3, 4, 5, 6]
    assert len(pt.catalog(4)) == 3


def test_canonical_newick():
    assert pt.canonical_newick("((3,4),(1,2));") == "((1,2),(3,4));"
    with pytest.raises(ValueError):
        pt.canonical_newick("((1,2),3;")
    with pytest.raises(ValueError):
        pt.canonical_newick("(1,2:0.5,3);")


def test_models():
    models = {m["model_id"]: m for m in pt.models()}
    assert set(models) == {"CFN", "JC", "K2P", "K3P"}
    assert models["CFN"]["group"] == "Z/2"
    assert models["JC"]["classes"] == 2
    assert models["K2P"]["classes"] == 3
    assert models["K3P"]["fourier_classes"] == 4


def test_jc_claw_record():
    record = pt.compute("(1,2,3);", model="JC")
    assert record["np"] == 5
    assert record["nq"] == 5
    assert record["dim_cone"] == 4
    assert record["degree"] == 3
    assert record["volume_degree"] == 3
    assert record["degree_profile"] == {3: 1}
    assert record["reference_only"]["MLdeg"]["value"] == "23"

    gens = pt.fourier_ideal("(1,2,3);", model="JC")
    assert gens == ["q2*q3*q4 - q1*q5^2"]


def test_cfn_claw_record():
    record = pt.compute("(1,2,3);", model="CFN")
    assert record["dim_cone"] == 4
    assert record["degree"] == 1
    assert pt.fourier_ideal("(1,2,3);", model="CFN") == []


def test_commuting_square():
    assert pt.verify_commutes("(1,2,3);", model="K3P")
    assert pt.verify_commutes("((1,2),(3,4));", model="JC")


def test_parametrizations():
    maps = pt.parametrizations("(1,2,3);", model="CFN")
    assert len(maps["probability"]) == 8
    assert len(maps["fourier"]) == 8
    assert maps["fourier"].count("0") == 4


def test_emit_and_verify(tmp_path):
    files = pt.emit_entry("(1,2,3);", "JC", str(tmp_path))
    assert len(files) == 8
    assert "invariants_1-JC.yaml" in files

    reference = tmp_path / "ref.yaml"
    reference.write_text(
        '- tree_id: 1\n  model_id: JC\n  field: degree\n  value: 3\n  source: "smoke"\n'
    )
    result = pt.verify(str(tmp_path), str(reference))
    assert result["ok"]
    assert "match" in result["text"]


def test_budget_raises():
    with pytest.raises(RuntimeError):
        pt.compute("((1,2),(3,4));", model="JC", step_budget=1)


CLI = Path(__file__).resolve().parent.parent / "build" / "tools" / "phylotoric"


@pytest.mark.skipif(not CLI.exists(), reason="CLI binary not built here")
def test_cli_round_trip(tmp_path):
    out = subprocess.run([CLI, "list"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.splitlines()[0].split("\t") == ["1", "3", "(1,2,3);"]

    out = subprocess.run(
        [CLI, "compute", "--tree", "(1,2,3);", "--model", "JC"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 0
    assert "np: 5" in out.stdout

    out = subprocess.run([CLI, "compute", "--bogus"], capture_output=True, text=True)
    assert out.returncode == 2

    out = subprocess.run(
        [CLI, "compute", "--tree", "(1,2,3);", "--model", "HKY"],
        capture_output=True,
        text=True,
    )
    assert out.returncode == 2
