"""The CLI's --json artifacts validate against the shipped schemas."""

import json
import os
import pathlib
import subprocess

import pytest

try:
    import jsonschema
except ImportError:  # pragma: no cover
    jsonschema = None

ROOT = pathlib.Path(__file__).resolve().parents[2]
CLI = os.environ.get("YAMABE_CLI", "")


def run_json(*args):
    out = subprocess.run([CLI, *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def schema(name):
    with open(ROOT / "docs" / "schemas" / name) as f:
        return json.load(f)


needs_cli = pytest.mark.skipif(
    not CLI or jsonschema is None, reason="needs YAMABE_CLI and jsonschema"
)


@needs_cli
def test_constants_schema():
    doc = run_json("constants", "--dim", "10", "--exact", "--json")
    jsonschema.validate(doc, schema("constants.schema.json"))
    assert "a10_identity" in doc["exact"]


@needs_cli
def test_classify_schema():
    doc = run_json(
        "classify", "--dim", "10", "--u0-vs-threshold", "above", "--json"
    )
    jsonschema.validate(doc, schema("classify.schema.json"))
    assert doc["verdict"] == "compact_below_minimal_level"


@needs_cli
def test_saddle_schema():
    doc = run_json("saddle", "--dim", "11", "--json", "--mc-samples", "30000")
    jsonschema.validate(doc, schema("saddle-certificate.schema.json"))
    assert doc["verdict"] == "pass"


@needs_cli
def test_weyl_spec_schema(tmp_path):
    spec = tmp_path / "w.json"
    subprocess.run(
        [CLI, "weyl", "sample", "--dim", "5", "--seed", "3", "--out", str(spec)],
        check=True,
        capture_output=True,
    )
    jsonschema.validate(json.loads(spec.read_text()), schema("weyl-spec.schema.json"))


@needs_cli
def test_exit_codes(tmp_path):
    # configuration error
    r = subprocess.run([CLI, "constants", "--dim", "2"], capture_output=True)
    assert r.returncode == 1
    # io error
    r = subprocess.run(
        [CLI, "weyl", "validate", "--spec", str(tmp_path / "missing.json")],
        capture_output=True,
    )
    assert r.returncode == 2
