import io
import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest
from referencing import Registry, Resource

from hkdyn.cli import main

ROOT = pathlib.Path(__file__).resolve().parents[1]
DATA = ROOT / "tests" / "data"
GOLDEN = DATA / "golden"
SCHEMA_DIR = ROOT / "schema" / "v1"

# (golden name, argv)
GOLDEN_CASES = [
    ("pell_classify.json", ["classify", str(DATA / "pell.json")]),
    ("pell_degrees.json", ["degrees", str(DATA / "pell.json"), "--n", "2"]),
    ("pell_certify.json", ["certify", str(DATA / "pell.json"), "--n", "2", "--b2", "23"]),
    ("pell_certify.txt", ["certify", str(DATA / "pell.json"), "--n", "2", "--b2", "23", "--text"]),
    ("parabolic_certify.json", ["certify", str(DATA / "parabolic.json"), "--n", "2"]),
    ("identity_classify.json", ["classify", str(DATA / "identity.json")]),
    ("salem4_degrees.json", ["degrees", str(DATA / "salem4.json"), "--n", "3", "--precision", "1e-30"]),
    ("catalog_list.json", ["catalog", "--list"]),
]


def run(argv, stdin=None, capsys=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(argv)
    except SystemExit as e:  # argparse errors
        code = e.code
    out, err = capsys.readouterr()
    return code, out, err


def validator():
    resources = []
    for name in ("lattice.json", "isometry.json", "report.json"):
        schema = json.loads((SCHEMA_DIR / name).read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)
    report = json.loads((SCHEMA_DIR / "report.json").read_text())
    return jsonschema.Draft202012Validator(report, registry=registry)


def relative(argv):
    # golden files must not depend on where the checkout lives
    return [a.replace(str(ROOT) + "/", "") for a in argv]


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(name, argv, capsys):
    code, out, _ = run(argv, capsys=capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


@pytest.mark.parametrize("name,argv", [c for c in GOLDEN_CASES if c[0].endswith(".json")],
                         ids=[c[0] for c in GOLDEN_CASES if c[0].endswith(".json")])
def test_reports_validate_against_schema(name, argv, capsys):
    _, out, _ = run(argv, capsys=capsys)
    validator().validate(json.loads(out))


def test_catalog_k3(capsys):
    code, out, _ = run(["catalog", "--name", "K3"], capsys=capsys)
    assert code == 0
    lat = json.loads(out)
    assert len(lat["gram"]) == 22
    validator().validate(lat)


def test_catalog_param(capsys):
    code, out, _ = run(["catalog", "--name", "K3n", "--param", "3"], capsys=capsys)
    assert code == 0 and json.loads(out)["gram"][22][22] == -4
    code, _, err = run(["catalog", "--name", "K3n"], capsys=capsys)
    assert code == 3 and "n >= 2" in err


def test_pell_values(capsys):
    _, out, _ = run(["classify", str(DATA / "pell.json")], capsys=capsys)
    rep = json.loads(out)
    c = rep["classification"]
    assert c["kind"] == "loxodromic"
    assert c["lambda1"]["decimal"].startswith("5.8284271247")
    assert c["lambda1"]["exact"] == {"a": 3, "b": 2, "d": 2, "den": 1}
    assert rep["input"]["matrix"] == [[3, 4], [2, 3]]


def test_certify_pell(capsys):
    _, out, _ = run(["certify", str(DATA / "pell.json"), "--n", "2", "--b2", "23"], capsys=capsys)
    cert = json.loads(out)["certificate"]
    assert cert["primitive"] is True
    assert cert["max_periodic_hypersurfaces"] == 25
    assert cert["base_dim_lower_bound"] == 4
    assert [f["feasible"] for f in cert["general_type_feasibility"]] == [False, False, False]


def test_degrees_pell(capsys):
    _, out, _ = run(["degrees", str(DATA / "pell.json"), "--n", "2"], capsys=capsys)
    vals = json.loads(out)["degree_sequence"]["values"]
    assert [v["decimal"][:9] for v in vals] == ["1", "5.8284271", "33.970562", "5.8284271", "1"]
    assert vals[2]["exact"] == {"a": 17, "b": 12, "d": 2, "den": 1}


def test_decimals_lie_within_stated_width(capsys):
    from fractions import Fraction
    _, out, _ = run(["degrees", str(DATA / "salem4.json"), "--n", "3"], capsys=capsys)
    rep = json.loads(out)
    width = Fraction(rep["precision"])
    for v in rep["degree_sequence"]["values"]:
        lo, hi = Fraction(v["interval"]["lo"]), Fraction(v["interval"]["hi"])
        assert hi - lo <= width
        d = Fraction(v["decimal"])
        assert lo - width <= d <= hi + width


def test_stdin(capsys, monkeypatch):
    text = (DATA / "identity.json").read_text()
    code, out, _ = run(["classify", "-"], stdin=text, capsys=capsys, monkeypatch=monkeypatch)
    c = json.loads(out)["classification"]
    assert code == 0 and c["kind"] == "elliptic" and c["finite_order"] == 1


@pytest.mark.parametrize("argv,code,needle", [
    (["classify", str(DATA / "not_isometry.json")], 2, "entry (0, 0)"),
    (["classify", str(DATA / "degenerate.json")], 2, "degenerate"),
    (["classify", str(DATA / "malformed.json")], 3, "integers"),
    (["classify", str(DATA / "missing.json")], 3, "cannot read"),
    (["classify", str(DATA / "pell.json"), "--precision", "-1"], 3, "positive"),
    (["degrees", str(DATA / "pell.json")], 3, "--n"),
    (["degrees", str(DATA / "pell.json"), "--n", "0"], 3, ">= 1"),
    (["certify", str(DATA / "salem4.json"), "--n", "2", "--b2", "3"], 3, "smaller than"),
    (["frobnicate"], 3, "invalid choice"),
    ([], 3, "required"),
])
def test_exit_codes(argv, code, needle, capsys):
    got, _, err = run(argv, capsys=capsys)
    assert got == code
    assert needle in err


def test_bad_stdin_json(capsys, monkeypatch):
    code, _, err = run(["classify", "-"], stdin="{", capsys=capsys, monkeypatch=monkeypatch)
    assert code == 3 and "invalid JSON" in err


@pytest.mark.parametrize("bad", [
    '[1, 2]',
    '{"lattice": "U"}',
    '{"lattice": "Enriques", "matrix": [[1]]}',
    '{"lattice": {"gram": [[1, 2], [3, 4]]}, "matrix": [[1, 0], [0, 1]]}',
    '{"lattice": {"gram": [[1, 0], [0, -1]]}, "matrix": [[1, 0, 0], [0, 1, 0]]}',
    '{"lattice": {"gram": [[1, 0], [0, -1]]}, "matrix": [[1, 0], [0]]}',
    '{"lattice": {"gram": [[true, 0], [0, -1]]}, "matrix": [[1, 0], [0, 1]]}',
])
def test_malformed_inputs_exit_3(bad, capsys, monkeypatch):
    code, _, _ = run(["classify", "-"], stdin=bad, capsys=capsys, monkeypatch=monkeypatch)
    assert code == 3


def test_subprocess_determinism():
    argv = [sys.executable, "-m", "hkdyn", "certify", str(DATA / "salem4.json"), "--n", "3", "--b2", "23"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and a


def test_timing_is_opt_in(capsys):
    _, out, _ = run(["classify", str(DATA / "pell.json")], capsys=capsys)
    assert "timing" not in json.loads(out)
    _, out, _ = run(["classify", str(DATA / "pell.json"), "--timing"], capsys=capsys)
    rep = json.loads(out)
    assert rep["timing"]["seconds"] >= 0
    validator().validate(rep)


def _regen():
    for name, argv in GOLDEN_CASES:
        proc = subprocess.run([sys.executable, "-m", "hkdyn", *relative(argv)], cwd=ROOT,
                              capture_output=True, text=True, check=True)
        (GOLDEN / name).write_text(proc.stdout)
        print("wrote", name)


if __name__ == "__main__":
    if "--regen" in sys.argv:
        _regen()
