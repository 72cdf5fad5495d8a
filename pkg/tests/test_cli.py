import json
from fractions import Fraction
from pathlib import Path

import pytest

from slopestab import catalog
from slopestab.cli import main, run_catalog_entry, run_chow, run_oracle_suite
from slopestab.slope import Status
from slopestab.specdoc import SpecError, VarietySpecDoc, build_model, dumps, parse_spec

ROOT = Path(__file__).resolve().parent.parent
SPECS = ROOT / "specs"
GOLDEN = Path(__file__).parent / "golden" / "oracle_all.json"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_spec(tmp_path, doc, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_slope_json(capsys):
    code, out, _ = run(capsys, "slope", "--spec", str(SPECS / "p2_point.json"), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "boundary-semistable"
    assert data["c_star"] == "1"
    assert data["margin"] == ["0", "0", "1/2", "-1/2"]


def test_futaki_requires_c(capsys):
    code, _, err = run(capsys, "futaki", "--spec", str(SPECS / "p2_point.json"))
    assert code == 2 and "--c" in err


def test_futaki_value(capsys):
    code, out, _ = run(capsys, "futaki", "--spec", str(SPECS / "p2_point.json"), "--c", "1", "--json")
    assert code == 0
    assert json.loads(out)["futaki"] == "0"


def test_bad_c(capsys):
    code, _, err = run(capsys, "futaki", "--spec", str(SPECS / "p2_point.json"), "--c", "half")
    assert code == 2 and "--c" in err


def test_newton(capsys):
    code, out, _ = run(capsys, "newton", "--spec", str(SPECS / "newton_p1_deg5.json"), "--json")
    data = json.loads(out)
    assert code == 0
    assert data["slopes"] == ["1/2", "2"]
    assert data["weight"]["b0"] == "-3"


def test_chow_curve(capsys):
    code, out, _ = run(capsys, "chow", "--spec", str(SPECS / "elliptic_point.json"), "--c", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["asymptotically_chow_stable"] is True
    assert data["threshold"] == "1/4"


def test_chow_genus2_degree5_false(tmp_path, capsys):
    doc = {"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "2", "d": "5", "degZ": "1"}}
    code, out, _ = run(capsys, "chow", "--spec", write_spec(tmp_path, doc), "--json")
    assert code == 0 and json.loads(out)["asymptotically_chow_stable"] is False


def test_chow_rejects_genus_zero(tmp_path, capsys):
    doc = {"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "0", "d": "3", "degZ": "1"}}
    code, _, err = run(capsys, "chow", "--spec", write_spec(tmp_path, doc))
    assert code == 2 and "genus" in err


def test_chow_toric_with_r():
    spec = parse_spec(json.loads((SPECS / "p1_deg3_toric.json").read_text()))
    res = run_chow(spec, Fraction(1), 1)
    assert res["chow_weight_coeff"] == 1
    assert res["eta_coeffs"][1] == Fraction(1, 5)


@pytest.mark.parametrize(
    "doc, field",
    [
        ({"schema_version": 1, "kind": "nope", "parameters": {}}, "kind"),
        ({"schema_version": 2, "kind": "curve-divisor", "parameters": {}}, "schema_version"),
        ({"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "1", "d": "3"}}, "degZ"),
        ({"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "1", "d": 3.0, "degZ": "1"}}, "d"),
        ({"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "1", "d": "3", "degZ": "1", "x": "1"}}, "x"),
        ({"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "1", "d": "3", "degZ": "1"}, "extra": 1}, "extra"),
        ({"schema_version": 1, "kind": "curve-divisor", "parameters": {"g": "1", "d": "3", "degZ": "1"}, "flags": {"normal": True}}, "normal"),
    ],
)
def test_schema_violations_name_the_field(doc, field):
    with pytest.raises(SpecError, match=field):
        parse_spec(doc)


def test_invalid_spec_exit_code(tmp_path, capsys):
    doc = {"schema_version": 1, "kind": "point-on-smooth", "parameters": {"n": "2", "Ln": "4", "KLn1": "0", "eps": "3"}}
    code, _, err = run(capsys, "slope", "--spec", write_spec(tmp_path, doc))
    assert code == 2 and "error" in err


def test_unknown_command_exit_code(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


@pytest.mark.parametrize("path", sorted(SPECS.glob("*.json")))
def test_spec_round_trip(path):
    spec = parse_spec(json.loads(path.read_text()))
    again = parse_spec(json.loads(json.dumps(spec.to_dict())))
    assert again == spec


def test_custom_hs_round_trip_and_model():
    doc = {
        "schema_version": 1,
        "kind": "custom-hs",
        "parameters": {
            "n": "2", "a0": ["1/2", "0", "-1/2"], "a1": ["3/2", "-1/2"],
            "a0_const": "1/2", "a1_const": "3/2", "eps": "1", "higher": [["1", "-1/2"]],
        },
        "flags": {"saturates_at_eps": True, "normal": True},
    }
    spec = parse_spec(doc)
    assert parse_spec(spec.to_dict()) == spec
    assert isinstance(spec, VarietySpecDoc)
    h = build_model(spec)
    assert h.has_full_coefficients


def test_output_is_deterministic_and_float_free(capsys):
    outs = [run(capsys, "catalog", "run", "genus2-triple-point", "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    data = json.loads(outs[0])

    def walk(v):
        assert not isinstance(v, float)
        if isinstance(v, dict):
            for x in v.values():
                walk(x)
        elif isinstance(v, list):
            for x in v:
                walk(x)

    walk(data)


def test_dumps_rejects_floats():
    with pytest.raises(TypeError):
        dumps({"x": 0.5})


@pytest.mark.parametrize("entry", catalog.ENTRIES, ids=lambda e: e.id)
def test_catalog_entries_reproduce(entry):
    res = run_catalog_entry(entry.id)
    assert res["reproduced"]


def test_catalog_required_verdicts():
    assert catalog.get("pn-point").status is Status.BOUNDARY
    assert catalog.get("genus2-node").status is Status.STABLE
    assert catalog.get("genus2-triple-point").status is Status.DESTABILISED


def test_catalog_cli(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "k3-quartic-point" in out
    code, _, err = run(capsys, "catalog", "run", "nope")
    assert code == 2


def test_oracle_scopes():
    for scope in ("p1", "p2", "graded", "curve-local"):
        rep = run_oracle_suite(scope)
        assert rep["failed"] == 0 and rep["passed"] > 0


def test_oracle_all_matches_golden(capsys):
    code, out, _ = run(capsys, "oracle", "compare", "--scope", "all", "--json")
    assert code == 0
    assert out == GOLDEN.read_text()


def test_oracle_text_table(capsys):
    code, out, _ = run(capsys, "oracle", "compare", "--scope", "curve-local")
    assert code == 0
    assert out.strip().endswith("0 failed")
