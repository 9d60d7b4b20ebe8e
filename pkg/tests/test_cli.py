import json
import subprocess
import sys

import pytest

from toricphases.cli import main
from toricphases.errors import ParseError
from toricphases.io import dumps_report, load_model, loads_model, model_to_dict


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json", "--no-meta")
    return code, json.loads(out)


def test_phases_quintic(capsys):
    code, rep = run_json(capsys, "phases", "catalog:X(5)")
    assert code == 0 and rep["schema"] == "1"
    assert [p["minimal_exceptional_sets"] for p in rep["phases"]] == [[["x1", "x2", "x3", "x4", "x5"]], [["p1"]]]
    assert [p["kind"] for p in rep["phases"]] == ["geometric", "landau-ginzburg"]
    (wall,) = rep["walls"]
    assert wall["sigma"] == 5 and wall["window"]["size"] == 5
    assert wall["window"]["degrees"] == [[j] for j in range(5)]


def test_phases_x223(capsys):
    code, rep = run_json(capsys, "phases", "catalog:X(2,2,3)")
    assert rep["phases"][rep["lg_phases"][0]]["minimal_exceptional_sets"] == [["p1", "p2", "p3"]]


def test_relations(capsys):
    code, rep = run_json(capsys, "relations", "catalog:X(10)", "--phase", "geometric", "--refined")
    assert code == 0 and len(rep["relations"]) == 3
    code, out, _ = run(capsys, "relations", "catalog:X(5)", "--phase", "lg")
    assert code == 0 and "M^5 ≅ [2]" in out


def test_ktheory(capsys):
    code, rep = run_json(capsys, "ktheory", "catalog:X(10)", "--phase", "geometric", "--refined",
                         "--check", "(t-1)^4", "--expect-member")
    assert code == 0
    (check,) = rep["checks"]
    assert check["member"] and check["certificate"]
    code, rep = run_json(capsys, "ktheory", "catalog:X(3,3)", "--phase", "lg", "--reduce", "t^6")
    assert rep["reductions"][0]["normal_form"] == "2*t^3 - 1"
    code, rep = run_json(capsys, "ktheory", "catalog:X(10)", "--check", "(t-1)^3")
    assert code == 0 and rep["checks"][0]["member"] is False
    code, _, _ = run(capsys, "ktheory", "catalog:X(10)", "--check", "(t-1)^3", "--expect-member")
    assert code == 4


def test_verify_mf(capsys, tmp_path):
    code, rep = run_json(capsys, "verify-mf", "catalog:X(5)", "--fermat")
    assert code == 0 and rep["verification"]["ok"] and rep["rank"] == 1
    code, rep = run_json(capsys, "verify-mf", "catalog:X(3,3)", "--fermat")
    assert code == 0 and rep["rank"] == 2
    bad = tmp_path / "sections.json"
    bad.write_text(json.dumps({"sections": ["x1^3", "x2^2"]}))
    code, _, err = run(capsys, "verify-mf", "catalog:X(3,3)", "--sections", str(bad))
    assert code == 2 and "InhomogeneousInput" in err
    good = tmp_path / "good.json"
    good.write_text(json.dumps(["x1^3 + x2^3", "x3^3 - 2*x4^2*x5"]))
    code, rep = run_json(capsys, "verify-mf", "catalog:X(3,3)", "--sections", str(good))
    assert code == 0 and rep["sections"] == "file"


def test_catalog_list(capsys):
    code, rep = run_json(capsys, "catalog", "list")
    assert code == 0 and len(rep["models"]) == 14
    code, out, _ = run(capsys, "catalog", "list")
    assert "X(2,2,2,2)" in out


def test_errors_and_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "relations", "catalog:X(5)", "--phase", "middle")
    assert code == 2 and "selector" in err
    code, _, err = run(capsys, "phases", "catalog:X(99)")
    assert code == 2
    f = tmp_path / "notcy.json"
    f.write_text(json.dumps({"name": "bad", "coordinate_charges": [[1], [1], [1], [1]], "superpotential_degrees": [[5]]}))
    code, _, err = run(capsys, "phases", str(f))
    assert code == 2 and "NotCalabiYau" in err
    f = tmp_path / "degenerate.json"
    f.write_text(json.dumps({"name": "deg", "coordinate_charges": [[1, 1], [1, 1], [1, 1]], "superpotential_degrees": [[3, 3]]}))
    code, _, err = run(capsys, "phases", str(f))
    assert code in (2, 3) and err
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_parse_error_has_line():
    with pytest.raises(ParseError) as exc:
        loads_model('{\n  "name": "x",\n  "coordinate_charges": [[1],\n}')
    assert exc.value.line == 4
    with pytest.raises(ParseError):
        loads_model('{"coordinate_charges": [[1]], "bogus": 1}')
    with pytest.raises(ParseError):
        load_model("/nonexistent/model.json")


def test_model_file_roundtrip(tmp_path):
    m = load_model("catalog:X(10)")
    f = tmp_path / "x10.json"
    f.write_text(json.dumps(model_to_dict(m)))
    again = load_model(f)
    assert again.charges == m.charges and again.names == m.names


def test_big_integers_are_strings(capsys, tmp_path):
    big = 2**60
    f = tmp_path / "big.json"
    f.write_text(json.dumps({"name": "big", "coordinate_charges": [[big]] * 4, "superpotential_degrees": [[str(4 * big)]]}))
    code, rep = run_json(capsys, "phases", str(f))
    assert code == 0
    assert rep["model"]["coordinate_charges"][0] == [str(big)]
    assert rep["model"]["superpotential_degrees"] == [[str(4 * big)]]
    assert rep["walls"][0]["sigma"] == str(4 * big) and rep["walls"][0]["window"]["degrees"] is None
    assert dumps_report({"a": 2**53 - 1, "b": 2**53}) == '{\n  "a": 9007199254740991,\n  "b": "9007199254740992"\n}\n'


def test_determinism_and_meta():
    cmd = [sys.executable, "-m", "toricphases", "ktheory", "catalog:X(10)", "--check", "(t-1)^4", "--json"]
    a = subprocess.run(cmd + ["--no-meta"], capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["--no-meta"], capture_output=True, check=True).stdout
    assert a == b
    with_meta = json.loads(subprocess.run(cmd, capture_output=True, check=True).stdout)
    assert "meta" in with_meta and "meta" not in json.loads(a)
