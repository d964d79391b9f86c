import csv
import io
import json

import pytest

from polylbt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fvector_family_both(capsys):
    code, out, _ = run(capsys, "fvector", "--family", "sigma", "--d", "4", "--method", "both")
    assert code == 0 and out.splitlines() == ["10 21 18 7", "10 21 18 7"]


def test_fvector_formula(capsys):
    assert run(capsys, "fvector", "--formula", "eta", "--d", "4", "--n", "11")[1] == "11 22 18 7\n"
    assert run(capsys, "fvector", "--family", "triplex", "--d", "4", "--s", "2")[1].split("\n")[0] == "6 13 13 6"


def test_fvector_json_and_csv(capsys):
    code, out, _ = run(capsys, "--format", "json", "fvector", "--family", "j", "--d", "5",
                       "--ell-plus-1", "3")
    obj = json.loads(out)
    assert code == 0 and obj["match"] and obj["fvectors"]["lattice"][0] == 12
    code, out, _ = run(capsys, "fvector", "--family", "c", "--d", "4", "--format", "csv")
    assert out.splitlines()[0] == "method,f0,f1,f2,f3"


def test_domain_error_exit_2(capsys):
    code, _, err = run(capsys, "fvector", "--family", "triplex", "--d", "4", "--s", "9")
    assert code == 2 and "s=9" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["fvector", "--family", "triplex", "--d", "4"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify", "--suite", "nonsense"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["scan", "--d-min", "4", "--bogus"])
    assert e.value.code == 2


def test_verify_dplus2(capsys, tmp_path):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--suite", "dplus2", "--d", "5", "--n", "11", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == 0 and rep["failures"] == 0 and rep["cases"]
    assert [p.name for p in tmp_path.iterdir()] == ["r.json"]


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--d-max", "12", "--format", "text")
    assert code == 0 and out.startswith("identities:") and " 0 failures" in out


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", "--d-min", "4", "--d-max", "6", "--seedless")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert list(rows[0]) == ["d", "n", "k", "f1", "f2", "f3", "f4", "f5", "min", "argmin"]
    assert all("e" not in v and "." not in v for r in rows for v in r.values())
    assert any(v == "" for r in rows for v in r.values())
    with pytest.raises(SystemExit):
        main(["scan", "--d-min", "4"])


def test_scan_bad_range_exit_2(capsys):
    assert run(capsys, "scan", "--d-min", "3", "--d-max", "5")[0] == 2


def test_construct(capsys, tmp_path):
    w = {"op": "wedge", "face": [0, 1],
         "of": {"op": "product", "left": {"op": "simplex", "d": 1}, "right": {"op": "simplex", "d": 1}}}
    p = tmp_path / "w.json"
    p.write_text(json.dumps(w))
    code, out, _ = run(capsys, "construct", str(p))
    obj = json.loads(out)
    assert code == 0 and obj["fvector"] == [6, 9, 5] and len(obj["incidence"]["facets"]) == 5

    t = {"op": "truncate_simple_vertex", "v": 0, "of": {"op": "prism", "of": {"op": "simplex", "d": 3}}}
    p.write_text(json.dumps(t))
    assert run(capsys, "construct", str(p), "--format", "text")[1] == "11 22 18 7\n"

    bad = {"op": "truncate_simple_vertex", "v": 4,
           "of": {"op": "pyramid", "t": 1, "of": {"op": "product", "left": {"op": "simplex", "d": 1},
                                                  "right": {"op": "simplex", "d": 1}}}}
    p.write_text(json.dumps(bad))
    code, _, err = run(capsys, "construct", str(p))
    assert code == 2 and "geokernel" in err


def test_missing_recipe_file(capsys, tmp_path):
    assert run(capsys, "construct", str(tmp_path / "nope.json"))[0] == 2
