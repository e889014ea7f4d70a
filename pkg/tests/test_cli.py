import csv
import json
import os
import subprocess
import sys

import numpy as np
import pytest

from padetype.cli import main

SPECS = os.path.join(os.path.dirname(__file__), "..", "specs")


def spec_path(name):
    return os.path.join(SPECS, name)


def write_spec(tmp_path, data, name="spec.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def read_csv(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def cx(pairs):
    return np.array([complex(a, b) for a, b in pairs])


def test_fit_geometric_fixture(tmp_path):
    out = tmp_path / "m.json"
    assert main(["fit", "--spec", spec_path("geometric.json"), "--out", str(out)]) == 0
    model = json.loads(out.read_text())
    assert model["type"] == "rational"
    np.testing.assert_allclose(cx(model["num"]), [1, 0], atol=1e-14)
    np.testing.assert_allclose(cx(model["den"]), [1, -1], atol=1e-14)


@pytest.mark.parametrize("spec", ["tan.json", "tan_partial.json",
                                  "cos_bary.json", "geometric.json"])
def test_fit_eval_round_trip(tmp_path, spec):
    model, table = tmp_path / "m.json", tmp_path / "e.csv"
    assert main(["fit", "--spec", spec_path(spec), "--out", str(model)]) == 0
    assert main(["eval", "--model", str(model), "--spec", spec_path(spec), "--out", str(table)]) == 0
    rows = read_csv(table)
    from padetype.cli import load_json, parse_spec
    ref = parse_spec(load_json(spec_path(spec))).values
    got = np.array([float(r["R"]) + 1j * float(r["R_imag"]) for r in rows])
    np.testing.assert_allclose(got, ref, rtol=1e-8)


def test_eval_grid_columns_and_determinism(tmp_path):
    model = tmp_path / "m.json"
    main(["fit", "--spec", spec_path("tan.json"), "--out", str(model)])
    outs = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        assert main(["eval", "--model", str(model), "--spec", spec_path("tan.json"),
                     "--grid", "-1.5:1.5:1001", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    rows = read_csv(tmp_path / "a.csv")
    assert len(rows) == 1001
    assert list(rows[0]) == ["t", "R", "R_imag", "f_ref", "abs_err", "log10_err"]
    # 17 significant digits survive the trip
    assert float(rows[1]["t"]) == np.linspace(-1.5, 1.5, 1001)[1]


def test_poles_and_fix_poles(tmp_path):
    model, poles, fixed = tmp_path / "m.json", tmp_path / "p.json", tmp_path / "f.json"
    main(["fit", "--spec", spec_path("cos_poles.json"), "--out", str(model)])
    grid = "-3.141592653589793:3.141592653589793:500"
    assert main(["poles", "--model", str(model), "--grid", grid, "--out", str(poles)]) == 0
    reports = json.loads(poles.read_text())
    assert len(reports) == 1 and reports[0]["method"] == "roots"
    assert reports[0]["location"][0] == pytest.approx(-2.8636, abs=1e-3)
    assert main(["fix-poles", "--spec", spec_path("cos_poles.json"), "--out", str(fixed)]) == 0
    doc = json.loads(fixed.read_text())
    assert len(doc["history"]) == 1
    assert doc["history"][0]["replaced_index"] == 0


def test_budget_exit_code(tmp_path):
    spec = write_spec(tmp_path, {"series": {"known": "cos", "n": 6}, "function": "cos",
                                 "nodes": [-3.23, -5.38], "degrees": {"k": 2}})
    code = main(["fix-poles", "--spec", spec, "--grid", "-6:6:500", "--max-iter", "1",
                 "--out", str(tmp_path / "o.json")])
    assert code == 4


def test_spec_validation_exit_codes(tmp_path, capsys):
    bad = write_spec(tmp_path, {"nodes": [0.5], "values": [1.0, 2.0], "series": [1, 1]})
    assert main(["fit", "--spec", bad, "--out", str(tmp_path / "o.json")]) == 2
    origin = write_spec(tmp_path, {"series": [1, 1], "function": "exp", "degrees": {"k": 3},
                                   "nodes": {"generator": "equidistant", "a": -1, "b": 1, "n": 3}},
                        "origin.json")
    assert main(["fit", "--spec", origin, "--out", str(tmp_path / "o.json")]) == 2
    assert main(["fit", "--out", str(tmp_path / "o.json")]) == 2
    assert main(["nonsense"]) == 2
    err = capsys.readouterr().err.strip().splitlines()
    assert all(line.startswith("padetype:") for line in err)
    assert not (tmp_path / "o.json").exists()


def test_numerical_failure_exit_code(tmp_path):
    spec = write_spec(tmp_path, {"series": [1, 1, 1], "nodes": [1e-300], "values": [1e308],
                                 "degrees": {"p": 1, "q": 1}})
    assert main(["fit", "--spec", spec, "--out", str(tmp_path / "o.json")]) == 3


def test_laplace_invert(tmp_path):
    out = tmp_path / "lap.csv"
    assert main(["laplace-invert", "--spec", spec_path("laplace_log.json"),
                 "--grid", "1:8:71", "--out", str(out)]) == 0
    rows = read_csv(out)
    err = np.array([float(r["abs_err"]) for r in rows])
    assert err[0] < 1e-9 and err[-1] > 1.0
    series = json.loads((tmp_path / "lap_series.json").read_text())
    assert len(series["coefficients"]) == 12


def test_accelerate_piecewise_cheb(tmp_path):
    acc = tmp_path / "acc.csv"
    assert main(["accelerate", "--spec", spec_path("accelerate_log2.json"), "--out", str(acc)]) == 0
    T = np.array([float(r["T"]) for r in read_csv(acc)])
    assert np.max(np.abs(T - np.log(2))) < 1e-6
    pw = tmp_path / "pw.json"
    assert main(["piecewise", "--spec", spec_path("piecewise_log.json"), "--out", str(pw)]) == 0
    doc = json.loads(pw.read_text())
    assert doc["conditions"][0] == pytest.approx(3.25e4, rel=0.01)
    assert doc["conditions"][1] == pytest.approx(2.86e4, rel=0.01)
    ch = tmp_path / "ch.json"
    assert main(["cheb-fit", "--spec", spec_path("cheb_exp.json"), "--out", str(ch)]) == 0
    assert json.loads(ch.read_text())["type"] == "chebyshev"


def test_no_row_scaling_flag(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["fit", "--spec", spec_path("cos_poles.json"), "--out", str(a)])
    main(["fit", "--spec", spec_path("cos_poles.json"), "--no-row-scaling", "--out", str(b)])
    da, db = cx(json.loads(a.read_text())["den"]), cx(json.loads(b.read_text())["den"])
    np.testing.assert_allclose(da, db, rtol=1e-6)


def test_console_entry_point(tmp_path):
    out = tmp_path / "m.json"
    proc = subprocess.run([sys.executable, "-m", "padetype.cli", "fit", "--spec",
                           spec_path("geometric.json"), "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert out.exists()
