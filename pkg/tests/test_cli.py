import json
import math

import pytest

from kappamath.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_eval_exp(capsys):
    rc, out, _ = run(capsys, "eval", "--fn", "exp", "--kappa", "0.5", "--x", "1")
    assert rc == 0
    assert out.strip() == "2.6180339887498949"


def test_eval_ln_at_one(capsys):
    rc, out, _ = run(capsys, "eval", "--fn", "ln", "--kappa", "0.5", "--x", "1")
    assert rc == 0
    assert float(out) == 0.0


def test_eval_kappa_out_of_range(capsys):
    rc, _, err = run(capsys, "eval", "--fn", "exp", "--kappa", "1.5", "--x", "1")
    assert rc == 2
    assert "kappa out of range" in err


def test_eval_arity_checks(capsys):
    rc, _, err = run(capsys, "eval", "--fn", "sum", "--kappa", "0.5", "--x", "1")
    assert rc == 2 and "--y" in err
    rc, _, _ = run(capsys, "eval", "--fn", "exp", "--kappa", "0.5", "--x", "1", "--y", "2")
    assert rc == 2


def test_solve_row_count_and_header(capsys):
    rc, out, _ = run(capsys, "solve", "--kappa", "0.9", "--method", "rk4",
                     "--h", "0.01", "--x-max", "5")
    assert rc == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,f,method,kappa,h"
    assert len(lines) == 502  # header + 501 samples


def test_solve_analytic_classical_endpoint(capsys):
    rc, out, _ = run(capsys, "solve", "--kappa", "0", "--method", "analytic",
                     "--h", "0.1", "--x-max", "1")
    assert rc == 0
    last_f = float(out.strip().split("\n")[-1].split(",")[1])
    assert abs(last_f - math.exp(-1)) < 1e-15


def test_solve_rejects_bad_step(capsys):
    rc, _, _ = run(capsys, "solve", "--kappa", "0.9", "--method", "euler", "--h", "-1")
    assert rc == 2


def test_solve_json_format(capsys):
    rc, out, _ = run(capsys, "solve", "--kappa", "0.5", "--method", "analytic",
                     "--h", "0.5", "--x-max", "1", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["method"] == "analytic"
    assert len(doc["samples"]) == 3
    assert doc["samples"][0] == {"x": 0.0, "f": 1.0}


def test_series_decay_coefficients(capsys):
    rc, out, _ = run(capsys, "series", "--target", "decay", "--order", "4",
                     "--kappa", "0.5")
    assert rc == 0
    doc = json.loads(out)
    assert doc["variable"] == "x"
    assert doc["coefficients"] == pytest.approx([1.0, -1.0, 0.5, -0.125, 0.0], abs=1e-15)


def test_series_picard_and_exp(capsys):
    rc, out, _ = run(capsys, "series", "--target", "picard", "--order", "0",
                     "--kappa", "0.9")
    assert json.loads(out)["coefficients"] == [1.0]
    rc, out, _ = run(capsys, "series", "--target", "exp", "--order", "5",
                     "--kappa", "0.5")
    assert json.loads(out)["coefficients"][5] == pytest.approx(-0.0078125, abs=1e-15)


def test_series_rejects_bad_order(capsys):
    rc, _, _ = run(capsys, "series", "--target", "exp", "--order", "99", "--kappa", "0.5")
    assert rc == 2


def test_compare_summary_and_orders(capsys, tmp_path):
    rc, _, _ = run(capsys, "compare", "--methods", "euler,ab2,rk4", "--h", "0.01",
                   "--kappa", "0.9", "--out-dir", str(tmp_path))
    assert rc == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    maxes = {r["method"]: r["max_error"] for r in summary["reports"]}
    assert maxes["euler"] > maxes["ab2"] > maxes["rk4"]
    assert (tmp_path / "errors_euler.csv").read_text().startswith("method,h,x,abs_error\n")


def test_compare_ladder_fits(capsys, tmp_path):
    rc, _, _ = run(capsys, "compare", "--methods", "rk4", "--h", "0.1",
                   "--levels", "4", "--kappa", "0.9", "--out-dir", str(tmp_path))
    assert rc == 0
    summary = json.loads((tmp_path / "summary.json").read_text())
    orders = summary["fitted_orders"]["rk4"]
    assert len(orders) == 3
    assert all(abs(o - 4.0) < 0.25 for o in orders)


def test_compare_empty_methods(capsys, tmp_path):
    rc, _, _ = run(capsys, "compare", "--methods", "", "--out-dir", str(tmp_path))
    assert rc == 2


def test_slope_field_grid(capsys):
    rc, out, _ = run(capsys, "slope-field", "--kappa", "0.9", "--x-min", "0",
                     "--x-max", "5", "--f-min", "0", "--f-max", "1",
                     "--nx", "21", "--nf", "21")
    assert rc == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,f,slope"
    assert len(lines) == 442  # header + 21*21 nodes


def test_logistic_output(capsys):
    rc, out, _ = run(capsys, "logistic", "--kappa", "0.9", "--method", "rk4",
                     "--h", "0.5", "--x-max", "5")
    assert rc == 0
    lines = out.strip().split("\n")
    assert lines[0] == "x,f_analytic,f_method,abs_error"
    mid = [ln for ln in lines[1:] if float(ln.split(",")[0]) == 0.0]
    assert len(mid) == 1
    assert float(mid[0].split(",")[1]) == 0.5


def test_logistic_bad_step(capsys):
    rc, _, _ = run(capsys, "logistic", "--kappa", "0.9", "--h", "100")
    assert rc == 2


def test_output_files_are_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for target in (a, b):
        rc, _, _ = run(capsys, "solve", "--kappa", "0.9", "--method", "euler",
                       "--h", "0.1", "--x-max", "2", "--output", str(target))
        assert rc == 0
    assert a.read_bytes() == b.read_bytes()


def test_kappa_out_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("KAPPA_OUT_DIR", str(tmp_path))
    rc, _, _ = run(capsys, "series", "--target", "decay", "--order", "3",
                   "--kappa", "0.5", "--output", "coeffs.json")
    assert rc == 0
    doc = json.loads((tmp_path / "coeffs.json").read_text())
    assert doc["order"] == 3
