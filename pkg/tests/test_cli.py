import io
import json
import subprocess
import sys

import pytest

from harmschwarz.cli import main, parse_complex


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("text,value", [("0.5", 0.5), ("1+2i", 1 + 2j), ("-i", -1j), ("0.3-0.1i", 0.3 - 0.1j), ("2j", 2j)])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_analyze_examples():
    code, out = run("analyze", "thm43-extremal", "t=0.5", "at", "0")
    doc = json.loads(out)
    assert code == 0 and abs(doc["s_hm"]["re"] - 2.25) < 1e-12 and doc["s_hm"]["im"] == 0
    assert "p_cdo" not in doc
    doc = json.loads(run("analyze", "cubic-cdo", "--at", "0")[1])
    assert doc["p_cdo"] == {"re": 0, "im": 0}
    doc = json.loads(run("analyze", "thm42-extremal", "t=0.5")[1])
    assert abs(doc["p_hm"]["re"] - 2.5) < 1e-12


def test_norm_examples():
    doc = json.loads(run("norm", "cubic-cdo", "--which", "pre", "--flavor", "cdo")[1])
    assert abs(doc["value"] - 0.600566) < 1e-3
    doc = json.loads(run("norm", "bloch-bounded", "--which", "bloch")[1])
    assert abs(doc["value"] - 4) < 1e-3 and doc["boundary_limit"] is True
    doc = json.loads(run("norm", "thm43-extremal", "t=0", "--which", "schwarzian", "--flavor", "hm",
                         "--n-theta", "64", "--n-radii", "50")[1])
    assert doc["value"] >= 2 - 1e-9


def test_sweep_csv():
    code, out = run("sweep", "thm42-extremal", "t", "0.5", "0.95", "10", "--n-theta", "32", "--n-radii", "40")
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert code == 0 and rows[0] == ["param", "reference_value", "sampled_norm", "argmax_r", "argmax_theta",
                                     "boundary_limit"]
    ref = [float(r[1]) for r in rows[1:]]
    assert len(ref) == 10 and all(b > a for a, b in zip(ref, ref[1:]))
    out = run("sweep", "thm43-extremal", "t", "0", "0.9", "4", "--which", "schwarzian",
              "--n-theta", "16", "--n-radii", "20", "--no-refine")[1]
    assert float(out.strip().splitlines()[-1].split(",")[1]) == 2.81
    out = run("sweep", "coeff-family", "gamma", "0", "0.9", "3", "--which", "bloch",
              "--n-theta", "16", "--n-radii", "20")[1]
    rows = out.strip().splitlines()[1:]
    assert len(rows) == 3 and all(r.split(",")[1] == "" for r in rows)


def test_coeffs_output():
    out = run("coeffs", "coeff-family", "gamma=0.5", "--n-max", "4")[1].splitlines()
    assert out[0] == "n,re,im,abs,reference" and out[2].startswith("2,0.875,")
    doc = json.loads(run("coeffs", "coeff-family", "gamma=0.5", "--n-max", "3", "--json")[1])
    assert doc["coefficients"][0]["b_n"] == {"re": 0.5, "im": 0}


def test_verify_exit_codes():
    code, out = run("verify", "thm45", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] is True
    code, out = run("verify", "thm43")
    assert code == 0 and "S_f(0)" in out


def test_error_exit_code():
    code, out = run("analyze", "thm42-extremal", "t=1.5")
    assert code == 2 and json.loads(out)["error"] == "ParamError"
    code, out = run("analyze", "coeff-family", "--at", "1.2")
    assert code == 2 and "error" in json.loads(out)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        run("norm", "no-such-family")
    assert exc.value.code == 2


def test_json_seventeen_digits_and_deterministic():
    a = run("norm", "cubic-cdo", "--flavor", "cdo", "--n-theta", "32", "--n-radii", "30")[1]
    b = run("norm", "cubic-cdo", "--flavor", "cdo", "--n-theta", "32", "--n-radii", "30")[1]
    assert a == b
    assert json.loads(a)["value"] == float(repr(json.loads(a)["value"]))


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "harmschwarz", "analyze", "cubic-cdo", "--at", "0.5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and abs(json.loads(res.stdout)["jacobian"] - 0.9375) < 1e-12
