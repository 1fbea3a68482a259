"""End-to-end CLI tests: real subprocesses, exit codes, and JSON contracts."""

import json
import subprocess
import sys

import pytest


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "gammagenus", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )


def test_qgenus_text():
    res = run_cli("qgenus", "--max", "2")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "Q_1 = γ c_1"
    assert lines[1] == "Q_2 = 1/6 π^2 c_2 + (1/2 γ^2 - 1/12 π^2) c_1^2"


def test_qgenus_ascii():
    res = run_cli("qgenus", "--max", "1", "--ascii")
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "Q_1 = gamma c_1"


def test_qgenus_cy_text():
    res = run_cli("qgenus", "--max", "4", "--cy")
    assert res.returncode == 0
    lines = res.stdout.splitlines()
    assert lines[0] == "Q_2[c_1=0] = ζ(2) c_2"
    assert lines[1] == "Q_3[c_1=0] = ζ(3) c_3"
    assert lines[2] == "Q_4[c_1=0] = ζ(4) c_4 + ζ(2,2) c_2^2"


def test_qgenus_json():
    res = run_cli("qgenus", "--max", "3", "--format", "json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert [entry["degree"] for entry in payload] == [1, 2, 3]
    q1 = payload[0]["terms"]
    assert q1 == [
        {
            "c_partition": [1],
            "coeff": [{"monomial": {"gamma": 1}, "coeff": "1/1"}],
        }
    ]


def test_qgenus_cy_json():
    res = run_cli("qgenus", "--max", "4", "--cy", "--format", "json")
    assert res.returncode == 0
    payload = json.loads(res.stdout)
    assert [entry["degree"] for entry in payload] == [2, 3, 4]
    deg4 = {tuple(t["c_partition"]): t["mzv_terms"] for t in payload[2]["terms"]}
    assert deg4[(2, 2)] == [{"args": [2, 2], "coeff": "1/1"}]


def test_qgenus_json_deterministic():
    a = run_cli("qgenus", "--max", "4", "--format", "json")
    b = run_cli("qgenus", "--max", "4", "--format", "json")
    assert a.stdout == b.stdout
    assert a.returncode == b.returncode == 0


def test_qgenus_usage_errors():
    res = run_cli("qgenus", "--max", "0")
    assert res.returncode == 2
    assert "--max must be between" in res.stderr
    res = run_cli("qgenus", "--max", "13")
    assert res.returncode == 2
    res = run_cli("qgenus", "--max", "1", "--cy")
    assert res.returncode == 2


def test_mzv_text():
    res = run_cli("mzv", "--args", "2", "--tol", "1e-8")
    assert res.returncode == 0
    assert res.stdout.startswith("zeta(2) = 1.6449340")
    assert "+/-" in res.stdout


def test_mzv_json():
    res = run_cli("mzv", "--args", "2,2", "--tol", "1e-6", "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert set(data) == {"value", "bound"}
    assert abs(data["value"] - 0.811742425283) < 1e-6 + data["bound"]
    assert 0 < data["bound"] <= 1e-6


def test_mzv_divergent_exit_code():
    res = run_cli("mzv", "--args", "1,2")
    assert res.returncode == 3
    assert "diverges" in res.stderr


def test_mzv_malformed_args():
    res = run_cli("mzv", "--args", "x")
    assert res.returncode == 2
    assert "cannot parse" in res.stderr
    res = run_cli("mzv", "--args", "")
    assert res.returncode == 2


def test_mzv_bad_tol():
    res = run_cli("mzv", "--args", "2", "--tol", "0")
    assert res.returncode == 2
    assert "--tol" in res.stderr


def test_mzv_budget_exit_code():
    # honest refusal: the rounding allowance cannot certify 1e-12 here
    res = run_cli("mzv", "--args", "2,1", "--tol", "1e-12")
    assert res.returncode == 2
    assert "budget" in res.stderr


def test_stuffle_text():
    res = run_cli("stuffle", "--left", "2", "--right", "6")
    assert res.returncode == 0
    assert res.stdout.strip() == "z_2z_6 + z_6z_2 + z_8"


def test_stuffle_empty_word_is_unit():
    res = run_cli("stuffle", "--left", "1", "--right", "")
    assert res.returncode == 0
    assert res.stdout.strip() == "z_1"


def test_stuffle_json():
    res = run_cli("stuffle", "--left", "2", "--right", "3", "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert {"word": [5], "coeff": "1/1"} in data


def test_stuffle_malformed_word():
    res = run_cli("stuffle", "--left", "2,x", "--right", "3")
    assert res.returncode == 2


def test_verify_words_suite():
    res = run_cli("verify", "--suite", "words")
    assert res.returncode == 0
    assert "[PASS]" in res.stdout
    assert "[FAIL]" not in res.stdout
    assert "checks passed" in res.stdout.splitlines()[-1]


def test_verify_json():
    res = run_cli("verify", "--suite", "symbolic", "--format", "json")
    assert res.returncode == 0
    data = json.loads(res.stdout)
    assert data["suite"] == "symbolic"
    assert data["overall"] == "pass"


def test_verify_unknown_suite():
    res = run_cli("verify", "--suite", "bogus")
    assert res.returncode == 2


def test_no_command_is_usage_error():
    res = run_cli()
    assert res.returncode == 2
