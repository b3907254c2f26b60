from __future__ import annotations

import json

import pytest

from index2codes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_validate_json(capsys):
    code, out = run(capsys, "validate", "--p", "3", "--f", "5", "--k", "11", "--h", "2", "--e", "2")
    body = json.loads(out)
    assert code == 0 and body["index2_valid"] and body["dimension"] == 22


def test_invalid_params_exit_2(capsys):
    code, out = run(capsys, "validate", "--p", "4", "--f", "1", "--k", "1", "--h", "1", "--e", "1")
    assert code == 2 and json.loads(out)["error"] == "InvalidParameters"


def test_lift(capsys):
    code, out = run(capsys, "lift", "--p", "3", "--p1", "11", "--s", "11")
    body = json.loads(out)
    assert code == 0 and int(body["a_s"]) == 67 and int(body["b_s"]) == 253


def test_example_text(capsys):
    code, out = run(capsys, "example", "--format", "text")
    assert code == 0 and out.startswith("PASS")


def test_predict_latex(capsys):
    code, out = run(capsys, "predict", "--p", "3", "--f", "5", "--k", "11", "--h", "2", "--e", "2", "--format", "latex")
    assert code == 0 and "2A(B-1358)" in out


def test_brute(capsys):
    code, out = run(capsys, "brute", "--p", "5", "--f", "1", "--k", "2", "--h", "4", "--e", "2")
    body = json.loads(out)
    assert code == 0 and body["check"]["passed"]


def test_brute_too_large(capsys):
    code, out = run(capsys, "brute", "--p", "3", "--f", "5", "--k", "11", "--h", "2", "--e", "2")
    assert code == 2


@pytest.mark.parametrize("cmd", [["gauss-compare", "--p", "11", "--p1", "7"], ["class-number", "--p1", "23"]])
def test_exact_comparisons(capsys, cmd):
    code, _ = run(capsys, *cmd)
    assert code == 0


def test_classify(capsys):
    code, out = run(capsys, "classify", "--p", "11", "--f", "3", "--k", "7", "--h", "2", "--e", "2", "--seed", "5")
    assert code == 0 and json.loads(out)["matches_table"]


def test_verify_eq2(capsys):
    code, _ = run(capsys, "verify-eq2", "--p", "11", "--f", "1", "--k", "5", "--h", "2", "--e", "2", "--samples", "5")
    assert code == 0
