"""Tests for the bcq command-line interface."""

import json

import pytest

from bcq.cli import main, parse_scalar, parse_weight

from fractions import Fraction as F


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_scalar():
    assert parse_scalar("1/3") == F(1, 3)
    assert parse_scalar("-2/7") == F(-2, 7)
    assert parse_scalar("4") == F(4)
    assert isinstance(parse_scalar("0.25"), float)
    assert isinstance(parse_scalar("1e-3"), float)
    with pytest.raises(ValueError):
        parse_scalar("abc")
    with pytest.raises(ValueError):
        parse_scalar("1/0")


def test_parse_weight():
    assert parse_weight("2,1") == (2, 1)
    assert parse_weight("1") == (1,)
    with pytest.raises(ValueError):
        parse_weight("1,x")


def test_poly_koornwinder_json(capsys):
    code, out, _ = run(
        capsys,
        "poly",
        "--family",
        "koornwinder",
        "--lambda",
        "1,0",
        "--t",
        "1/5,-1/7,1/3,-2/7",
        "--q",
        "1/4",
    )
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "koornwinder"
    assert data["lambda"] == [1, 0]
    terms = {tuple(t["exp"]): t["coef"] for t in data["polynomial"]["terms"]}
    assert terms[(1, 0)] == "1"
    assert terms[(0, 0)] == "-1565/11758"


def test_poly_little(capsys):
    code, out, _ = run(
        capsys,
        "poly",
        "--family",
        "little",
        "--lambda",
        "1",
        "--a",
        "0.5",
        "--b",
        "0.3",
        "--q",
        "0.25",
    )
    assert code == 0
    data = json.loads(out)
    assert data["family"] == "little"


def test_verify_qybe_pass(capsys):
    code, out, _ = run(capsys, "verify", "qybe", "--n", "3", "--q", "1/2")
    assert code == 0
    report = json.loads(out)
    assert report["identity"] == "quantum-yang-baxter"
    assert report["exact"] is True


def test_verify_reflection_pass(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "reflection",
        "--n",
        "4",
        "--l",
        "2",
        "--sigma",
        "1",
        "--q",
        "1/2",
    )
    assert code == 0


def test_verify_limit_csv(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "limit-little",
        "--lambda",
        "1",
        "--a",
        "1/2",
        "--b",
        "1/3",
        "--q",
        "1/4",
        "--format",
        "csv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "epsilon,max_coeff_err,norm_err,constructed_ok"
    assert len(lines) == 8  # header + default sweep


def test_verify_classical(capsys):
    code, out, _ = run(capsys, "verify", "classical", "--l", "2", "--k", "1")
    assert code == 0
    report = json.loads(out)
    assert report["identity"] == "classical-selberg-limit"


def test_grassmann_output(capsys):
    code, out, _ = run(
        capsys,
        "grassmann",
        "--n",
        "4",
        "--l",
        "1",
        "--sigma",
        "0",
        "--tau",
        "1",
        "--q",
        "1/2",
    )
    assert code == 0
    data = json.loads(out)
    assert set(data) >= {"koornwinder", "big", "little", "fundamental_spherical"}
    assert data["koornwinder"]["base"] == "1/4"


def test_invalid_input_exit_code(capsys):
    code, _, err = run(
        capsys,
        "poly",
        "--family",
        "koornwinder",
        "--lambda",
        "1,0",
        "--t",
        "1/5,-1/7,1/3",  # only three entries
        "--q",
        "1/4",
    )
    assert code == 2
    assert err


def test_bad_scalar_exit_code(capsys):
    code, _, _ = run(
        capsys,
        "poly",
        "--family",
        "little",
        "--lambda",
        "1",
        "--a",
        "zzz",
        "--b",
        "0.3",
        "--q",
        "0.25",
    )
    assert code == 2


def test_output_deterministic(capsys):
    args = ("verify", "qybe", "--n", "2", "--q", "1/2")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
