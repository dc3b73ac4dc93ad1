import json

import pytest

from ncsurf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_expand_pentagon_json(capsys):
    code, out = run(capsys, "expand", "--tri", "n=5;diag=1-3,1-4", "--edge", "2,5", "--format", "json")
    assert code == 0
    data = json.loads(out.out)
    assert data["terms"] == 3 and data["edge"] == [2, 5]


def test_expand_text_and_basis(capsys):
    code, out = run(capsys, "expand", "--tri", "n=5;diag=1-3,1-4", "--edge", "2,5", "--basis")
    assert code == 0 and out.out.startswith("x_25 = ")


def test_rank_torus(capsys):
    code, out = run(capsys, "rank", "--chi", "0", "--marked", "1", "--closed", "torus")
    assert code == 0 and "OneRelator(5)" in out.out


def test_rank_illegal_is_usage_error(capsys):
    code, out = run(capsys, "rank", "--chi", "3", "--marked", "1")
    assert code == 2 and "chi" in out.err


@pytest.mark.parametrize("argv", [
    ["expand", "--tri", "n=5;diag=1-3", "--edge", "2,5"],
    ["expand", "--tri", "n=5;diag=1-3,1-4", "--edge", "2,9"],
    ["expand", "--tri", "n=5;diag=1-3,1-4", "--edge", "2,2"],
    ["nonsense"],
    ["cylinder"],
])
def test_usage_errors(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_bad_seed_env(capsys, monkeypatch):
    monkeypatch.setenv("NCSURF_SEED", "abc")
    code, _ = run(capsys, "angle-check", "--n", "5", "--trials", "1")
    assert code == 2


def test_flip_and_angle_checks(capsys):
    assert run(capsys, "flip-check", "--tri", "n=6;diag=1-3,1-4,1-5")[0] == 0
    assert run(capsys, "angle-check", "--n", "5", "--trials", "1", "--dims", "2")[0] == 0
    assert run(capsys, "retraction-check", "--n-max", "5")[0] == 0


def test_cylinder(capsys):
    code, out = run(capsys, "cylinder", "--r", "2", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out.out)["terms"] == 2
    code, out = run(capsys, "cylinder", "--r", "2", "--n-max", "8", "--format", "json")
    assert code == 0 and json.loads(out.out)["result"] == "PASS"


def test_strip(capsys):
    assert run(capsys, "strip", "--i", "0", "--j", "2")[0] == 0
    assert run(capsys, "strip", "--i", "0", "--check", "relations", "--radius", "2")[0] == 0
    assert run(capsys, "strip", "--i", "0", "--check", "conserved", "--radius", "2")[0] == 0


def test_pn1(capsys):
    code, out = run(capsys, "pn1", "--n", "3", "--arc", "1", "--arc", "1,2,-", "--curve", "2",
                    "--format", "json")
    assert code == 0 and json.loads(out.out)["terms"] == 2


def test_oracle_verify(capsys):
    assert run(capsys, "oracle-verify", "--lhs", "a*b", "--rhs", "a*b")[0] == 0
    assert run(capsys, "oracle-verify", "--lhs", "a*b", "--rhs", "b*a")[0] == 1


def test_suite_subset(capsys):
    code, out = run(capsys, "suite", "--only", "1,2", "--quiet")
    assert code == 0
