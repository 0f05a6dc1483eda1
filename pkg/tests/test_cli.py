import json
from fractions import Fraction

import pytest

from krawgibbs import cli, steepident


def run(capsys, *argv):
    code = cli.main(["-q", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_approx_coeffs(capsys):
    assert run(capsys, "approx", "--N", "2") == (0, "n,coefficient\n1,1/1\n", "")
    code, out, _ = run(capsys, "approx", "--N", "4")
    assert out.splitlines()[1:] == ["1,3/4", "3,-1/1"]


def test_approx_samples(capsys):
    code, out, _ = run(capsys, "approx", "--N", "4", "--emit", "samples", "--samples", "3")
    rows = [line.split(",")[:2] for line in out.splitlines()[1:]]
    assert rows == [["0/1", "0/1"], ["1/1", "1/1"], ["2/1", "1/1"]]


def test_approx_general_p_json(capsys):
    code, out, _ = run(capsys, "approx", "--N", "4", "--p", "1/3", "--format", "json")
    rows = json.loads(out)["rows"]
    got = {r["n"]: Fraction(int(r["coefficient"]["num"]), int(r["coefficient"]["den"])) for r in rows}
    assert got == {0: Fraction(-13, 27), 1: Fraction(2, 3), 2: Fraction(1, 3), 3: -1}
    code, out, _ = run(capsys, "approx", "--N", "4", "--p", "1/3", "--emit", "samples", "--samples", "5",
                       "--x-min", "-2", "--x-max", "2")
    assert [line.split(",")[1] for line in out.splitlines()[1:]] == ["-1/1", "-1/1", "0/1", "1/1", "1/1"]


def test_steepness(capsys):
    assert run(capsys, "steepness", "--N", "40", "--format", "exact")[1] == "3637485804655193/2671465728531600\n"
    assert run(capsys, "steepness", "--N", "400", "--digits", "5")[1] == "1.38379\n"
    assert run(capsys, "steepness", "--N", "2", "--format", "exact")[1] == "1\n"


def test_steepness_table(capsys):
    code, out, _ = run(capsys, "steepness-table", "--from", "2", "--to", "6", "--step", "2", "--digits", "3")
    assert [line.split(",")[::2] for line in out.splitlines()[1:]] == [["2", "1.000"], ["4", "1.166"], ["6", "1.233"]]


def test_overshoot(capsys):
    assert run(capsys, "overshoot", "--N", "10") == (0, "1.101182\n", "")
    assert run(capsys, "overshoot", "--N", "100", "--digits", "6")[1] == "1.068784\n"
    assert run(capsys, "overshoot", "--N", "10", "--rounding", "half-even")[1] == "1.101183\n"
    assert run(capsys, "overshoot", "--N", "10", "--theta-step", "1/16")[1] == "1.101182\n"


def test_overshoot_no_critical_point(capsys):
    code, out, err = run(capsys, "overshoot", "--N", "2")
    assert code == 1 and out == ""
    assert "no critical point found" in err


def test_overshoot_table_json(capsys):
    code, out, _ = run(capsys, "overshoot-table", "--N", "10,50", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [(r["N"], r["decimal"]) for r in rows] == [(10, "1.101182"), (50, "1.071891")]
    lo = Fraction(int(rows[0]["theta_lo"]["num"]), int(rows[0]["theta_lo"]["den"]))
    hi = Fraction(int(rows[0]["theta_hi"]["num"]), int(rows[0]["theta_hi"]["den"]))
    assert 0 < hi - lo < Fraction(1, 10**12)


def test_gamma(capsys):
    assert run(capsys, "gamma", "--digits", "6")[1] == "1.178980\n"
    assert run(capsys, "gamma", "--digits", "1")[1] == "1.2\n"
    assert Fraction(run(capsys, "gamma", "--digits", "4")[1].strip()) == Fraction("1.179")


SMALL = ["--M-max", "20", "--st-max", "20", "--x-closed-max", "20", "--pq-max", "6", "--N-max", "12"]


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", *SMALL)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "name,bounds,checked,all_passed,first_failure"
    assert len(lines) == 9 and all(",true," in line for line in lines[1:])


def test_verify_interpolation_and_kernel(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "interpolation", "--N-max", "20", "--interp-max", "20",
                       "--p-indep-max", "8")
    assert code == 0 and out.count(",true,") == 4
    code, out, _ = run(capsys, "verify", "--suite", "kernel", "--kernel-max", "6", "--format", "json")
    assert code == 0 and json.loads(out)["rows"][0]["all_passed"] is True


def test_verify_corrupted_binomial(capsys, monkeypatch):
    real = steepident.int_binomial
    monkeypatch.setattr(steepident, "int_binomial", lambda n, k: real(n, k) + (n == 7 and k == 3))
    code, out, err = run(capsys, "verify", "--suite", "identities", *SMALL, "--format", "json")
    assert code == 1
    failed = [r for r in json.loads(out)["rows"] if not r["all_passed"]]
    assert failed and all(r["first_failure"] for r in failed)
    assert "FAILED" in err
    # audit mode makes the brute-force oracles independent of the memo table;
    # the closed-form sides still read it, so the suite as a whole still fails
    code, out, _ = run(capsys, "verify", "--suite", "identities", *SMALL, "--audit", "--format", "json")
    rows = {r["name"]: r["all_passed"] for r in json.loads(out)["rows"]}
    assert code == 1
    assert rows["supercatalan_identity"] and rows["appendix_lemma"]


@pytest.mark.parametrize(
    "argv",
    [
        ["approx", "--N", "3"],
        ["steepness", "--N", "0"],
        ["overshoot", "--N", "10", "--theta-step", "abc"],
        ["verify", "--suite", "everything"],
        ["gamma", "--digits", "-1"],
        [],
    ],
)
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["approx", "--N", "4", "--p", "3/2"],
        ["approx", "--N", "4", "--emit", "samples", "--samples", "0"],
        ["steepness-table", "--from", "4"],
        ["overshoot-table", "--from", "3", "--to", "9"],
        ["gamma", "--digits", "1001"],
    ],
)
def test_domain_errors(argv, capsys):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith("error: ")
