"""End-to-end command-line interface behaviour."""

import json

import pytest

from pellipse.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_solve_closed_form_values(capsys):
    rc, out = run(capsys, "solve", "--n", "4", "--a", "5", "--b", "3")
    assert rc == 0
    doc = json.loads(out)
    assert doc["kind"] == "periodic" and doc["n"] == 4
    gammas = sorted(r["gamma"] for r in doc["caustics"])
    assert gammas == pytest.approx([-7.5, -1.875, 1.875], rel=1e-12)
    assert all(r["validated"] for r in doc["caustics"])
    exact = {r["gamma_exact"] for r in doc["caustics"]}
    assert exact == {"-15/2", "-15/8", "15/8"}


def test_solve_elliptic_cases(capsys):
    rc, out = run(capsys, "solve", "--n", "3", "--a", "6", "--b", "3", "--elliptic")
    assert rc == 0
    doc = json.loads(out)
    assert doc["kind"] == "elliptic"
    by_case = {r["case"]: r["gamma"] for r in doc["caustics"]}
    assert by_case["d"] == pytest.approx(-3.1595918, abs=1e-6)
    assert set(by_case) <= {"a", "b", "d", "e"}


def test_solve_symmetric_ellipse(capsys):
    rc, out = run(capsys, "solve", "--n", "3", "--a", "1", "--b", "1")
    assert rc == 0
    gammas = sorted(r["gamma"] for r in json.loads(out)["caustics"])
    assert gammas[0] == pytest.approx(-gammas[1], rel=1e-12)
    assert gammas[1] == pytest.approx(0.8660254037844386, rel=1e-12)


def test_solve_output_is_byte_stable(capsys):
    _, out1 = run(capsys, "solve", "--n", "5", "--a", "6", "--b", "4")
    _, out2 = run(capsys, "solve", "--n", "5", "--a", "6", "--b", "4")
    assert out1 == out2


def test_scalar_fraction_parsing(capsys):
    rc, out = run(capsys, "solve", "--n", "4", "--a", "4/3", "--b", "2")
    assert rc == 0
    exact = {r["gamma_exact"] for r in json.loads(out)["caustics"]}
    assert "4/5" in exact and "-4/5" in exact


def test_simulate_periodic_closure(capsys):
    # a start on the 3-periodic caustic gamma_1(3, 2), chosen generically so
    # no mirror closure precedes the full period
    rc, out = run(
        capsys,
        "simulate",
        "--a", "3", "--b", "2",
        "--x0", "1.6736367831520975", "--y0", "0.36417936796794614",
        "--dx=-0.9629031000754975", "--dy=-1.6538453794454322",
        "--steps", "6",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["closure"] == {"tag": "Periodic", "n": 3, "sigma": None}
    assert doc["gamma"] == pytest.approx(2.3322714928995234, abs=1e-6)
    assert len(doc["vertices"]) == 7
    assert set(doc["arc_classes"]) <= {
        "RelativisticEllipseArc",
        "RelativisticHyperbolaArc",
    }


def test_simulate_lightlike_square(capsys):
    rc, out = run(
        capsys,
        "simulate",
        "--a", "1", "--b", "1",
        "--x0", "1", "--y0", "0",
        "--dx=-1", "--dy=-1",
        "--steps", "4",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["segment_type"] == "LightLike"
    assert doc["gamma"] == "inf"
    # a light-like square mirror-closes after two reflections
    assert doc["closure"] == {"tag": "EllipticPeriodic", "n": 2, "sigma": "flip-both"}


def test_simulate_failure_reports_step(capsys):
    rc, out = run(
        capsys,
        "simulate",
        "--a", "3", "--b", "2",
        "--x0", "1.7320508075688772", "--y0", "0",
        "--dx", "1", "--dy", "1",
        "--steps", "3",
    )
    assert rc == 3
    doc = json.loads(out)
    assert doc["error"] == "DegenerateChord" and doc["step"] == 1


def test_certify_exact_rational(capsys):
    rc, out = run(capsys, "certify", "--a", "2", "--b", "4", "--gamma", "4/3", "--n", "4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["residual"] == 0.0
    assert doc["partition"] == [4, 2]
    assert (doc["tau1"], doc["tau2"]) == (1, 1)
    assert doc["kln_ratio"] == pytest.approx(0.5, abs=1e-9)


def test_certify_snaps_caption_gamma(capsys):
    rc, out = run(capsys, "certify", "--a", "7", "--b", "5", "--gamma=-4.589", "--n", "3")
    assert rc == 0
    doc = json.loads(out)
    assert doc["partition"] == [3, 1]
    assert abs(doc["residual"]) <= 1e-8


def test_certify_rejects_nonperiodic_gamma(capsys):
    rc, out = run(capsys, "certify", "--a", "3", "--b", "2", "--gamma", "1.0", "--n", "3")
    assert rc == 4
    assert json.loads(out)["error"] == "NoCertificate"


def test_checks_suites_all_pass(capsys):
    for suite in ("discriminants", "zolotarev3", "lightlike", "table"):
        rc, out = run(capsys, "checks", "--suite", suite)
        doc = json.loads(out)
        assert rc == 0 and doc["passed"], suite


def test_domain_error_exits_2(capsys):
    rc, out = run(capsys, "solve", "--n", "2", "--a", "3", "--b", "2")
    assert rc == 2
    assert json.loads(out)["error"] == "DomainError"
    rc, out = run(capsys, "solve", "--n", "4", "--a=-1", "--b", "2")
    assert rc == 2
