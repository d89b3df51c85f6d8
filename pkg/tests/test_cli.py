"""Exit codes, output shapes and JSON round-trips of the command line."""

import json

import dynkinlab.cli as cli
from dynkinlab.cli import main
from dynkinlab.coxeter import char_polys
from dynkinlab.diagram import DiagramId, build
from dynkinlab.exact import IntPoly, parse_poly
from dynkinlab.orbit import z_polynomials
from dynkinlab.report import Report


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_charpoly_json(capsys):
    code, out, _ = run(capsys, "charpoly", "E6", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    chi = parse_poly(payload["chi"], "L")
    chi_affine = parse_poly(payload["chi_affine"], "L")
    lam = IntPoly.x()
    # table row: chi * (L^2+1)(L-1) = (L^6+1)(L^3-1)
    assert chi * (lam**2 + 1) * (lam - 1) == (lam**6 + 1) * (lam**3 - 1)
    expected_chi, expected_affine = char_polys(DiagramId.parse("E6"))
    assert chi == expected_chi and chi_affine == expected_affine


def test_poincare_a1(capsys):
    code, out, _ = run(capsys, "poincare", "A1", "--terms", "5")
    assert code == 0
    assert "1, 0, 3, 0, 5" in out


def test_verify_observation_e6(capsys):
    code, out, _ = run(capsys, "verify", "mckay-observation", "E6")
    assert code == 0
    assert out.startswith("[PASS] mckay observation for E6")
    assert out.count("neighbor sum") == 6


def test_usage_exit_codes(capsys):
    assert run(capsys, "charpoly", "A3")[0] == 1  # missing k
    assert run(capsys, "cartan", "Z9")[0] == 1
    assert run(capsys, "frobnicate", "E6")[0] == 1
    assert run(capsys, "orbit", "A2")[0] == 1  # odd coxeter number
    assert run(capsys, "verify", "all", "E6")[0] == 1
    assert run(capsys, "poincare", "A1", "--terms", "0")[0] == 1


def test_usage_errors_go_to_stderr(capsys):
    _, out, err = run(capsys, "charpoly", "A3")
    assert out == ""
    assert "k" in err


def test_identity_failure_exits_2(capsys, monkeypatch):
    broken = Report("forced failure", (("never true", False),))
    monkeypatch.setattr(cli, "verify_ebeling", lambda d: broken)
    code, out, _ = run(capsys, "verify", "ebeling", "E6")
    assert code == 2
    assert "[FAIL]" in out


def test_cartan_json_round_trip(capsys):
    _, out, _ = run(capsys, "cartan", "F4dual", "--extended", "--format", "json")
    payload = json.loads(out)
    d = build(DiagramId.parse("F4dual"), extended=True)
    assert payload["labels"] == list(d.labels)
    assert tuple(tuple(row) for row in payload["matrix"]) == d.cartan.rows


def test_cartan_text(capsys):
    _, out, _ = run(capsys, "cartan", "A1", "--extended")
    assert out == "cartan matrix of A1 (extended)\na0 |  2 -2\na1 | -2  2\n"


def test_quotient_text(capsys):
    _, out, _ = run(capsys, "quotient", "G2")
    assert out == "chi / chi_affine for G2 = (1 - L + L^2) / (1 - L - L^2 + L^3)\n"


def test_zpoly_json_round_trip(capsys):
    _, out, _ = run(capsys, "zpoly", "A3", "--format", "json")
    payload = json.loads(out)
    polys = z_polynomials(build(DiagramId.parse("A3")))
    ext = build(DiagramId.parse("A3"), extended=True)
    for i, label in enumerate(ext.labels):
        assert parse_poly(payload["z_polynomials"][label]) == polys[i]


def test_molien_json(capsys):
    code, out, _ = run(capsys, "molien", "cyclic:2", "--terms", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 2
    assert payload["coefficients"] == [1, 0, 3, 0, 5]


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify", "all", "--terms", "12")
    assert code == 0
    assert "[FAIL]" not in out


def test_verify_json_shape(capsys):
    code, out, _ = run(capsys, "verify", "closed-form", "E7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["reports"][0]["checks"]
