"""End-to-end CLI behavior: output formats, exit codes, caps."""

import json
from fractions import Fraction as F

import pytest

from weylstir.cli import main
from weylstir.identities import TEMPLATES, IdentityTemplate, TemplateInstance
from weylstir.operators import OperatorExpr, XPower
from weylstir.triangles import Triangle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_triangle_text(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "S", "--alpha", "0",
                       "--beta", "1", "--r", "0", "--n", "4")
    assert code == 0
    assert out.splitlines()[4] == "0, 1, 7, 6, 1"


def test_triangle_json_round_trips(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "E", "--alpha", "-1",
                       "--beta", "2", "--r", "2", "--n", "3", "--format", "json")
    assert code == 0
    tri = Triangle.from_json(out)
    assert tri.kind == "E"
    assert tri.row(3) == [24, 24, 0, 0]
    assert tri.to_json() == out.strip()


def test_triangle_symbolic_row(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "S", "--symbolic", "--n", "1")
    assert code == 0
    assert out.splitlines()[1] == "r, 1"


def test_triangle_csv(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "S", "--alpha", "0",
                       "--beta", "1", "--r", "0", "--n", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["1", "0,1", "0,1,1"]


def test_triangle_rejects_decimals():
    with pytest.raises(SystemExit) as exc:
        main(["triangle", "--alpha", "0.5", "--n", "3"])
    assert exc.value.code == 2


def test_triangle_accepts_slash_rationals(capsys):
    code, out, _ = run(capsys, "triangle", "--kind", "S", "--alpha", "1/2",
                       "--beta", "2", "--r=-3/2", "--n", "1")
    assert code == 0
    assert out.splitlines()[1] == "-3/2, 1"


def test_triangle_cap_and_override(capsys, monkeypatch):
    monkeypatch.delenv("WEYLSTIR_MAX_N", raising=False)
    code, _, err = run(capsys, "triangle", "--n", "65")
    assert code == 2 and "cap" in err
    monkeypatch.setenv("WEYLSTIR_MAX_N", "70")
    code, out, _ = run(capsys, "triangle", "--n", "65")
    assert code == 0
    assert len(out.splitlines()) == 66


def test_verify_pass_and_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "--template", "ttv", "--n", "6")
    assert code == 0
    assert "ttv: PASS" in out


def test_verify_bad_template_exit_two(capsys):
    code, _, err = run(capsys, "verify", "--template", "nonsense")
    assert code == 2
    assert "no template matches" in err


def test_verify_needs_selection(capsys):
    code, _, err = run(capsys, "verify")
    assert code == 2


def test_verify_cap(capsys, monkeypatch):
    monkeypatch.delenv("WEYLSTIR_MAX_N", raising=False)
    code, _, err = run(capsys, "verify", "--template", "ttv", "--n", "11")
    assert code == 2
    monkeypatch.setenv("WEYLSTIR_MAX_N", "12")
    code, _, _ = run(capsys, "verify", "--template", "ttv", "--n", "11")
    assert code == 0


def test_verify_counterexample_exit_one(capsys):
    """A deliberately false template drives the exit-1 contract."""
    broken = IdentityTemplate(
        id="selftest.broken",
        domain="WC",
        params=(),
        build=lambda p, n: [TemplateInstance(
            OperatorExpr.single(1, XPower(F(0))),
            OperatorExpr.single(2, XPower(F(0))),
        )],
        grid=lambda: [{}],
        uses_n=False,
    )
    TEMPLATES["selftest.broken"] = broken
    try:
        code, out, _ = run(capsys, "verify", "--template", "selftest.broken")
        assert code == 1
        assert "FAIL" in out
    finally:
        del TEMPLATES["selftest.broken"]


def test_verify_json_and_range(capsys):
    code, out, _ = run(capsys, "verify", "--template", "lah_triple",
                       "--range", "0..2", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] is True
    assert payload["reports"][0]["template"] == "lah_triple"
    assert payload["reports"][0]["cells"] == 3


def test_expand_coefficients(capsys):
    code, out, _ = run(capsys, "expand", "--template", "powerful.main1a",
                       "--word", "3,0", "--wordp", "2,0", "--n", "2")
    assert code == 0
    assert "coefficients for k = 0..2: [0, 1, 1]" in out


def test_expand_lah_case(capsys):
    code, out, _ = run(capsys, "expand", "--template", "cor1",
                       "--word", "1,1", "--n", "2", "--format", "latex")
    assert code == 0
    assert "coefficients for k = 0..2: [2, 4, 1]" in out
    assert "a†" in out


def test_expand_eulerian_instance(capsys):
    code, out, _ = run(capsys, "expand", "--template", "powerful2.2main1a",
                       "--word", "2,0", "--wordp", "3,0", "--n", "1",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload[0]["coefficients"] == ["0", "-2"]


def test_expand_rejects_fractional_word_for_natural_template(capsys):
    code, _, err = run(capsys, "expand", "--template", "cor1",
                       "--word", "1/2,1", "--n", "2")
    assert code == 2
    assert "natural" in err


def test_expand_missing_parameter(capsys):
    code, _, err = run(capsys, "expand", "--template", "cor1", "--n", "2")
    assert code == 2


def test_expand_ambiguous_prefix(capsys):
    code, _, err = run(capsys, "expand", "--template", "powerful", "--n", "1",
                       "--word", "1,0", "--wordp", "1,0")
    assert code == 2


def test_fixtures_exit_zero(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert out.count("OK") == 7


def test_conjecture_runs_and_reports(capsys):
    code, out, _ = run(capsys, "conjecture", "--n", "5", "--r-min", "0",
                       "--r-max", "4")
    assert code == 0
    assert "mismatches (stated range):    0" in out


def test_conjecture_json(capsys):
    code, out, _ = run(capsys, "conjecture", "--n", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["mismatches_stated_range"] == 0
    assert payload["convention_sensitive_cells"] > 0
