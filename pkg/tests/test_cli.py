"""End-to-end command line tests: wiring, formats, exit codes, golden files."""

import json
from fractions import Fraction
from pathlib import Path

import pytest

from riordan_lab import bcomp
from riordan_lab.alphabeta import alpha_weights, beta_weights
from riordan_lab.cli import main, run
from riordan_lab.exprs import series_from_text
from riordan_lab.pseudo import b_from_g
from riordan_lab.riordan import (TriMatrix, matrix_from_json_dict,
                                 matrix_to_text)
from riordan_lab.series import Series

GOLDEN = Path(__file__).parent / "golden"

FAMILIES = {
    "bcomp_geom": "1/(1-x)",
    "bcomp_one_plus_x": "1+x",
    "bcomp_catalan": "catalan",
}
EXTENSIONS = {"text": "txt", "csv": "csv", "json": "json"}


@pytest.fixture(autouse=True)
def _clean_order_env(monkeypatch):
    monkeypatch.delenv("RIORDAN_LAB_ORDER", raising=False)


# golden files ----------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(FAMILIES))
@pytest.mark.parametrize("fmt", sorted(EXTENSIONS))
def test_golden_matrix_outputs(name, fmt, capsys):
    expr = FAMILIES[name]
    code = main(["bcomp", "matrix", "--b", expr, "--order", "10",
                 "--format", fmt])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.err == ""
    want = (GOLDEN / ("%s.%s" % (name, EXTENSIONS[fmt]))).read_text()
    assert captured.out == want


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_json_output_reparses_to_the_exact_matrix(name):
    result = run(["bcomp", "matrix", "--b", FAMILIES[name], "--order", "10",
                  "--format", "json"])
    assert result.exit_code == 0
    mat = matrix_from_json_dict(json.loads(result.output))
    assert mat == bcomp.u_matrix(series_from_text(FAMILIES[name], 6), 11)


# series eval -----------------------------------------------------------------

def test_series_eval_text():
    result = run(["series", "eval", "catalan", "--order", "6"])
    assert result.exit_code == 0
    assert result.output == "1, 1, 2, 5, 14, 42, 132"


def test_series_eval_csv_and_json():
    assert run(["series", "eval", "1/(1-x)", "--order", "3",
                "--format", "csv"]).output == "1/1,1/1,1/1,1/1"
    data = json.loads(run(["series", "eval", "catalan", "--order", "4",
                           "--format", "json"]).output)
    assert data == {"order": 4, "coeffs": ["1/1", "1/1", "2/1", "5/1", "14/1"]}


def test_order_env_variable(monkeypatch):
    monkeypatch.setenv("RIORDAN_LAB_ORDER", "3")
    assert run(["series", "eval", "geom"]).output == "1, 1, 1, 1"
    # explicit flag wins over the environment
    assert run(["series", "eval", "geom", "--order", "1"]).output == "1, 1"


def test_invalid_order_env_exits_with_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("RIORDAN_LAB_ORDER", "three")
    with pytest.raises(SystemExit) as info:
        run(["series", "eval", "geom"])
    assert info.value.code == 2
    assert "RIORDAN_LAB_ORDER" in capsys.readouterr().err


# matrix-building verbs -------------------------------------------------------

def test_riordan_build_pascal_two_ways():
    from math import comb
    want = matrix_to_text(TriMatrix.from_entry_fn(
        5, lambda n, m: Fraction(comb(n, m)))).rstrip("\n")
    assert run(["riordan", "build", "--b", "1", "--order", "4"]).output == want
    assert run(["riordan", "build", "--g", "1/(1-x)",
                "--order", "4"]).output == want


def test_riordan_build_distinct_f():
    result = run(["riordan", "build", "--g", "1/(1-x)", "--f", "1+x",
                  "--order", "3"])
    assert result.exit_code == 0
    assert result.output.splitlines()[0].strip() == "1"


def test_flow_log_of_pascal_is_identity():
    result = run(["flow", "log", "--g", "1/(1-x)", "--order", "8"])
    assert result.output == matrix_to_text(TriMatrix.identity(9)).rstrip("\n")


def test_bseq_extract_round_trip():
    result = run(["bseq", "extract", "--g", "1/(1-x)", "--order", "8"])
    assert result.exit_code == 0
    got = [Fraction(tok) for tok in result.output.split(", ")]
    want = b_from_g(Series.geometric(8, 1))
    assert got == [want.coeff(k) for k in range(want.order + 1)]


def test_bexp_poly_rows():
    result = run(["bexp", "poly", "--b", "1/(1-x)", "--order", "4"])
    lines = result.output.splitlines()
    assert lines[0] == "0: 1"
    assert lines[1] == "1: phi"
    assert lines[2] == "2: 1/2*phi + 1/2*phi^2"
    assert len(lines) == 5


def test_alphabeta_expand_weights():
    result = run(["alphabeta", "expand", "--g", "x * catalan",
                  "--order", "6"])
    lines = result.output.splitlines()
    assert lines[0].startswith("alpha:") and lines[1].startswith("beta:")
    g = series_from_text("x * catalan", 6)
    alpha = [Fraction(t) for t in lines[0].split(":", 1)[1].split(", ")]
    beta = [Fraction(t) for t in lines[1].split(":", 1)[1].split(", ")]
    assert alpha == alpha_weights(g)
    assert beta == beta_weights(g)


# verify ----------------------------------------------------------------------

def test_verify_passing_suite():
    result = run(["verify", "theorem5"])
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert all(line.startswith("ok") for line in lines)
    assert lines[-1] == "ok"


def test_verify_failing_suite_is_reported_not_hidden():
    result = run(["verify", "alphabeta", "--order", "8"])
    assert result.exit_code == 1
    lines = result.output.splitlines()
    assert lines[-1] == "FAIL"
    failing = [ln for ln in lines if ln.startswith("FAIL ")]
    assert len(failing) == 3  # split product, negated product, t=1 tangents


def test_verify_rejects_unknown_suite():
    with pytest.raises(SystemExit) as info:
        run(["verify", "nonsense"])
    assert info.value.code == 2


# exit codes and stream routing -----------------------------------------------

def test_exit_code_zero_routes_to_stdout(capsys):
    code = main(["series", "eval", "x", "--order", "2"])
    captured = capsys.readouterr()
    assert code == 0
    assert captured.out == "0, 1, 0\n"
    assert captured.err == ""


def test_parse_error_exit_two(capsys):
    result = run(["series", "eval", "1 +"])
    assert result.status == "parse-error"
    assert result.exit_code == 2
    assert "expected" in result.output
    code = main(["series", "eval", "1 +"])
    captured = capsys.readouterr()
    assert code == 2
    assert captured.out == ""
    assert captured.err.startswith("parse error")


def test_domain_error_exit_three(capsys):
    result = run(["bseq", "extract", "--g", "catalan", "--order", "8"])
    assert result.status == "domain-error"
    assert result.exit_code == 3
    assert "NotPseudoInvolution" in result.output
    code = main(["series", "eval", "1/x"])
    captured = capsys.readouterr()
    assert code == 3
    assert captured.err.startswith("BadConstantTerm")


def test_usage_errors_exit_two():
    for argv in (["bogus"],
                 ["series", "eval", "x", "--order", "-3"],
                 ["riordan", "build", "--b", "1", "--phi", "x"],
                 ["bcomp", "matrix"]):
        with pytest.raises(SystemExit) as info:
            run(argv)
        assert info.value.code == 2, argv


def test_flag_conflicts_are_usage_errors():
    for argv in (["riordan", "build", "--b", "1", "--g", "1/(1-x)"],
                 ["riordan", "build", "--b", "1", "--f", "1+x"],
                 ["flow", "log", "--b", "1", "--g", "1/(1-x)"]):
        with pytest.raises(SystemExit) as info:
            run(argv)
        assert info.value.code == 2, argv
