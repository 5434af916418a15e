"""The final acceptance gate: nine criteria, one pass/fail line each.

Every comparison in this file is exact rational equality -- there are no
tolerances anywhere.  Each criterion prints a single summary line; a failing
criterion lists the individual checks that failed.

Criterion 7 includes the two-sided split identities for generic weight
families.  Those identities are genuinely false: the mixed product
g_beta^(1-t) o g_alpha^(t) first deviates from g at x^6 (defect
t(1-t)/2 * a*c^2 for the two-weight family), and the negated-weight product
first deviates from gbar o gbar at x^8.  The checks are implemented exactly
as stated and therefore report FAIL; see the README for the analysis.
"""

import json
from pathlib import Path

import pytest

from riordan_lab.cli import run
from riordan_lab.exprs import parse, to_text
from riordan_lab.verify import run_suite

from test_exprs import CORPUS

GOLDEN = Path(__file__).parent / "golden"

Check = "tuple[str, bool]"


def _criterion(num: int, description: str, checks) -> None:
    checks = list(checks)
    assert checks, "empty criterion"
    ok = all(flag for _, flag in checks)
    print("%s criterion %d: %s (%d checks)"
          % ("PASS" if ok else "FAIL", num, description, len(checks)))
    if not ok:
        failing = [label for label, flag in checks if not flag]
        pytest.fail("criterion %d fails on: %s" % (num, "; ".join(failing)),
                    pytrace=False)


def test_criterion_1_golden_matrices():
    _criterion(1, "printed matrices reproduced entry-for-entry",
               run_suite("matrices"))


def test_criterion_2_expansion_oracle_equivalence():
    # 25 random B, integer coefficients in [-3, 3], six terms;
    # phi in {-2, -1, 1/2, 1, 3}; all n <= 24
    _criterion(2, "B-expansion polynomials equal power-of-member coefficients",
               run_suite("theorem3"))


def test_criterion_3_composition_matrix_oracle_equivalence():
    # same sampling for the u-polynomials, plus the symbolic b1-ladder rows
    _criterion(3, "composition-matrix rows equal weighted-member coefficients",
               run_suite("bpoly"))


def test_criterion_4_theorem_identities():
    checks = []
    for name in ("theorem1", "theorem2", "theorem4", "theorem5", "theorem6",
                 "theorem7", "theorem8", "theorem9"):
        for label, flag in run_suite(name):
            checks.append(("%s: %s" % (name, label), flag))
    _criterion(4, "square-root factorization and triangle identities",
               checks)


def test_criterion_5_beta_power_rows():
    # nine rational (beta, phi) pairs to n <= 16; closed forms for R^beta
    _criterion(5, "two-parameter rows equal beta-th powers of members",
               run_suite("powers"))


def test_criterion_6_bell_flow():
    _criterion(6, "Bell-subgroup logarithm and flow (identity, Legendre, "
                  "parity, lattice-path log)", run_suite("flow"))


def test_criterion_7_infinite_product_identities():
    # The split-product and t=1 tangent checks are implemented exactly as
    # stated and are expected to FAIL: the identities are false for generic
    # weight families (first obstructions at x^6 and x^8).
    _criterion(7, "infinite-product expansions, splits, and tangents",
               run_suite("alphabeta"))


def test_criterion_8_pseudo_involution_detector():
    _criterion(8, "detector accepts every constructed member and rejects "
                  "perturbations", run_suite("detector"))


def test_criterion_9_command_line_contract():
    checks = []
    families = {"bcomp_geom": "1/(1-x)", "bcomp_one_plus_x": "1+x",
                "bcomp_catalan": "catalan"}
    for name, expr in sorted(families.items()):
        for fmt, ext in (("text", "txt"), ("csv", "csv"), ("json", "json")):
            result = run(["bcomp", "matrix", "--b", expr, "--order", "10",
                          "--format", fmt])
            want = (GOLDEN / ("%s.%s" % (name, ext))).read_text()
            checks.append(("golden %s %s" % (name, fmt),
                           result.exit_code == 0
                           and result.output + "\n" == want))
    round_trips = all(parse(to_text(parse(text))) == parse(text)
                      for text in CORPUS)
    checks.append(("parser corpus of %d expressions round trips"
                   % len(CORPUS), round_trips))
    checks.append(("exit 0 on success",
                   run(["series", "eval", "catalan"]).exit_code == 0))
    checks.append(("exit 1 on failed verification",
                   run(["verify", "alphabeta", "--order", "8"]).exit_code == 1))
    checks.append(("exit 2 on parse error",
                   run(["series", "eval", "1 +"]).exit_code == 2))
    checks.append(("exit 3 on domain error",
                   run(["bseq", "extract", "--g", "catalan"]).exit_code == 3))
    json_ok = json.loads(run(["bcomp", "matrix", "--b", "1+x", "--order", "6",
                              "--format", "json"]).output)
    checks.append(("json output carries size and num/den rows",
                   isinstance(json_ok, dict) and json_ok.get("size") == 7
                   and json_ok["rows"][0] == ["1/1"]))
    _criterion(9, "golden files, parser corpus, exit-code contract", checks)
