"""Composition triangles <B> and their closed-form families."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan_lab import bcomp as B
from riordan_lab.fixtures import load_matrix
from riordan_lab.pseudo import g_from_b
from riordan_lab.riordan import (RiordanPair, col_gf, diag_up_poly, row_poly)
from riordan_lab.series import Poly, Series

bfun_lists = st.lists(st.integers(-3, 3), min_size=1, max_size=5)
small_fracs = st.fractions(min_value=-2, max_value=2, max_denominator=3)


# ---------------------------------------------------------------------------
# the lattice-path series R and its triangles
# ---------------------------------------------------------------------------

def test_lattice_path_series_values():
    r = B.rna_series(1, 12)
    assert r.coeffs == (1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283)


def test_lattice_path_pair_matrix():
    r = B.rna_series(1, 6)
    assert RiordanPair(r, r).matrix(7) == load_matrix("rna_matrix")


def test_lattice_path_functional_equation():
    phi = Fraction(5, 2)
    g = B.rna_series(phi, 12)
    inner = Series.one(12) - g.x_mul(2).truncate(12)
    assert g == Series.one(12) + (g.x_mul(1).truncate(12) * phi) * inner.inverse()


def test_beta_variant_is_the_scaled_weight_member():
    g = B.rna_series(Fraction(7, 2), 12, beta=3)
    assert g == g_from_b(Series.geometric(6, 3), Fraction(7, 2), 12)


def test_beta_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        B.rna_series(1, 5, beta=0)


def test_composition_matrix_and_row_polys():
    mat = B.u_matrix(Series.geometric(5, 1), 11)
    assert mat == load_matrix("comp_matrix_geom")
    for n in range(11):
        assert B.rna_row_poly(n) == row_poly(mat, n)


def test_scaled_weight_rows():
    beta = Fraction(2, 3)
    mat = B.u_matrix(Series.geometric(5, 1), 11)
    mat_b = B.u_matrix(Series.geometric(5, beta), 11)
    for n in range(11):
        assert B.rna_beta_row_poly(n, beta) == row_poly(mat_b, n)
    assert B.scale_entries(mat, beta) == mat_b


@given(bfun_lists, small_fracs)
def test_entry_scaling_law(coeffs, beta):
    size = 8
    bf = Series(coeffs, size)
    scaled = Series([c * beta ** k for k, c in enumerate(bf.coeffs)], size)
    assert B.u_matrix(scaled, size) == B.scale_entries(B.u_matrix(bf, size),
                                                       beta)


def test_row_polys_evaluate_to_series_coefficients():
    for phi in (1, 2, Fraction(1, 2), -3):
        rp = B.rna_series(phi, 10)
        for n in range(11):
            assert B.rna_row_poly(n)(phi) == rp.coeff(n)


def test_column_and_narayana_route_checks():
    assert B.rna_column_check(3, 12)
    assert B.rna_row_via_narayana_check(9)


# ---------------------------------------------------------------------------
# Narayana ladder
# ---------------------------------------------------------------------------

def test_narayana_matrix_and_gf():
    assert B.narayana_matrix(7) == load_matrix("narayana_matrix")
    assert B.narayana_gf_check(8)


def test_down_diagonals_give_row_convolutions():
    for n in range(1, 6):
        assert B.theorem4_check(n, 12)


def test_up_diagonals_are_narayana_rows():
    for n in range(6):
        assert B.theorem5_check(n)


# ---------------------------------------------------------------------------
# powers of R and the two-parameter rows
# ---------------------------------------------------------------------------

def test_power_coefficient_closed_form():
    for beta in (1, 2, 3, Fraction(1, 2)):
        power = B.rna_series(1, 8).pow_scalar(Fraction(beta))
        for n in range(9):
            assert B.rna_power_coeff(beta, n) == power.coeff(n)


def test_power_polynomial_symbolic():
    z = Poly.var("z")
    r = B.rna_series(1, 10)
    for n in range(9):
        assert B.q_poly(r, n) == B.rna_power_coeff(z, n)


def test_two_parameter_rows():
    bf = Series([1, 2, -1, 3], 4)
    phi = Fraction(5, 4)
    for beta in (1, 2, Fraction(3, 2)):
        power = g_from_b(bf, phi, 9).pow_scalar(Fraction(beta))
        for n in range(10):
            assert B.u_beta_poly(bf, n, beta)(phi) == power.coeff(n)
    for n in range(10):
        assert B.u_beta_poly(bf, n, 1) == B.u_poly(bf, n)


# ---------------------------------------------------------------------------
# B = 1 + x
# ---------------------------------------------------------------------------

def test_one_plus_x_matrix_rows_entries():
    mat = B.u_matrix(B.one_plus_x_bfun(5), 11)
    assert mat == load_matrix("bcomp_one_plus_x")
    for n in range(11):
        assert B.one_plus_x_row_poly(n) == row_poly(mat, n)
        for m in range(n + 1):
            assert B.one_plus_x_entry(n, m) == mat.entry(n, m)


def test_one_plus_x_series_and_equation():
    phi = Fraction(3, 2)
    g = B.one_plus_x_series(phi, 12)
    assert g == g_from_b(Series([1, 1], 6), phi, 12)
    assert g == Series.one(12) + (g.x_mul(1).truncate(12) * phi) * (
        Series.one(12) + g.x_mul(2).truncate(12))


def test_one_plus_x_diagonals_and_columns():
    for n in range(4):
        assert B.one_plus_x_down_diag_check(n, 8)
    big = B.u_matrix(B.one_plus_x_bfun(10), 21)
    for n in range(9):
        assert B.one_plus_x_up_diag_poly(n) == diag_up_poly(big, 2 * n)
    for m in range(11):
        assert B.one_plus_x_column_series(m, 20) == col_gf(big, m)


def test_t_polys_and_theorem6():
    assert B.t_poly(0) == Poly("x", [1])
    assert B.t_poly(1) == Poly("x", [1, 2])
    assert B.t_poly(2) == Poly("x", [1, 5, 5])
    assert B.t_poly_gf_check(8)
    for n in range(6):
        assert B.t_from_narayana_check(n)
    for n in range(5):
        assert B.theorem6_check(n, 14)


# ---------------------------------------------------------------------------
# B = C(x)
# ---------------------------------------------------------------------------

def test_catalan_weight_matrix_rows_entries():
    mat = B.u_matrix(Series.catalan(5), 11)
    assert mat == load_matrix("bcomp_catalan")
    for n in range(11):
        assert B.catalan_b_row_poly(n) == row_poly(mat, n)
        for m in range(n + 1):
            assert B.catalan_b_entry(n, m) == mat.entry(n, m)


def test_catalan_weight_series_and_equation():
    for phi in (1, 2, Fraction(1, 2), -2):
        assert B.catalan_b_series(phi, 12) == g_from_b(Series.catalan(6),
                                                       phi, 12)
    phi = Fraction(1, 2)
    g = B.catalan_b_series(phi, 10)
    comp = Series.catalan(10).compose(g.x_mul(2).truncate(10))
    assert g == Series.one(10) + (g.x_mul(1).truncate(10) * phi) * comp


def test_half_matrix_and_row_identities():
    assert B.half_matrix(8) == load_matrix("half_comp_matrix")
    for n in range(1, 7):
        assert B.theorem7_check(n)
    assert B.f_gf_check(8)


def test_down_diagonal_supposition_low_rows():
    for n in range(1, 4):
        assert B.down_diag_supposition_check(n, 6)


def test_catalan_members_have_appell_tails():
    for phi in (1, 2, Fraction(1, 2)):
        assert B.catalan_b_appell_check(phi, 8)


def test_appell_characterization():
    assert B.is_appell_bfun(Series.catalan(6), 10)
    cat2 = Series([Fraction(B.catalan_number(k) * 2 ** k) for k in range(7)])
    assert B.is_appell_bfun(cat2, 10)
    bad = Series([1, 1, 3, 5, 14, 42, 132])  # b_2 != C_2 * b_1^2
    assert not B.is_appell_bfun(bad, 10)
    assert not B.is_appell_bfun(Series.geometric(6, 1), 10)


def test_row_sum_identity_from_the_characterization():
    bb = Series.catalan(8)
    for n in range(5):
        lhs = sum(bb.coeff(n - m) * comb(2 * n + 1, 2 * m + 1)
                  for m in range(n + 1))
        rhs = sum(B.u_entry(bb, 2 * n + 2, q) for q in range(2 * n + 3))
        assert lhs == rhs


# ---------------------------------------------------------------------------
# exponential-pair diagonals
# ---------------------------------------------------------------------------

def test_exponential_pair_entries_two_routes():
    for bf in (Series.geometric(9, 1), Series([1, 1], 9), Series.catalan(9),
               Series([1, 2, -1, 3, 0, 1, 4, -2, 1, 5])):
        assert B.theorem9_check(bf, 6)
        em = RiordanPair(Series.one(9), bf).exp_matrix(10)
        for n in range(10):
            for m in range(n + 1):
                assert B.exp_pair_entry(bf, n, m) == em.entry(n, m)
                assert B.exp_pair_entry_partitions(bf, n, m) == em.entry(n, m)


@given(bfun_lists)
def test_exponential_diagonal_identity_random(coeffs):
    bf = Series(coeffs, 8)
    assert B.theorem9_check(bf, 4)


def test_exponential_diagonal_displays():
    for which in ("geom", "one_plus_x", "catalan"):
        assert B.exp_diag_display_check(6, which)


# ---------------------------------------------------------------------------
# alternative row formulas
# ---------------------------------------------------------------------------

def test_rows_via_convolution_polys():
    for bf in (Series.geometric(6, 1), Series([1, 1], 6), Series.catalan(6),
               Series([1, -2, 3, Fraction(1, 2), 0, 2, 1])):
        for n in range(12):
            assert B.u_row_via_conv(bf, n) == B.u_poly(bf, n)


def test_exponential_weight_rows():
    efun = Series([Fraction(1, B.factorial(k)) for k in range(8)])
    for n in range(14):
        assert B.exp_bfun_row_poly(n) == B.u_poly(efun, n)


def test_cbar_series_values():
    cb = B.cbar_series(8)
    assert cb.coeff(0) == 1
    assert cb.coeff(2) == Fraction(1, 2)
    assert cb.coeff(4) == Fraction(1, 12)
