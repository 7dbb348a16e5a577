"""Counting polynomials, closed forms, recurrences and named sequences."""

import pytest
from hypothesis import given, strategies as st

from heischar import counting
from heischar.counting import (
    IntPolynomial,
    binom,
    c_invariant_heis_count,
    catalan,
    closed_form,
    degree_count,
    delannoy,
    fibonacci,
    narayana,
    poly,
    sequence_values,
    series_coeffs,
    tech_lem_count,
)
from heischar.errors import NonIntegralDivision, UnknownFamily

X = IntPolynomial.from_list([0, 1])
ONE_PLUS_X = IntPolynomial.from_list([1, 1])

small_polys = st.lists(st.integers(-9, 9), max_size=6).map(IntPolynomial.from_list)


# ---------------------------------------------------------------- polynomials
def test_polynomial_normalization():
    with pytest.raises(ValueError):
        IntPolynomial((1, 2, 0))
    assert IntPolynomial.from_list([1, 2, 0, 0]) == IntPolynomial((1, 2))
    assert IntPolynomial.from_list([]) == IntPolynomial.zero()
    assert IntPolynomial.const(0) == IntPolynomial.zero()
    assert IntPolynomial.x_power(3, 2).coeffs == (0, 0, 0, 2)
    assert IntPolynomial.x_power(2, 0) == IntPolynomial.zero()


def test_polynomial_degree_and_leading():
    assert IntPolynomial.zero().degree == -1
    assert IntPolynomial.zero().leading == 0
    assert IntPolynomial.const(5).degree == 0
    p = IntPolynomial.from_list([1, 0, 7])
    assert p.degree == 2 and p.leading == 7


def test_polynomial_arithmetic():
    p = IntPolynomial.from_list([1, 2])
    q = IntPolynomial.from_list([-1, -2])
    assert p + q == IntPolynomial.zero()
    assert p - p == IntPolynomial.zero()
    assert (p * p).coeffs == (1, 4, 4)
    assert p.scale(3).coeffs == (3, 6)
    assert p.scale(0) == IntPolynomial.zero()
    assert p.shift_mul(2).coeffs == (0, 0, 1, 2)
    assert IntPolynomial.zero().shift_mul(4) == IntPolynomial.zero()
    assert p(10) == 21
    assert IntPolynomial.zero()(99) == 0


@given(small_polys, small_polys, small_polys, st.integers(-5, 5))
def test_polynomial_ring_axioms(p, q, r, x):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_divexact_x_plus_1():
    p = ONE_PLUS_X * IntPolynomial.from_list([3, 0, 5])
    assert p.divexact_x_plus_1().coeffs == (3, 0, 5)
    assert IntPolynomial.zero().divexact_x_plus_1() == IntPolynomial.zero()
    with pytest.raises(NonIntegralDivision):
        IntPolynomial.from_list([1, 1, 1]).divexact_x_plus_1()


def test_in_q_rewrites_basis():
    he4 = poly("he", 4)
    assert he4.in_q().coeffs == (0, -1, 0, 2)  # He_4 = 2q^3 - q
    for q in (2, 3, 5):
        assert he4.in_q()(q) == he4(q - 1)
    assert he4.in_q()(3) == 51


def test_is_palindromic():
    assert IntPolynomial.from_list([1, 5, 5, 1]).is_palindromic()
    assert not IntPolynomial.from_list([1, 5, 6, 2]).is_palindromic()
    assert IntPolynomial.zero().is_palindromic()


# --------------------------------------------------------- small combinatorics
def test_binom_extension():
    assert binom(5, 2) == 10
    assert binom(5, -1) == 0
    assert binom(3, 4) == 0
    assert binom(-1, 0) == 0


def test_auxiliary_numbers():
    assert counting.stirling2(4, 2) == 7
    assert counting.assoc_stirling2(4, 2) == 3
    assert counting.assoc_stirling2(4, 4) == 0
    assert narayana(0, 0) == 1
    assert narayana(4, 2) == 6
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert narayana(n, k) == binom(n, k) * binom(n, k - 1) // n
        assert sum(narayana(n, k) for k in range(n + 1)) == catalan(n)
        assert poly("cat", n)(1) == catalan(n)
    assert [fibonacci(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_delannoy_pinned():
    assert delannoy("D", 1, 1) == 3
    assert delannoy("D", 2, 2) == 13
    assert delannoy("Dp", 1, 3) == 15
    assert delannoy("Dpp", 2, 2) == 2
    for a in range(6):
        assert delannoy("D", a, 0) == 1
        assert delannoy("D", 0, a) == 1
    assert delannoy("D", -1, 2) == 0
    assert delannoy("Dp", 2, -1) == 0
    with pytest.raises(UnknownFamily):
        delannoy("E", 1, 1)


def test_delannoy_recurrence_and_symmetry():
    for a in range(1, 7):
        for b in range(1, 7):
            assert delannoy("D", a, b) == (delannoy("D", a - 1, b)
                                           + delannoy("D", a, b - 1)
                                           + delannoy("D", a - 1, b - 1))
            assert delannoy("D", a, b) == delannoy("D", b, a)
    assert [delannoy("Dp", 1, k) for k in range(7)] == [1, 3, 7, 15, 30, 58, 109]


# -------------------------------------------------------------- family polys
def test_poly_pinned_coefficients():
    expected = {
        ("he", 3): (1, 3, 1),
        ("he", 4): (1, 5, 6, 2),
        ("inv", 2): (0, 1),
        ("inv", 3): (0, 1, 1),
        ("alt_he", 2): (1,),
        ("alt_he", 3): (1, 2, 1),
        ("del", 4): (1, 5, 5, 1),
        ("cat", 4): (1, 6, 6, 1),
        ("bell", 4): (1, 6, 7, 1),
        ("fe", 4): (0, 0, 3, 1),
        ("alt_bell", 4): (1, 5, 2),
        ("alt_cat", 4): (1, 5, 1),
        ("alt_del", 4): (1, 4, 1),
        ("pre_he", 3): (1, 3, 2),
        ("pre_in", 4): (0, 1, 1, 1),
    }
    for (family, n), coeffs in expected.items():
        assert poly(family, n).coeffs == coeffs, (family, n)


def test_poly_edge_indices_and_errors():
    assert poly("del", 0) == IntPolynomial.zero()
    assert poly("he", 0) == IntPolynomial.zero()
    assert poly("inv", 1) == IntPolynomial.zero()
    assert poly("bell", 0) == IntPolynomial.const(1)
    assert poly("fe", 0) == IntPolynomial.const(1)
    assert poly("fe", 1) == IntPolynomial.zero()
    with pytest.raises(ValueError):
        poly("alt_he", 1)
    with pytest.raises(ValueError):
        poly("alt_bell", 0)
    with pytest.raises(UnknownFamily):
        poly("zeta", 3)


@pytest.mark.parametrize("family", counting.CLOSED_FORM_FAMILIES)
def test_closed_form_matches_poly(family):
    start = 1 if family.startswith("alt_") else 0
    for n in range(start, 13):
        assert closed_form(family, n) == poly(family, n), (family, n)


@pytest.mark.parametrize("family", ("del", "pre_he", "pre_in"))
@pytest.mark.parametrize("x", (1, 2, 3))
def test_series_matches_poly(family, x):
    assert series_coeffs(family, x, 10) == [poly(family, n)(x) for n in range(10)]


def test_series_unknown_family():
    with pytest.raises(UnknownFamily):
        series_coeffs("he", 1, 5)


# ------------------------------------------------------ structural identities
def test_he_and_in_structure():
    x2 = IntPolynomial.x_power(2)
    for n in range(13):
        assert poly("he", n) == poly("pre_he", n) - x2 * poly("pre_he", n - 2)
        assert poly("inv", n) == X * (poly("pre_in", n - 1) + poly("pre_in", n - 2))
    for n in range(4, 13):
        assert poly("inv", n) == (X * poly("inv", n - 1)
                                  + X * ONE_PLUS_X * poly("inv", n - 3))


def test_bell_recurrence():
    for n in range(11):
        total = IntPolynomial.zero()
        for k in range(n + 1):
            total = total + (IntPolynomial.x_power(k, binom(n, k))
                             * poly("bell", n - k))
        assert poly("bell", n + 1) == total


def test_alternating_group_identities():
    for n in range(11):
        bell = IntPolynomial.zero()
        cat = IntPolynomial.zero()
        for k in range(n + 1):
            bell = bell + (poly("fe", k).scale(binom(n, k))
                           * counting._one_plus_x_pow(n - k))
            if 2 * k <= n:
                cat = cat + (IntPolynomial.x_power(k, catalan(k) * binom(n, 2 * k))
                             * counting._one_plus_x_pow(n - 2 * k))
        assert poly("bell", n + 1) == bell
        assert poly("cat", n + 1) == cat


def test_alt_bell_alternate_form():
    for n in range(11):
        total = IntPolynomial.zero()
        for k in range(n + 1):
            numer = IntPolynomial.x_power(k) + X.scale((-1) ** k)
            total = total + (numer.divexact_x_plus_1().scale(binom(n, k))
                             * poly("bell", n - k))
        assert poly("alt_bell", n + 1) == total


def test_palindromic_families():
    for n in range(1, 13):
        for family in ("cat", "del", "alt_cat", "alt_del"):
            assert poly(family, n).is_palindromic(), (family, n)


def test_nonnegative_coefficients():
    for n in range(13):
        for family in ("he", "inv"):
            assert all(c >= 0 for c in poly(family, n).coeffs), (family, n)
        for family in ("alt_bell", "alt_cat", "alt_del"):
            if n >= 1:
                assert all(c >= 0 for c in poly(family, n).coeffs), (family, n)
        if n >= 2:
            assert all(c >= 0 for c in poly("alt_he", n).coeffs), n


def test_signed_evaluations():
    # evaluations at x = -1 collapse to signed Catalan / period-four patterns
    assert [poly("cat", n)(-1) for n in range(13)] \
        == [1, 1, 0, -1, 0, 2, 0, -5, 0, 14, 0, -42, 0]
    for n in range(13):
        if n >= 2 and n % 2 == 0:
            assert poly("cat", n)(-1) == 0
            assert poly("del", n)(-1) == 0
        elif n % 2 == 1:
            m = (n - 1) // 2
            assert poly("cat", n)(-1) == (-1) ** m * catalan(m)
            assert poly("del", n)(-1) == (-1) ** m
    # complementary-count identity linking bell and fe at x = -1
    for n in range(1, 13):
        assert poly("bell", n)(-1) == poly("fe", n - 1)(-1)


def test_leading_coefficients_are_fibonacci():
    for n in range(1, 11):
        assert poly("he", n + 1).leading == fibonacci(n)
        assert poly("pre_he", n).leading == fibonacci(n)


# ------------------------------------------------------------ derived counters
def test_degree_count_pinned():
    assert degree_count(3, 0, as_polynomial=True).coeffs == (1, 2, 1)
    assert degree_count(3, 1, as_polynomial=True).coeffs == (0, 1)
    assert degree_count(4, 1, as_polynomial=True).coeffs == (0, 2, 3, 1)
    assert degree_count(4, 1, q=2) == 6
    assert degree_count(4, 0, q=2) == 8
    with pytest.raises(ValueError):
        degree_count(1, 0, q=2)
    with pytest.raises(ValueError):
        degree_count(4, -1, q=2)
    with pytest.raises(ValueError):
        degree_count(4, 1)  # needs q when not returning a polynomial


def test_degree_count_sums_to_he():
    for n in range(2, 9):
        total = IntPolynomial.zero()
        for e in range(n):
            total = total + degree_count(n, e, as_polynomial=True)
        assert total == poly("he", n)


def test_c_invariant_heis_count():
    for q in (2, 3, 4, 5):
        x = q - 1
        assert c_invariant_heis_count(1, q) == 0
        assert c_invariant_heis_count(2, q) == x
        assert c_invariant_heis_count(3, q) == x * (x + 1)
        for n in range(1, 11):
            both = {c_invariant_heis_count(n, q, m)
                    for m in ("compositions", "recurrence")}
            assert both == {poly("inv", n)(x)}, (n, q)
    with pytest.raises(ValueError):
        c_invariant_heis_count(0, 2)
    with pytest.raises(ValueError):
        c_invariant_heis_count(3, 2, "table")


def test_tech_lem_count():
    assert [(d, q, tech_lem_count(d, q)) for d, q in
            [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]] \
        == [(1, 2, 1), (1, 3, 2), (2, 2, 0), (2, 3, 4), (3, 2, 1), (3, 3, 24)]
    with pytest.raises(ValueError):
        tech_lem_count(0, 2)
    for d in range(1, 9):
        for q in (2, 3, 4, 5, 7):
            assert tech_lem_count(d, q) >= 0  # integral and nonnegative


# --------------------------------------------------------------- named tables
def test_sequence_values_pinned():
    expected = {
        "fibonacci": [0, 1, 1, 2, 3, 5, 8, 13],
        "pell": [0, 1, 2, 5, 12, 29, 70, 169],
        "del_q3": [0, 1, 3, 11, 39, 139, 495, 1763],
        "he_q2": [1, 2, 5, 14, 38, 104, 284, 776],
        "dp_row1": [1, 3, 7, 15, 30, 58, 109, 201],
        "dp_row1_diff": [1, 3, 6, 12, 23, 43, 79, 143],
        "bell_q2": [1, 1, 2, 5, 15, 52, 203, 877],
        "catalan_q2": [1, 1, 2, 5, 14, 42, 132, 429],
        "fe_q2": [1, 0, 1, 1, 4, 11, 41, 162],
        "alt_cat_q2": [1, 2, 7, 20, 66, 212, 715, 2424],
        "alt_del_q2": [0, 1, 2, 6, 14, 35, 84, 204],
        "alt_bell_even_diff": [0, 1, 3, 13, 55, 256, 1274, 6791],
        "alt_bell_odd_diff": [1, 2, 7, 24, 96, 418, 1989, 10216],
    }
    assert set(expected) == set(counting.SEQUENCES)
    for name, values in expected.items():
        assert sequence_values(name, 8) == values, name
    with pytest.raises(UnknownFamily):
        sequence_values("lucas", 5)
