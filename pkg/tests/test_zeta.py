from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzeta import curve as cv
from hyperzeta import gf
from hyperzeta import zeta as zt
from hyperzeta.errors import NotSmooth


def test_route_equality(fixture):
    c = fixture.curve
    summary = cv.splitting_summary(c, 4)
    counts = [cv.count_points_from_splitting(c, n, summary) for n in range(1, 5)]
    euler = zt.zeta_euler_product(c, 4, summary)
    assert zt.zeta_from_counts(c, 4, counts=counts) == euler
    L = zt.l_polynomial(c, "chi", summary=summary)
    assert L.series(4) * zt.zeta_p1(c.q, 4) == euler
    assert all(x.denominator == 1 and x >= 0 for x in euler.coeffs)


def test_direct_counts_in_zeta(small_fixture):
    c = small_fixture.curve
    assert zt.zeta_from_counts(c, 4) == zt.zeta_euler_product(c, 4)


def test_quotient_equals_chi(fixture):
    c = fixture.curve
    assert zt.l_polynomial(c, "quotient") == zt.l_polynomial(c, "chi")


def test_expected_L(fixture):
    assert list(zt.l_polynomial(fixture.curve).coeffs) == fixture.expected["L"]


def test_functional_equation_and_hasse(fixture):
    L = zt.l_polynomial(fixture.curve)
    assert L.functional_equation_holds()
    assert zt.hasse_bound_holds(L)
    assert abs(L.a_q) <= math.isqrt(4 * fixture.curve.q)


@pytest.mark.parametrize("n", range(5))
def test_chi_series_vs_exhaustive(small_fixture, n):
    c = small_fixture.curve
    assert zt.chi_degree_sum(c, n) == zt.chi_degree_sum_exhaustive(c, n)


def test_chi_sums_are_L(fixture):
    c = fixture.curve
    L = fixture.expected["L"] + [0, 0]
    assert [zt.chi_degree_sum(c, n) for n in range(5)] == L[:5]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_mobius(p):
    r = zt.mobius_check(p, 4)
    assert r["ok"] and r["delta"] and not r["mismatches"]


@pytest.mark.parametrize("n", range(5))
def test_sym_identities(fixture, n):
    c = fixture.curve
    summary = cv.splitting_summary(c, 4)
    counts = [cv.count_points_from_splitting(c, k, summary) for k in range(1, n + 1)]
    r = zt.sym_identity_check(c, n, counts=counts)
    assert r["ok"], r


def test_burnside_small_values():
    # Sym^2 of a 3-element set has 6 points; Sym^3 of a 2-element set has 4
    assert zt.sym_count_burnside([3, 3], 2) == 6
    assert zt.sym_count_burnside([2, 2, 2], 3) == 4


@st.composite
def genus_two(draw):
    p = draw(st.sampled_from([3, 5, 7]))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=5, max_size=5))
    try:
        return cv.validate_curve(p, gf.Poly(p, coeffs + [1]))
    except NotSmooth:
        return None


@settings(max_examples=25, deadline=None)
@given(genus_two())
def test_genus_two_routes(c):
    if c is None:
        return
    Lq, Lc = zt.l_polynomial(c, "quotient"), zt.l_polynomial(c, "chi")
    assert Lq == Lc and Lc.genus == 2
    assert Lc.functional_equation_holds()
