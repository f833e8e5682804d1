from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzeta import curve as cv
from hyperzeta import gf
from hyperzeta.errors import BadDegree, BudgetExceeded, EvenCharacteristic, InsufficientSummaryDepth, NotMonic, NotSmooth


def test_validation_errors():
    with pytest.raises(EvenCharacteristic):
        cv.validate_curve(2, "x^3+x+1")
    with pytest.raises(BadDegree):
        cv.validate_curve(5, "x^4+1")
    with pytest.raises(NotMonic):
        cv.validate_curve(5, "2x^3+1")
    with pytest.raises(NotSmooth):
        cv.validate_curve(5, "x^3")


def test_cross_route_counts(fixture):
    c = fixture.curve
    summary = cv.splitting_summary(c, 4)
    for n in range(1, 5):
        if c.p**n > cv.DEFAULT_BUDGET:
            with pytest.raises(BudgetExceeded):
                cv.count_points_direct(c, n)
            continue
        assert cv.count_points_direct(c, n) == cv.count_points_from_splitting(c, n, summary)


@pytest.mark.slow
def test_cross_route_counts_beyond_default_budget():
    c = cv.validate_curve(37, "x^3+5x")
    summary = cv.splitting_summary(c, 4)
    assert cv.count_points_direct(c, 3, budget=10**5) == cv.count_points_from_splitting(c, 3, summary) == 50258


def test_closed_point_totals(fixture):
    c = fixture.curve
    s = cv.splitting_summary(c, 4)
    for d in range(1, 5):
        assert sum(s.counts[d]) == gf.count_irreducibles(c.p, d) + (d == 1)
    if c.p == 5:
        assert [sum(s.counts[d]) for d in range(1, 5)] == [6, 10, 40, 150]
    with pytest.raises(InsufficientSummaryDepth):
        s.require(5)


def test_a_q_is_inert_minus_split(fixture):
    c = fixture.curve
    r, s, i = cv.splitting_summary(c, 1).counts[1]
    assert i - s == c.q + 1 - cv.count_points_direct(c, 1)


def test_fiber_structure(small_fixture):
    c = small_fixture.curve
    for pt in cv.closed_points(c, 3):
        kind = cv.splitting_type(c, pt)
        fib = cv.fiber(c, pt)
        if kind is cv.Splitting.RAMIFIED:
            assert [(f.label, f.degree, f.ramification, f.inertia) for f in fib] == [("Sole", pt.degree, 2, 1)]
        elif kind is cv.Splitting.SPLIT:
            assert [(f.label, f.degree) for f in fib] == [("Y", pt.degree), ("YBar", pt.degree)]
            y, ybar = fib
            assert y.y == -ybar.y and y.y * y.y == gf.ext_eval(pt.minpoly, c.f)
            assert y.y.coeffs < ybar.y.coeffs
        else:
            assert [(f.label, f.degree, f.inertia) for f in fib] == [("Sole", 2 * pt.degree, 2)]


def test_point_table_ids(small_fixture):
    c = small_fixture.curve
    table = cv.point_table(c, 3)
    assert table.point(0).minpoly is None
    for i in range(len(table)):
        pt = table.point(i)
        assert table.index_of(pt.minpoly) == i
        assert table.splitting(i) is cv.splitting_type(c, pt)
    deg2 = [table.point(i).minpoly for i in table.indices_of_degree(2)]
    assert deg2 == sorted(deg2)


def test_riemann_hurwitz(fixture):
    rh = cv.riemann_hurwitz_check(fixture.curve)
    assert rh["ok"] and rh["factors_of_f_recovered"]


def test_extension_tallies_match_identities(small_fixture):
    c = small_fixture.curve
    summary = cv.splitting_summary(c, 3)
    for n in (1, 2, 3):
        pts = cv.count_points_direct(c, n)
        r, s, i = cv.tallies_from_identities(c, n, pts, summary)
        assert cv.extension_tallies(c, n) == (r, s, i)
        assert r + s + i == c.q**n + 1 and 2 * s + r == pts


@st.composite
def random_curves(draw):
    p = draw(st.sampled_from([3, 5, 7, 11, 13]))
    deg = draw(st.sampled_from([3, 5]))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=deg, max_size=deg))
    f = gf.Poly(p, coeffs + [1])
    try:
        return cv.validate_curve(p, f)
    except NotSmooth:
        return None


@settings(max_examples=40, deadline=None)
@given(random_curves())
def test_random_curve_routes(c):
    if c is None:
        return
    summary = cv.splitting_summary(c, 3)
    for n in (1, 2, 3):
        if c.p**n <= 2500:
            assert cv.count_points_direct(c, n) == cv.count_points_from_splitting(c, n, summary)
    assert cv.riemann_hurwitz_check(c, max(3, c.f.degree))["ok"]
