from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzeta.errors import ExpNonzeroConstant, NonUnitInverse, TruncationMismatch
from hyperzeta.series import Series

N = 6
coeff = st.integers(-20, 20)
unit_series = st.builds(lambda c: Series([1] + c, N), st.lists(coeff, min_size=N, max_size=N))
any_series = st.builds(lambda c: Series(c, N), st.lists(coeff, min_size=N + 1, max_size=N + 1))
nil_series = st.builds(lambda c: Series([0] + c, N), st.lists(coeff, min_size=N, max_size=N))


@settings(max_examples=100, deadline=None)
@given(unit_series)
def test_inverse(a):
    assert a * a.inverse() == Series.one(N)


@settings(max_examples=100, deadline=None)
@given(any_series, any_series, any_series)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=60, deadline=None)
@given(nil_series)
def test_exp_log_inverse(a):
    assert a.exp().log() == a


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(-6, 6))
def test_geometric_power_group_law(d, k):
    assert Series.geometric_power(d, k, N) * Series.geometric_power(d, -k, N) == Series.one(N)


def test_errors():
    with pytest.raises(NonUnitInverse):
        Series([0, 1], 3).inverse()
    with pytest.raises(ExpNonzeroConstant):
        Series([1, 1], 3).exp()
    with pytest.raises(TruncationMismatch):
        Series([1], 2) + Series([1], 3)
    with pytest.raises(IndexError):
        Series([1], 2)[3]


def test_json_round_trip_and_str():
    s = Series([1, -1, Fraction(1, 2), 0, 3], 4)
    assert Series.from_json(s.to_json()) == s
    assert str(Series([1, 1, -3], 2)) == "1 + t - 3t^2 + O(t^3)"
    assert str(Series([0, -1], 1)) == "-t + O(t^2)"
