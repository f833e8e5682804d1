from __future__ import annotations

import random

import pytest

from hyperzeta import lrep
from hyperzeta import zeta as zt


def test_c2_example_matrix():
    assert lrep.signed_trace_matrix(lrep.c2_example_span()) == [[1, -3], [-2, -1]]


def test_known_traces():
    assert lrep.sym_traces([1, 3, 5], 3) == [1, -3, 4, 3]
    assert lrep.sym_traces([1, 0, 7], 4) == [1, 0, -7, 0, 49]


def test_recurrence_and_inverse(fixture):
    c = fixture.curve
    L = list(zt.l_polynomial(c).coeffs)
    tr = lrep.sym_traces(L, 8)
    assert lrep.satisfies_recurrence(L, tr)
    a, q = -L[1], c.q
    for n in range(2, 9):
        assert tr[n] == a * tr[n - 1] - q * tr[n - 2]
    # signed support counts come from closed points, so stay within the summary depth
    signed = [zt.chi_degree_sum(c, n) for n in range(5)]
    assert lrep.convolution_inverse_check(signed, L, 4)["ok"]


@pytest.mark.parametrize("seed", range(25))
def test_composition_is_matmul(seed):
    rng = random.Random(seed)
    a, b, c = (rng.randint(1, 4) for _ in range(3))
    first = lrep.random_span(rng, b, a, rng.randint(0, 8))
    second = lrep.random_span(rng, c, b, rng.randint(0, 8))
    M = lrep.signed_trace_matrix(lrep.compose(first, second))
    assert M == lrep.matmul(lrep.signed_trace_matrix(second), lrep.signed_trace_matrix(first))


def test_span_validation():
    with pytest.raises(ValueError):
        lrep.SignedSpan(1, 1, ((2, 1, 1),))
    with pytest.raises(ValueError):
        lrep.SignedSpan(1, 1, ((1, 2, 1),))
    with pytest.raises(ValueError):
        lrep.sym_traces([2, 1], 3)
