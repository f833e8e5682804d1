"""Trace-level shadows of L-functors and signed spans.

sym_traces gives Tr(F | Sym^n V) as the coefficients of 1/L(t); a SignedSpan is a
span of finite sets whose elements carry the sign of the generator of C_2 acting on
a one-dimensional summand, so its trace matrix may have negative entries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .errors import NotIntegral
from .series import Series


def sym_traces(L: Sequence[int], N: int) -> list[int]:
    """Coefficients of 1/L(t) to t^N (L given low degree first, constant term 1)."""
    if not L or L[0] != 1:
        raise ValueError("L needs constant term 1")
    inv = Series(list(L)[: N + 1], N).inverse()
    if not inv.is_integral():
        raise NotIntegral(f"1/L is not integral: {inv}")
    return inv.integer_coeffs()


def satisfies_recurrence(L: Sequence[int], s: Sequence[int]) -> bool:
    """sum_k L_k s_{n-k} = 0 for n >= 1, i.e. s is annihilated by L."""
    return s[0] == 1 and all(sum(L[k] * s[n - k] for k in range(min(len(L), n + 1))) == 0 for n in range(1, len(s)))


def convolve(a: Sequence[int], b: Sequence[int], N: int) -> list[int]:
    return [sum(a[k] * b[n - k] for k in range(n + 1) if k < len(a) and n - k < len(b)) for n in range(N + 1)]


def convolution_inverse_check(signed: Sequence[int], L: Sequence[int], N: int) -> dict:
    """(L+ - L-) * traces of Sym^n V is the unit sequence (1, 0, 0, ...)."""
    traces = sym_traces(L, N)
    prod = convolve(list(signed), traces, N)
    delta = [1] + [0] * N
    return {"signed": list(signed)[: N + 1], "traces": traces, "product": prod, "ok": prod == delta}


@dataclass(frozen=True)
class SignedSpan:
    """Elements (sign, source index, target index) of a span between two bases, 1-based."""

    rows: int
    cols: int
    elements: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        for sign, src, tgt in self.elements:
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign}")
            if not (1 <= src <= self.cols and 1 <= tgt <= self.rows):
                raise ValueError(f"element ({sign}, {src}, {tgt}) is outside the bases")


def signed_trace_matrix(span: SignedSpan) -> list[list[int]]:
    """Entry (i, j) is the signed count of elements with target i and source j."""
    M = [[0] * span.cols for _ in range(span.rows)]
    for sign, src, tgt in span.elements:
        M[tgt - 1][src - 1] += sign
    return M


def compose(first: SignedSpan, second: SignedSpan) -> SignedSpan:
    """Pullback composition (second after first): pairs meeting in the middle base, signs multiply."""
    if first.rows != second.cols:
        raise ValueError("spans do not compose")
    elems = tuple(
        (s1 * s2, a, c) for s1, a, b in first.elements for s2, b2, c in second.elements if b == b2
    )
    return SignedSpan(second.rows, first.cols, elems)


def matmul(A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def span_from_c2_summands(summands: Sequence[tuple[int, int, int, int]]) -> SignedSpan:
    """Build a span from summands (character, multiplicity, source, target) of W.

    Character +1 is the trivial representation V_1, -1 the sign representation V_-1;
    each copy becomes one element whose sign is the trace of the generator on it.
    """
    elems = []
    rows = cols = 0
    for char, mult, src, tgt in summands:
        elems += [(char, src, tgt)] * mult
        rows, cols = max(rows, tgt), max(cols, src)
    return SignedSpan(rows, cols, tuple(elems))


# W = V_1 + 3 V_-1 + 2 V_-1 + V_-1 over the bases {1, 2}, as (character, multiplicity, source, target)
C2_EXAMPLE_SUMMANDS = ((1, 1, 1, 1), (-1, 3, 2, 1), (-1, 2, 1, 2), (-1, 1, 2, 2))


def c2_example_span() -> SignedSpan:
    return span_from_c2_summands(C2_EXAMPLE_SUMMANDS)


def random_span(rng: random.Random, rows: int, cols: int, size: int) -> SignedSpan:
    elems = tuple((rng.choice((1, -1)), rng.randint(1, cols), rng.randint(1, rows)) for _ in range(size))
    return SignedSpan(rows, cols, elems)
