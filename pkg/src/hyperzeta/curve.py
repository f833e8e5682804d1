"""Odd-degree hyperelliptic curves y^2 = f(x) over F_p and the double cover C -> P^1.

Closed points of P^1 are numbered globally: index 0 is the point at infinity, then
the finite points of degree 1, 2, ... each block in canonical polynomial order.
That numbering is what cycles and the equivalence checks use as point ids.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import gf
from .errors import (
    BadDegree,
    BudgetExceeded,
    InsufficientSummaryDepth,
    NotMonic,
    NotSmooth,
)
from .gf import ExtElem, FieldSpec, Poly, SquareClass

DEFAULT_BUDGET = 20000
DEFAULT_MAXDEG = 4


class Splitting(str, Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"

    @property
    def chi(self) -> int:
        return {"ramified": 0, "split": 1, "inert": -1}[self.value]

    @classmethod
    def from_chi(cls, c: int) -> Splitting:
        return {0: cls.RAMIFIED, 1: cls.SPLIT, -1: cls.INERT}[int(c)]


@dataclass(frozen=True)
class CurveSpec:
    field: FieldSpec
    f: Poly
    genus: int

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.p

    def __str__(self) -> str:
        return f"y^2 = {self.f} over F_{self.p}"


def validate_curve(p: int, f: Poly | str) -> CurveSpec:
    field = FieldSpec(p)
    if isinstance(f, str):
        f = Poly.parse(f, p)
    elif f.p != p:
        f = Poly(p, f.coeffs)
    if f.degree < 3 or f.degree % 2 == 0:
        raise BadDegree(f"deg f = {f.degree}; need odd degree >= 3")
    if not f.is_monic():
        raise NotMonic(f"{f} is not monic")
    if gf.poly_gcd(f, f.derivative()).degree > 0:
        raise NotSmooth(f"{f} has a repeated factor")
    return CurveSpec(field, f, (f.degree - 1) // 2)


# ---------------------------------------------------------------------------
# closed points of P^1 and their splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClosedPointP1:
    index: int
    degree: int
    minpoly: Poly | None  # None for the point at infinity

    @property
    def kind(self) -> str:
        return "infinity" if self.minpoly is None else "finite"

    @property
    def id(self) -> str:
        return "inf" if self.minpoly is None else str(self.minpoly)

    def __str__(self) -> str:
        return self.id


@functools.lru_cache(maxsize=None)
def _degree_chi(curve: CurveSpec, d: int) -> np.ndarray:
    """chi of every finite closed point of degree d, in canonical order."""
    tails = np.ascontiguousarray(gf.irreducible_tails(curve.p, d).T)
    values = gf.batch_reduce(curve.f, tails, tails.shape[1])
    chi = gf.batch_quadratic_character(values, tails, curve.p)
    chi.setflags(write=False)
    return chi


class PointTable:
    """Global numbering of the closed points of P^1 up to degree `maxdeg`."""

    def __init__(self, curve: CurveSpec, maxdeg: int):
        if maxdeg < 1:
            raise ValueError("maxdeg must be >= 1")
        self.curve = curve
        self.maxdeg = maxdeg
        p = curve.p
        self.offsets = {1: 1}
        sizes = {d: gf.count_irreducibles(p, d) for d in range(1, maxdeg + 1)}
        for d in range(2, maxdeg + 1):
            self.offsets[d] = self.offsets[d - 1] + sizes[d - 1]
        self.size = self.offsets[maxdeg] + sizes[maxdeg]
        self.sizes = sizes
        # infinity is always ramified for an odd-degree model
        self.chi = np.concatenate([np.zeros(1, np.int8)] + [_degree_chi(curve, d) for d in range(1, maxdeg + 1)])
        self.degree = np.concatenate(
            [np.ones(1, np.int64)] + [np.full(sizes[d], d, np.int64) for d in range(1, maxdeg + 1)]
        )
        self.chi.setflags(write=False)
        self.degree.setflags(write=False)

    def __len__(self) -> int:
        return self.size

    def indices_of_degree(self, d: int) -> range:
        start = self.offsets[d]
        if d == 1:
            return range(0, start + self.sizes[1])
        return range(start, start + self.sizes[d])

    def point(self, i: int) -> ClosedPointP1:
        if i == 0:
            return ClosedPointP1(0, 1, None)
        for d in range(self.maxdeg, 0, -1):
            if i >= self.offsets[d]:
                tail = gf.irreducible_tails(self.curve.p, d)[i - self.offsets[d]]
                return ClosedPointP1(i, d, gf.tail_to_poly(tail, self.curve.p))
        raise IndexError(i)

    def index_of(self, minpoly: Poly | None) -> int:
        if minpoly is None:
            return 0
        d = minpoly.degree
        tails = gf.irreducible_tails(self.curve.p, d)
        code = gf._tail_codes(np.array([list(minpoly.coeffs[:d])]), self.curve.p)[0]
        pos = int(np.searchsorted(gf._tail_codes(tails, self.curve.p), code))
        return self.offsets[d] + pos

    def splitting(self, i: int) -> Splitting:
        return Splitting.from_chi(self.chi[i])


@functools.lru_cache(maxsize=None)
def point_table(curve: CurveSpec, maxdeg: int) -> PointTable:
    return PointTable(curve, maxdeg)


def closed_points(curve: CurveSpec, maxdeg: int) -> list[ClosedPointP1]:
    table = point_table(curve, maxdeg)
    return [table.point(i) for i in range(len(table))]


def splitting_type(curve: CurveSpec, pt: ClosedPointP1) -> Splitting:
    """Scalar classification through f(alpha) in F_p[x]/(minpoly)."""
    if pt.minpoly is None:
        return Splitting.RAMIFIED
    cls = gf.is_square(gf.ext_eval(pt.minpoly, curve.f))
    return {SquareClass.ZERO: Splitting.RAMIFIED, SquareClass.YES: Splitting.SPLIT, SquareClass.NO: Splitting.INERT}[cls]


@dataclass(frozen=True)
class FiberPoint:
    base: ClosedPointP1
    label: str  # "Sole", "Y" or "YBar"
    degree: int
    inertia: int
    ramification: int
    y: ExtElem | None = None  # y-coordinate in k(x) when it lies there

    @property
    def id(self) -> str:
        return self.base.id if self.label == "Sole" else f"{self.base.id}:{self.label}"


LABELS = ("Sole", "Y", "YBar")


def fiber(curve: CurveSpec, pt: ClosedPointP1) -> list[FiberPoint]:
    kind = splitting_type(curve, pt)
    d = pt.degree
    if kind is Splitting.RAMIFIED:
        y = None if pt.minpoly is None else ExtElem.from_int(pt.minpoly, 0)
        return [FiberPoint(pt, "Sole", d, 1, 2, y)]
    if kind is Splitting.INERT:
        return [FiberPoint(pt, "Sole", 2 * d, 2, 1)]
    # canonical section over the split locus: Y takes the smaller square root
    s = gf.ext_sqrt(gf.ext_eval(pt.minpoly, curve.f))
    lo, hi = sorted([s, -s], key=lambda e: e.coeffs)
    return [FiberPoint(pt, "Y", d, 1, 1, lo), FiberPoint(pt, "YBar", d, 1, 1, hi)]


# ---------------------------------------------------------------------------
# splitting summaries and point counts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplittingSummary:
    depth: int
    counts: dict  # degree -> (ramified, split, inert)

    def r(self, d: int) -> int:
        return self.counts[d][0]

    def s(self, d: int) -> int:
        return self.counts[d][1]

    def i(self, d: int) -> int:
        return self.counts[d][2]

    def require(self, n: int) -> None:
        if self.depth < n:
            raise InsufficientSummaryDepth(f"summary depth {self.depth} < {n}")

    def to_json(self) -> dict:
        return {str(d): {"r": r, "s": s, "i": i} for d, (r, s, i) in sorted(self.counts.items())}


def splitting_summary(curve: CurveSpec, maxdeg: int = DEFAULT_MAXDEG) -> SplittingSummary:
    table = point_table(curve, maxdeg)
    counts = {}
    for d in range(1, maxdeg + 1):
        chi = table.chi[table.indices_of_degree(d).start : table.indices_of_degree(d).stop]
        counts[d] = (int((chi == 0).sum()), int((chi == 1).sum()), int((chi == -1).sum()))
    return SplittingSummary(maxdeg, counts)


def extension_field(p: int, n: int) -> np.ndarray:
    """Low coefficients of the modulus used for F_{p^n} (first irreducible of degree n)."""
    return gf.irreducible_tails(p, n)[:1].T.copy()


def rational_chi(curve: CurveSpec, n: int, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """chi(f(x)) for every x in F_{p^n}, by brute force."""
    p = curve.p
    if p**n > budget:
        raise BudgetExceeded(f"p^n = {p**n} exceeds budget {budget}")
    tail = extension_field(p, n)
    xs = gf.all_field_elements(p, n)
    return gf.batch_quadratic_character(gf.batch_eval(curve.f, xs, tail), tail, p)


def count_points_direct(curve: CurveSpec, n: int, budget: int = DEFAULT_BUDGET) -> int:
    """#C(F_{p^n}) = 1 + sum over x of (1 + chi(f(x)))."""
    chi = rational_chi(curve, n, budget)
    return 1 + int(len(chi) + chi.astype(np.int64).sum())


def count_points_from_splitting(curve: CurveSpec, n: int, summary: SplittingSummary) -> int:
    summary.require(n)
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += d * (summary.r(d) + 2 * summary.s(d))
        if n % (2 * d) == 0:
            total += 2 * d * summary.i(d)
    return total


def extension_tallies(curve: CurveSpec, n: int, budget: int = DEFAULT_BUDGET) -> tuple[int, int, int]:
    """(ramified, split, inert) among the F_{p^n}-rational points of P^1, by brute force."""
    chi = rational_chi(curve, n, budget)
    return 1 + int((chi == 0).sum()), int((chi == 1).sum()), int((chi == -1).sum())


def tallies_from_identities(curve: CurveSpec, n: int, points: int, summary: SplittingSummary) -> tuple[int, int, int]:
    """Split/inert tallies over F_{q^n} forced by 2s + r = #C and r + s + i = q^n + 1.

    The ramified rational points are the ramified closed points of degree dividing n,
    each contributing deg rational points.
    """
    summary.require(n)
    r = sum(d * summary.r(d) for d in range(1, n + 1) if n % d == 0)
    if (points - r) % 2:
        raise ValueError("point count and ramified count have different parity")
    s = (points - r) // 2
    return r, s, curve.q**n + 1 - r - s


def riemann_hurwitz_check(curve: CurveSpec, maxdeg: int | None = None) -> dict:
    """Ramification data of C -> P^1 against 2 - 2g = 2*2 - sum deg(y)(e - 1)."""
    maxdeg = curve.f.degree if maxdeg is None else maxdeg
    if maxdeg < curve.f.degree:
        raise InsufficientSummaryDepth(f"need maxdeg >= deg f = {curve.f.degree}")
    table = point_table(curve, maxdeg)
    ramified = [table.point(int(i)) for i in np.flatnonzero(table.chi == 0)]
    total = sum(pt.degree * (2 - 1) for pt in ramified)
    by_degree: dict[int, int] = {}
    for pt in ramified:
        by_degree[pt.degree] = by_degree.get(pt.degree, 0) + 1
    factors = [pt for pt in ramified if pt.minpoly is not None]
    product = Poly(curve.p, (1,))
    for pt in factors:
        product = product * pt.minpoly
    g = curve.genus
    return {
        "ramified_points": [pt.id for pt in ramified],
        "ramified_by_degree": by_degree,
        "ramification_sum": total,
        "expected": 2 * g + 2,
        "factors_of_f_recovered": product == curve.f,
        "ok": total == 2 * g + 2 and 2 - 2 * g == 2 * 2 - total and product == curve.f,
    }


def points_table(curve: CurveSpec, maxdeg: int) -> list[dict]:
    """Rows for the CSV point table (id, kind, degree, minpoly, splitting, fiber_labels)."""
    rows = []
    for pt in closed_points(curve, maxdeg):
        fib = fiber(curve, pt)
        labels = []
        for fp in fib:
            y = "" if fp.y is None else ":" + str(fp.y.as_poly())
            labels.append(fp.label + y)
        rows.append(
            {
                "id": pt.id,
                "kind": pt.kind,
                "degree": pt.degree,
                "minpoly": "" if pt.minpoly is None else str(pt.minpoly),
                "splitting": splitting_type(curve, pt).value,
                "fiber_labels": "|".join(labels),
            }
        )
    return rows
