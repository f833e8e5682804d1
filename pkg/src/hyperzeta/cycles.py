"""Effective 0-cycles and the reduced incidence algebra they index.

A cycle is stored as a sorted tuple of (point id, multiplicity) terms.  On P^1 a
point id is the global index of a PointTable; on C it is a pair (base index, label)
with label one of "Sole", "Y", "YBar".  Intervals [alpha, beta] of the monoid are
represented by the single cycle beta - alpha, so functions on intervals become
functions on cycles and convolution runs over splittings gamma = alpha + beta.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from math import prod
from typing import Callable, Hashable, Iterator

import numpy as np

from .curve import CurveSpec, PointTable, Splitting, point_table
from .errors import InsufficientSummaryDepth
from .series import Series

SOLE, Y, YBAR = "Sole", "Y", "YBar"


@dataclass(frozen=True)
class Cycle:
    terms: tuple  # ((point id, multiplicity), ...) sorted by point id, multiplicities >= 1
    degree: int
    degs: tuple = field(default=(), compare=False, repr=False)  # degree of each support point

    @property
    def key(self) -> tuple:
        """Canonical order: by degree, then lexicographically by (point id, multiplicity)."""
        return (self.degree, self.terms)

    @property
    def support(self) -> tuple:
        return tuple(x for x, _ in self.terms)

    def __getitem__(self, x) -> int:
        for y, a in self.terms:
            if y == x:
                return a
        return 0

    def is_zero(self) -> bool:
        return not self.terms

    def subcycles(self) -> list[Cycle]:
        """All beta <= self, ordered by coefficient vector over the support."""
        degs = self.degs
        out = []
        for vec in itertools.product(*(range(a + 1) for _, a in self.terms)):
            terms = tuple((x, b) for (x, _), b in zip(self.terms, vec) if b)
            sub = tuple(d for d, b in zip(degs, vec) if b)
            out.append(Cycle(terms, sum(d * b for d, b in zip(degs, vec)), sub))
        return out

    def coefficient_vector(self, ambient: Cycle) -> tuple[int, ...]:
        return tuple(self[x] for x in ambient.support)

    def to_json(self) -> dict:
        return {_id_str(x): a for x, a in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(_id_str(x) if a == 1 else f"{a}*{_id_str(x)}" for x, a in self.terms)


def _id_str(x) -> str:
    return f"{x[0]}:{x[1]}" if isinstance(x, tuple) else str(x)


def make_cycle(terms, degree_of: Callable[[Hashable], int]) -> Cycle:
    terms = tuple(sorted((x, a) for x, a in terms if a))
    degs = tuple(degree_of(x) for x, _ in terms)
    return Cycle(terms, sum(d * a for d, (_, a) in zip(degs, terms)), degs)


def add_cycles(a: Cycle, b: Cycle, degree_of) -> Cycle:
    acc = dict(a.terms)
    for x, m in b.terms:
        acc[x] = acc.get(x, 0) + m
    return make_cycle(acc.items(), degree_of)


def sub_cycles(a: Cycle, b: Cycle, degree_of) -> Cycle:
    acc = dict(a.terms)
    for x, m in b.terms:
        acc[x] = acc.get(x, 0) - m
        if acc[x] < 0:
            raise ValueError(f"{b} is not <= {a}")
    return make_cycle(acc.items(), degree_of)


class CycleSpace:
    """Closed points of P^1 (space='P1') or of C (space='C') up to degree maxdeg."""

    def __init__(self, curve: CurveSpec, space: str, maxdeg: int, table: PointTable | None = None):
        if space not in ("P1", "C"):
            raise ValueError(f"unknown space {space!r}")
        self.curve = curve
        self.space = space
        self.maxdeg = maxdeg
        self.table = point_table(curve, maxdeg) if table is None else table
        if self.table.maxdeg < maxdeg:
            raise InsufficientSummaryDepth(f"point table depth {self.table.maxdeg} < {maxdeg}")
        self._deg: dict = {}
        for i in range(self.table.offsets[maxdeg] + self.table.sizes[maxdeg]):
            d = int(self.table.degree[i])
            if space == "P1":
                self._deg[i] = d
                continue
            kind = self.table.splitting(i)
            if kind is Splitting.SPLIT:
                self._deg[(i, Y)] = d
                self._deg[(i, YBAR)] = d
            elif kind is Splitting.RAMIFIED:
                self._deg[(i, SOLE)] = d
            elif 2 * d <= maxdeg:
                self._deg[(i, SOLE)] = 2 * d
        self.points = sorted(self._deg)

    def degree_of(self, x) -> int:
        return self._deg[x]

    def cycle(self, terms) -> Cycle:
        return make_cycle(terms, self.degree_of)

    def zero(self) -> Cycle:
        return self.cycle(())

    def add(self, a: Cycle, b: Cycle) -> Cycle:
        return add_cycles(a, b, self.degree_of)

    def sub(self, a: Cycle, b: Cycle) -> Cycle:
        return sub_cycles(a, b, self.degree_of)

    def cycles_of_degree(self, n: int) -> list[Cycle]:
        if n > self.maxdeg:
            raise InsufficientSummaryDepth(f"degree {n} beyond enumeration depth {self.maxdeg}")
        pts = [x for x in self.points if self._deg[x] <= n]
        out: list[Cycle] = []

        def rec(start: int, remaining: int, acc: tuple):
            if remaining == 0:
                out.append(self.cycle(acc))
                return
            for k in range(start, len(pts)):
                d = self._deg[pts[k]]
                for a in range(1, remaining // d + 1):
                    rec(k + 1, remaining - a * d, acc + ((pts[k], a),))

        rec(0, n, ())
        out.sort(key=lambda c: c.terms)
        return out

    def cycles_up_to(self, N: int) -> list[Cycle]:
        return [c for n in range(N + 1) for c in self.cycles_of_degree(n)]


@functools.lru_cache(maxsize=None)
def cycle_space(curve: CurveSpec, space: str, maxdeg: int) -> CycleSpace:
    return CycleSpace(curve, space, maxdeg)


def cycles_of_degree(space: str, curve: CurveSpec, n: int) -> list[Cycle]:
    return cycle_space(curve, space, max(n, 1)).cycles_of_degree(n)


# ---------------------------------------------------------------------------
# numerical and objective functors
# ---------------------------------------------------------------------------


@dataclass
class NumFunctor:
    """Integer values on every cycle of degree <= trunc (missing keys are zero)."""

    space: CycleSpace
    trunc: int
    values: dict  # terms -> int

    def __call__(self, c: Cycle) -> int:
        return self.values.get(c.terms, 0)

    def by_degree(self) -> dict[int, dict]:
        out: dict[int, dict] = {n: {} for n in range(self.trunc + 1)}
        for c in self.space.cycles_up_to(self.trunc):
            out[c.degree][c.terms] = self(c)
        return out


@dataclass
class ObjFunctor:
    """Finite labeled fibers over cycles of degree <= trunc."""

    space: CycleSpace
    trunc: int
    fibers: dict  # terms -> tuple of labels

    def fiber(self, c: Cycle) -> tuple:
        return self.fibers.get(c.terms, ())

    def cardinality(self) -> NumFunctor:
        return NumFunctor(self.space, self.trunc, {k: len(v) for k, v in self.fibers.items() if v})


def _check_trunc(f, g) -> None:
    if f.trunc != g.trunc or f.space is not g.space:
        raise ValueError("functors live on different spaces or truncations")


def zeta_num(space: CycleSpace, N: int) -> NumFunctor:
    return NumFunctor(space, N, {c.terms: 1 for c in space.cycles_up_to(N)})


def delta_num(space: CycleSpace, N: int) -> NumFunctor:
    return NumFunctor(space, N, {(): 1})


def zeta_obj(space: CycleSpace, N: int) -> ObjFunctor:
    return ObjFunctor(space, N, {c.terms: (("unit", c.terms),) for c in space.cycles_up_to(N)})


def delta_obj(space: CycleSpace, N: int) -> ObjFunctor:
    return ObjFunctor(space, N, {(): (("unit", ()),)})


def convolve_num(f: NumFunctor, g: NumFunctor) -> NumFunctor:
    """(f*g)(gamma) = sum over alpha + beta = gamma of f(alpha) g(beta)."""
    _check_trunc(f, g)
    sp = f.space
    out = {}
    for c in sp.cycles_up_to(f.trunc):
        v = sum(f(sp.sub(c, b)) * g(b) for b in c.subcycles())
        if v:
            out[c.terms] = v
    return NumFunctor(sp, f.trunc, out)


def convolve_obj(F: ObjFunctor, G: ObjFunctor) -> ObjFunctor:
    """Fiber over gamma: disjoint union over alpha + beta = gamma of F(alpha) x G(beta)."""
    _check_trunc(F, G)
    sp = F.space
    out = {}
    for c in sp.cycles_up_to(F.trunc):
        fib = []
        for b in c.subcycles():
            a = sp.sub(c, b)
            fib.extend(("pair", a.terms, b.terms, u, v) for u in F.fiber(a) for v in G.fiber(b))
        if fib:
            out[c.terms] = tuple(fib)
    return ObjFunctor(sp, F.trunc, out)


def pushforward_cycle(table: PointTable, beta: Cycle, base: CycleSpace) -> Cycle:
    """pi_* on cycles of C: each point maps to its base with weight [k(y):k(x)]."""
    terms: dict = {}
    for (x, label), b in beta.terms:
        w = 2 if table.splitting(x) is Splitting.INERT else 1
        terms[x] = terms.get(x, 0) + w * b
    return base.cycle(terms.items())


def pushforward_functor(F: ObjFunctor, base: CycleSpace) -> ObjFunctor:
    table = F.space.table
    out: dict = {}
    for c in F.space.cycles_up_to(F.trunc):
        fib = F.fiber(c)
        if fib:
            g = pushforward_cycle(table, c, base)
            out.setdefault(g.terms, []).extend((c.terms, u) for u in fib)
    return ObjFunctor(base, F.trunc, {k: tuple(v) for k, v in out.items()})


def pushforward_num(f: NumFunctor, base: CycleSpace) -> NumFunctor:
    table = f.space.table
    out: dict = {}
    for c in f.space.cycles_up_to(f.trunc):
        v = f(c)
        if v:
            g = pushforward_cycle(table, c, base)
            out[g.terms] = out.get(g.terms, 0) + v
    return NumFunctor(base, f.trunc, out)


def gen_function(f: NumFunctor) -> Series:
    coeffs = [0] * (f.trunc + 1)
    for c in f.space.cycles_up_to(f.trunc):
        coeffs[c.degree] += f(c)
    return Series(coeffs, f.trunc)


# ---------------------------------------------------------------------------
# vectorized enumeration of P^1 cycles
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycleBlock:
    """All cycles of one support pattern: rows of point ids with fixed multiplicities.

    Columns are grouped by point degree (ascending) and point ids increase within a
    degree group, so each row is the canonical term order of its cycle.
    """

    degrees: tuple[int, ...]
    mults: np.ndarray  # (K,)
    pids: np.ndarray  # (rows, K)

    def __len__(self) -> int:
        return self.pids.shape[0]

    def cycle_terms(self, row: int) -> tuple:
        return tuple((int(x), int(a)) for x, a in zip(self.pids[row], self.mults))


def _compositions(total_cap: int) -> Iterator[tuple[int, ...]]:
    """Sequences of positive integers with sum <= total_cap (including the empty one)."""
    yield ()
    for first in range(1, total_cap + 1):
        for rest in _compositions(total_cap - first):
            yield (first,) + rest


@functools.lru_cache(maxsize=64)
def _combinations(pool: int, k: int) -> np.ndarray:
    if k == 1:
        return np.arange(pool, dtype=np.int64)[:, None]
    arr = np.fromiter(itertools.chain.from_iterable(itertools.combinations(range(pool), k)), dtype=np.int64)
    return arr.reshape(-1, k)


def _product_rows(parts: list[np.ndarray]) -> np.ndarray:
    rows = parts[0]
    for nxt in parts[1:]:
        rows = np.hstack([np.repeat(rows, len(nxt), axis=0), np.tile(nxt, (len(rows), 1))])
    return rows


def cycle_blocks(table: PointTable, n: int) -> Iterator[CycleBlock]:
    """Every effective 0-cycle of degree exactly n on P^1, as numpy blocks."""
    if n > table.maxdeg:
        raise InsufficientSummaryDepth(f"degree {n} beyond table depth {table.maxdeg}")
    if n == 0:
        yield CycleBlock((), np.zeros(0, np.int64), np.zeros((1, 0), np.int64))
        return

    def patterns(d: int, remaining: int):
        if d > n:
            if remaining == 0:
                yield ()
            return
        for comp in _compositions(remaining // d):
            yield from (((d, comp),) + rest for rest in patterns(d + 1, remaining - d * sum(comp)))

    for pat in patterns(1, n):
        groups = [(d, comp) for d, comp in pat if comp]
        parts, degs, mults = [], [], []
        for d, comp in groups:
            rng = table.indices_of_degree(d)
            if len(comp) > len(rng):
                break
            parts.append(_combinations(len(rng), len(comp)) + rng.start)
            degs += [d] * len(comp)
            mults += list(comp)
        else:
            yield CycleBlock(tuple(degs), np.array(mults, np.int64), _product_rows(parts))


def count_cycles(table: PointTable, n: int) -> int:
    return sum(len(b) for b in cycle_blocks(table, n))


def cycle_count_formula(sizes: dict[int, int], n: int) -> int:
    """Number of degree-n cycles from point counts per degree (product of binomial series)."""
    s = Series.one(n)
    for d in range(1, n + 1):
        s = s * Series.geometric_power(d, sizes.get(d, 0), n)
    return int(s[n])


def block_cycles(space: CycleSpace, block: CycleBlock) -> list[Cycle]:
    return [space.cycle(block.cycle_terms(r)) for r in range(len(block))]


def support_product(mults: np.ndarray) -> int:
    return prod(int(a) + 1 for a in mults)
