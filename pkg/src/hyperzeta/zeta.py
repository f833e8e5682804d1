"""Zeta and L-functions of C by three routes: point counts, Euler products, and chi.

The count route needs brute-force counts over F_{q^n}; the Euler-product and chi
routes only need the splitting summary of closed points of P^1.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt, prod

import numpy as np

from . import curve as cv
from .curve import CurveSpec, SplittingSummary
from .errors import NotIntegral, NotPolynomial
from .series import Series

DEFAULT_TRUNC = 4


@functools.lru_cache(maxsize=None)
def point_count(curve: CurveSpec, n: int, budget: int = cv.DEFAULT_BUDGET) -> int:
    return cv.count_points_direct(curve, n, budget)


def point_counts(curve: CurveSpec, N: int, budget: int = cv.DEFAULT_BUDGET) -> list[int]:
    return [point_count(curve, n, budget) for n in range(1, N + 1)]


def zeta_from_counts(curve: CurveSpec, N: int, budget: int = cv.DEFAULT_BUDGET, counts=None) -> Series:
    """exp(sum #C(F_{q^n}) t^n / n), asserted to have nonnegative integer coefficients."""
    counts = point_counts(curve, N, budget) if counts is None else list(counts)[:N]
    if N == 0:
        return Series.one(0)
    log = Series([0] + [Fraction(c, n) for n, c in enumerate(counts, 1)], N)
    z = log.exp()
    coeffs = z.integer_coeffs()
    if min(coeffs) < 0:
        raise NotIntegral(f"negative symmetric-power count in {coeffs}")
    return z


def zeta_p1(q: int, N: int) -> Series:
    """1/((1-t)(1-qt))."""
    return Series([(q ** (n + 1) - 1) // (q - 1) for n in range(N + 1)], N)


def zeta_euler_product(curve: CurveSpec | None, N: int, summary: SplittingSummary | None = None, q: int | None = None) -> Series:
    """Product of (1 - t^deg)^-1 over closed points of degree <= N.

    With curve=None this is P^1 over F_q; otherwise the points of C are read off the
    splitting summary: ramified and split points lift with their degree (one and two
    points), inert points lift to one point of twice the degree.
    """
    out = Series.one(N)
    if curve is None:
        from .gf import count_irreducibles

        for d in range(1, N + 1):
            out = out * Series.geometric_power(d, count_irreducibles(q, d) + (d == 1), N)
        return out
    summary = cv.splitting_summary(curve, max(N, 1)) if summary is None else summary
    summary.require(N)
    for d in range(1, N + 1):
        r, s, i = summary.counts[d]
        out = out * Series.geometric_power(d, r + 2 * s, N)
        if 2 * d <= N:
            out = out * Series.geometric_power(2 * d, i, N)
    return out


# ---------------------------------------------------------------------------
# L-polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LPoly:
    coeffs: tuple[int, ...]
    q: int

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("L-polynomial needs constant term 1")
        if len(self.coeffs) % 2 == 0:
            raise ValueError("L-polynomial must have even degree 2g")

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2

    @property
    def a_q(self) -> int:
        """q + 1 - #C(F_q), i.e. minus the linear coefficient."""
        return -self.coeffs[1]

    def functional_equation_holds(self) -> bool:
        g, c = self.genus, self.coeffs
        return all(c[2 * g - i] == self.q ** (g - i) * c[i] for i in range(g + 1))

    def series(self, trunc: int) -> Series:
        return Series(self.coeffs[: trunc + 1], trunc)

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "trunc": len(self.coeffs) - 1}

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            body = str(mag) if n == 0 else ("" if mag == 1 else str(mag)) + ("t" if n == 1 else f"t^{n}")
            terms.append(("-" if c < 0 else "+") + body)
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def chi_series(curve: CurveSpec, N: int, summary: SplittingSummary | None = None) -> Series:
    """prod_x (1 - chi(x) t^deg x)^-1 over closed points of P^1, from the summary."""
    summary = cv.splitting_summary(curve, max(N, 1)) if summary is None else summary
    summary.require(N)
    out = Series.one(N)
    for d in range(1, N + 1):
        _, s, i = summary.counts[d]
        out = out * Series.geometric_power(d, s, N)
        # (1 + t^d)^-i is (1 - u)^-i at u = -t^d
        inert = Series.geometric_power(d, i, N)
        out = out * Series([c * (-1) ** (n // d) for n, c in enumerate(inert.coeffs)], N)
    return out


def l_polynomial(curve: CurveSpec, method: str = "chi", budget: int = cv.DEFAULT_BUDGET, summary=None) -> LPoly:
    g, q = curve.genus, curve.q
    if method == "quotient":
        # one extra coefficient lets us confirm the quotient is a polynomial
        N = 2 * g + 1 if q ** (2 * g + 1) <= budget else 2 * g
        series = zeta_from_counts(curve, N, budget) * Series([1, -(q + 1), q], N)
    elif method == "chi":
        N = 2 * g + 1
        series = chi_series(curve, N, summary)
    else:
        raise ValueError(f"unknown method {method!r}")
    coeffs = series.integer_coeffs()
    if any(coeffs[2 * g + 1 :]):
        raise NotPolynomial(f"nonzero coefficient above degree {2 * g}: {coeffs}")
    L = LPoly(tuple(coeffs[: 2 * g + 1]), q)
    if L.coeffs[-1] == 0:
        raise NotPolynomial(f"degree of {L} is below {2 * g}")
    return L


def hasse_bound_holds(L: LPoly) -> bool:
    return L.genus != 1 or abs(L.a_q) <= isqrt(4 * L.q)


# ---------------------------------------------------------------------------
# the chi character on cycles
# ---------------------------------------------------------------------------


def chi(curve: CurveSpec, pt) -> int:
    return cv.splitting_type(curve, pt).chi


def chi_cycle(chis, cycle) -> int:
    """prod chi(x)^{a_x}; `chis` maps point ids to chi values (array or mapping)."""
    return prod(int(chis[x]) ** a for x, a in cycle.terms)


def chi_degree_sum(curve: CurveSpec, n: int, summary: SplittingSummary | None = None) -> int:
    """Sum of chi(alpha) over effective 0-cycles of degree n, read off the chi series."""
    return int(chi_series(curve, n, summary)[n])


def chi_degree_sum_exhaustive(curve: CurveSpec, n: int) -> int:
    """Same sum by enumerating every cycle of degree n (slow; used as an oracle)."""
    from .cycles import cycle_blocks

    if n == 0:
        return 1
    table = cv.point_table(curve, n)
    total = 0
    for block in cycle_blocks(table, n):
        c = table.chi[block.pids].astype(np.int64) ** block.mults
        total += int(c.prod(axis=1).sum())
    return total


# ---------------------------------------------------------------------------
# symmetric powers
# ---------------------------------------------------------------------------


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def sym_count_burnside(counts: list[int], n: int) -> int:
    """#Sym^n from the counts #C(F_{q^k}) by averaging over S_n (cycle index).

    A permutation of cycle type lambda fixes prod_k N_k^{m_k} points, and there are
    n!/prod(k^{m_k} m_k!) permutations of that type.
    """
    total = Fraction(0)
    for lam in _partitions(n):
        mult = {k: lam.count(k) for k in set(lam)}
        z = prod(k**m * factorial(m) for k, m in mult.items())
        total += Fraction(prod(counts[k - 1] ** m for k, m in mult.items()), z)
    if total.denominator != 1:
        raise NotIntegral(f"Burnside average {total} is not an integer")
    return int(total)


def sym_identity_check(curve: CurveSpec, n: int, counts=None, budget: int = cv.DEFAULT_BUDGET) -> dict:
    """#Sym^n C(F_q) against sum_{i+j=n} (q^i + ... + 1) * sum_{deg alpha = j} chi(alpha)."""
    q = curve.q
    counts = point_counts(curve, n, budget) if counts is None else list(counts)
    sym = zeta_from_counts(curve, n, counts=counts)[n] if n else 1
    burnside = sym_count_burnside(counts, n) if n else 1
    f = [chi_degree_sum(curve, j) for j in range(n + 1)]
    rhs = sum((q ** (i + 1) - 1) // (q - 1) * f[n - i] for i in range(n + 1))
    report = {"n": n, "sym": int(sym), "burnside": burnside, "rhs": rhs, "chi_sums": f}
    ok = sym == burnside == rhs
    if n == 2:
        a_q = q + 1 - counts[0]
        explicit = (q * q + q + 1) - (q + 1) * a_q + f[2]
        report["explicit_n2"] = explicit
        ok = ok and explicit == sym
    report["ok"] = bool(ok)
    return report


# ---------------------------------------------------------------------------
# Moebius function of the reduced incidence algebra of P^1
# ---------------------------------------------------------------------------


def mobius_check(p: int, N: int) -> dict:
    """Solve zeta * mu = delta cycle by cycle on P^1 over F_p and compare with the closed form.

    The solver recursion mu(gamma) = -sum_{beta < gamma} mu(beta) runs over every
    cycle of degree <= N; the closed form is (-1)^#supp for squarefree cycles, else 0.
    """
    from .cycles import make_cycle
    from .gf import count_irreducibles

    deg_of: list[int] = [1]
    for d in range(1, N + 1):
        deg_of += [d] * count_irreducibles(p, d)
    mu: dict[tuple, int] = {}
    cycles = []
    mismatches = []
    for n in range(N + 1):
        for terms in _all_cycle_terms(deg_of, n):
            cyc = make_cycle(terms, deg_of.__getitem__)
            cycles.append(cyc)
            val = 1 if not terms else -sum(mu[b.terms] for b in cyc.subcycles() if b.terms != terms)
            mu[terms] = val
            closed = (-1) ** len(terms) if all(a == 1 for _, a in terms) else 0
            if val != closed:
                mismatches.append(str(cyc))
    # zeta * mu = delta, recomputed on every cycle from the finished table
    delta_ok = all(sum(mu[b.terms] for b in c.subcycles()) == (0 if c.terms else 1) for c in cycles)
    return {
        "p": p,
        "N": N,
        "cycles": len(cycles),
        "mu_values": {str(v): sum(1 for x in mu.values() if x == v) for v in (-1, 0, 1) if v in mu.values()},
        "mismatches": mismatches,
        "delta": delta_ok,
        "ok": not mismatches and delta_ok,
    }


def _all_cycle_terms(deg_of: list[int], n: int):
    def rec(start: int, remaining: int, acc: tuple):
        if remaining == 0:
            yield acc
            return
        for x in range(start, len(deg_of)):
            d = deg_of[x]
            if d > remaining:
                break
            for a in range(1, remaining // d + 1):
                yield from rec(x + 1, remaining - a * d, acc + ((x, a),))

    yield from rec(0, n, ())
