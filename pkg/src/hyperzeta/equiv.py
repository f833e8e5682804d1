"""Fiberwise bijections behind the factorization Z(C) * ... = Z(P^1) * L(C).

For a target cycle gamma on P^1:

  T(gamma)   cycles on C with pi_* = gamma,
  B+(gamma)  pairs (alpha, beta), alpha + beta = gamma, beta in S+,
  B-(gamma)  the same with beta in S-,

and phi : T(gamma) + B-(gamma) -> B+(gamma) is built explicitly.  S+ asks beta to
avoid ramified points and to have even inert multiplicity sum; S- asks for odd
inert sum.  The LITERAL variant of S- additionally forbids split points, the
CORRECTED variant does not.

Two implementations exist: a labeled reference that materializes every element,
and a numpy kernel that runs the same construction on whole blocks of cycles
(see cycles.cycle_blocks) and is cross-checked against the reference.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import zeta as zt
from .curve import CurveSpec, PointTable, Splitting, point_table
from .cycles import SOLE, Y, YBAR, Cycle, CycleBlock, CycleSpace, cycle_blocks, cycle_space, make_cycle
from .errors import VerificationFailed
from .series import Series


class Variant(str, Enum):
    CORRECTED = "corrected"
    LITERAL = "paper"  # value kept as the command-line spelling


@dataclass(frozen=True)
class SimplexPair:
    d2: Cycle
    d0: Cycle
    d1: Cycle

    def __str__(self) -> str:
        return f"({self.d2} | {self.d0})"


class SignedSupport:
    def __init__(self, table: PointTable, variant: Variant = Variant.CORRECTED):
        self.table = table
        self.variant = Variant(variant)

    def _kinds(self, beta: Cycle):
        return [(self.table.splitting(x), b) for x, b in beta.terms]

    def _admissible(self, beta: Cycle) -> tuple[bool, int]:
        kinds = self._kinds(beta)
        if any(k is Splitting.RAMIFIED for k, _ in kinds):
            return False, 0
        return True, sum(b for k, b in kinds if k is Splitting.INERT)

    def plus(self, beta: Cycle) -> bool:
        ok, s = self._admissible(beta)
        return ok and s % 2 == 0

    def minus(self, beta: Cycle) -> bool:
        ok, s = self._admissible(beta)
        if not ok or s % 2 == 0:
            return False
        if self.variant is Variant.LITERAL:
            return all(k is not Splitting.SPLIT for k, _ in self._kinds(beta))
        return True


# ---------------------------------------------------------------------------
# witnesses
# ---------------------------------------------------------------------------


@dataclass
class BijectionWitness:
    """Per-gamma forward map from T + B- onto B+.

    Each fiber holds (source, target, provenance) triples.  Sources are ("T", cycle on
    C) or ("B-", SimplexPair); targets are ("B+", SimplexPair).  `gamma_of_source`
    computes the base cycle of a source so gamma-preservation is checked, not assumed.
    """

    gammas: dict  # gamma terms -> Cycle
    pairs: dict  # gamma terms -> list of (source, target, provenance)
    targets: dict  # gamma terms -> list of every B+ element
    sources: dict  # gamma terms -> list of every T and B- element
    gamma_of_source: object = field(repr=False, default=None)

    def forward(self, g) -> dict:
        return {s: t for s, t, _ in self.pairs[g]}

    def backward(self, g) -> dict:
        return {t: s for s, t, _ in self.pairs[g]}

    def failures(self) -> list:
        bad = []
        for g, gamma in self.gammas.items():
            fw = self.forward(g)
            bw = self.backward(g)
            reason = None
            if set(fw) != set(self.sources[g]) or len(fw) != len(self.sources[g]):
                reason = "forward is not total on T + B-"
            elif sorted(map(repr, fw.values())) != sorted(map(repr, self.targets[g])):
                reason = "forward is not a bijection onto B+"
            elif any(bw[fw[s]] != s for s in fw) or any(fw[bw[t]] != t for t in bw):
                reason = "backward is not inverse to forward"
            elif any(t[1].d1 != gamma for t in fw.values()):
                reason = "a target does not lie over gamma"
            elif self.gamma_of_source and any(self.gamma_of_source(s) != gamma for s in fw):
                reason = "a source does not lie over gamma"
            if reason:
                bad.append((gamma.key, str(gamma), reason))
        return sorted(bad)

    def verify(self) -> dict:
        bad = self.failures()
        if bad:
            raise VerificationFailed(f"bijection fails at {bad[0][1]}: {bad[0][2]}", counterexample=bad[0])
        return self.stats()

    def stats(self) -> dict:
        prov: dict[str, int] = {}
        for triples in self.pairs.values():
            for _, _, tag in triples:
                prov[tag] = prov.get(tag, 0) + 1
        return {"fibers": len(self.gammas), "elements": sum(len(v) for v in self.pairs.values()), "provenance": prov}

    def emit(self) -> list[dict]:
        out = []
        for g in sorted(self.gammas, key=lambda k: self.gammas[k].key):
            for s, t, tag in self.pairs[g]:
                out.append({"gamma": str(self.gammas[g]), "source": _label(s), "target": _label(t), "provenance": tag})
        return out


def _label(x) -> str:
    kind, obj = x
    return f"{kind}:{obj}"


# ---------------------------------------------------------------------------
# local bijections at a single closed point
# ---------------------------------------------------------------------------


def local_phi(curve: CurveSpec, index: int, bound: int = 8, table: PointTable | None = None) -> BijectionWitness:
    """The local case maps at the closed point with global index `index`, for gamma = n x, n <= bound."""
    table = point_table(curve, 1) if table is None else table
    kind = table.splitting(index)
    d = int(table.degree[index])
    base_deg = {index: d}.__getitem__
    up_deg = (lambda y: 2 * d) if kind is Splitting.INERT else (lambda y: d)
    x = index

    def base(a):
        return make_cycle([(x, a)], base_deg)

    def up(terms):
        return make_cycle(terms, up_deg)

    def pair(a, b):
        return ("B+", SimplexPair(base(a), base(b), base(a + b)))

    def push(src):
        tag, obj = src
        if tag == "B-":
            return obj.d1
        w = 2 if kind is Splitting.INERT else 1
        return base(sum(w * b for _, b in obj.terms))

    gammas, pairs, targets, sources = {}, {}, {}, {}
    for n in range(bound + 1):
        gamma = base(n)
        g = gamma.terms
        gammas[g] = gamma
        if kind is Splitting.RAMIFIED:
            T = [up([((x, SOLE), n)])]
            Bp = [pair(n, 0)]
            Bm = []
            fw = [(("T", T[0]), Bp[0], "explicit-formula")]
        elif kind is Splitting.SPLIT:
            T = [up([((x, Y), a), ((x, YBAR), n - a)]) for a in range(n + 1)]
            Bp = [pair(a, n - a) for a in range(n + 1)]
            Bm = []
            fw = [(("T", t), pair(t[(x, Y)], t[(x, YBAR)]), "explicit-formula") for t in T]
        else:
            T = [up([((x, SOLE), n // 2)])] if n % 2 == 0 else []
            Bp = [pair(n - b, b) for b in range(0, n + 1, 2)]
            Bm = [("B-", SimplexPair(base(n - b), base(b), gamma)) for b in range(1, n + 1, 2)]
            fw = [(("T", t), pair(0, 2 * t[(x, SOLE)]), "explicit-formula") for t in T]
            # (k x, (2l+1) x) -> ((k+1) x, 2l x)
            fw += [(s, pair(s[1].d2[x] + 1, s[1].d0[x] - 1), "explicit-formula") for s in Bm]
        pairs[g] = fw
        targets[g] = Bp
        sources[g] = [("T", t) for t in T] + Bm
    return BijectionWitness(gammas, pairs, targets, sources, push)


def local_inert_decomposition(w: BijectionWitness) -> dict:
    """Images of T are exactly the (0, even) pairs and images of B- the (k >= 1, even) pairs."""
    t_img, b_img, all_targets = set(), set(), set()
    for g in w.gammas:
        for t in w.targets[g]:
            all_targets.add((t[1].d2.degree, t[1].d0.degree))
        for s, t, _ in w.pairs[g]:
            (t_img if s[0] == "T" else b_img).add((t[1].d2.degree, t[1].d0.degree))
    return {
        "T_images_are_zero_even": all(a == 0 for a, _ in t_img),
        "B_images_have_positive_d2": all(a > 0 for a, _ in b_img),
        "disjoint": not (t_img & b_img),
        "exhaustive": (t_img | b_img) == all_targets,
    }


# ---------------------------------------------------------------------------
# labeled global construction (reference implementation)
# ---------------------------------------------------------------------------


@dataclass
class GlobalSets:
    base: CycleSpace
    up: CycleSpace
    variant: Variant
    N: int
    gammas: dict  # terms -> Cycle
    T: dict
    Bplus: dict
    Bminus: dict

    def cardinalities(self, g) -> tuple[int, int, int]:
        return len(self.T[g]), len(self.Bminus[g]), len(self.Bplus[g])


def _t_options(table: PointTable, x: int, a: int) -> list[tuple]:
    kind = table.splitting(x)
    if kind is Splitting.RAMIFIED:
        return [(((x, SOLE), a),)]
    if kind is Splitting.SPLIT:
        return [tuple(t for t in (((x, Y), k), ((x, YBAR), a - k)) if t[1]) for k in range(a, -1, -1)]
    return [(((x, SOLE), a // 2),)] if a % 2 == 0 else []


def build_global_sets(curve: CurveSpec, variant: Variant | str, N: int) -> GlobalSets:
    variant = Variant(variant)
    base = cycle_space(curve, "P1", max(N, 1))
    up = cycle_space(curve, "C", max(N, 1))
    table = base.table
    support = SignedSupport(table, variant)
    gammas, T, Bp, Bm = {}, {}, {}, {}
    for gamma in base.cycles_up_to(N):
        g = gamma.terms
        gammas[g] = gamma
        T[g] = [up.cycle(itertools.chain(*choice)) for choice in itertools.product(*(_t_options(table, x, a) for x, a in g))]
        plus, minus = [], []
        for beta in gamma.subcycles():
            if support.plus(beta):
                plus.append(SimplexPair(base.sub(gamma, beta), beta, gamma))
            elif support.minus(beta):
                minus.append(SimplexPair(base.sub(gamma, beta), beta, gamma))
        Bp[g], Bm[g] = plus, minus
    return GlobalSets(base, up, variant, N, gammas, T, Bp, Bm)


def phi_on_T(sets: GlobalSets, c: Cycle) -> SimplexPair:
    """Ramified and Y coefficients go to d2, YBar coefficients and doubled inert ones to d0."""
    base = sets.base
    d2, d0 = [], []
    for (x, label), b in c.terms:
        kind = base.table.splitting(x)
        if kind is Splitting.INERT:
            d0.append((x, 2 * b))
        elif label == YBAR:
            d0.append((x, b))
        else:
            d2.append((x, b))
    a, bb = base.cycle(d2), base.cycle(d0)
    return SimplexPair(a, bb, base.add(a, bb))


def global_phi(curve: CurveSpec, N: int, sets: GlobalSets | None = None) -> BijectionWitness:
    """phi on every gamma-fiber (CORRECTED variant): explicit formula on T, rank matching on B-."""
    sets = build_global_sets(curve, Variant.CORRECTED, N) if sets is None else sets
    table = sets.base.table

    def push(src):
        tag, obj = src
        if tag == "B-":
            return obj.d1
        terms: dict = {}
        for (x, _), b in obj.terms:
            terms[x] = terms.get(x, 0) + (2 if table.splitting(x) is Splitting.INERT else 1) * b
        return sets.base.cycle(terms.items())

    pairs, targets, sources = {}, {}, {}
    failures = []
    for g, gamma in sets.gammas.items():
        order = lambda sp: sp.d0.coefficient_vector(gamma)  # noqa: E731
        fw = [(("T", c), ("B+", phi_on_T(sets, c)), "explicit-formula") for c in sets.T[g]]
        hit = {t[1] for _, t, _ in fw}
        rest = sorted((sp for sp in sets.Bplus[g] if sp not in hit), key=order)
        minus = sorted(sets.Bminus[g], key=order)
        if len(rest) != len(minus):
            failures.append((gamma.key, gamma, sets.cardinalities(g)))
        fw += [(("B-", s), ("B+", t), "matched") for s, t in zip(minus, rest)]
        pairs[g] = fw
        targets[g] = [("B+", sp) for sp in sets.Bplus[g]]
        sources[g] = [("T", c) for c in sets.T[g]] + [("B-", s) for s in sets.Bminus[g]]
    if failures:
        key, gamma, card = min(failures, key=lambda f: f[0])
        raise VerificationFailed(f"|T|+|B-| != |B+| at {gamma}: {card}", counterexample=(str(gamma), card))
    return BijectionWitness(sets.gammas, pairs, targets, sources, push)


# ---------------------------------------------------------------------------
# vectorized kernel
# ---------------------------------------------------------------------------


@dataclass
class BlockResult:
    block: CycleBlock
    vectors: np.ndarray  # (J, K) coefficient vectors of beta, lexicographic
    t_count: np.ndarray  # (R,)
    plus: np.ndarray  # (R, J) bool, beta in S+
    minus: np.ndarray  # (R, J) bool, beta in S-
    image: np.ndarray  # (R, J) bool, phi(T)
    forward: np.ndarray  # (R, J) int, target index of each B- element, -1 elsewhere
    ok: np.ndarray  # (R,) bool, bijection certified on this fiber
    gap_outside: np.ndarray | None = None  # (R,) explicit B- formula lands outside B+
    gap_collide: np.ndarray | None = None  # (R,) explicit B- formula is not injective / hits phi(T)


def _vectors(mults: np.ndarray) -> np.ndarray:
    rows = list(itertools.product(*(range(int(a) + 1) for a in mults)))
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(mults))


def run_block(table: PointTable, block: CycleBlock, variant: Variant = Variant.CORRECTED, face_formula: bool = False) -> BlockResult:
    vec = _vectors(block.mults)
    J, R = vec.shape[0], len(block)
    chi = table.chi[block.pids]
    ram = (chi == 0).astype(np.int64)
    spl = (chi == 1).astype(np.int64)
    ine = (chi == -1).astype(np.int64)
    nz = (vec > 0).astype(np.int64).T  # (K, J)
    ram_hit = (ram @ nz) > 0
    spl_hit = (spl @ nz) > 0
    inert_sum = ine @ vec.T
    plus = ~ram_hit & (inert_sum % 2 == 0)
    minus = ~ram_hit & (inert_sum % 2 == 1)
    if variant is Variant.LITERAL:
        minus &= ~spl_hit
    # T: ramified y -> all in d2, split Y/YBar -> d2/d0, inert (a/2) y -> a in d0, so the
    # d0 vector of phi(t) is 0 on ramified and a on inert points, free on split points
    mism = (vec != block.mults).astype(np.int64).T
    t_exists = ~((ine * (block.mults % 2)) > 0).any(axis=1)
    image = ~ram_hit & ((ine @ mism) == 0) & t_exists[:, None]
    split_free = np.where(spl == 1, block.mults + 1, 1)
    t_count = np.where(t_exists, split_free.prod(axis=1) if block.mults.size else 1, 0)
    comp = plus & ~image
    ccount, mcount = comp.sum(axis=1), minus.sum(axis=1)
    ok = (~image | plus).all(axis=1) & (image.sum(axis=1) == t_count) & (ccount == mcount)
    # rank matching of B- against the complement of phi(T) in B+
    comp_pos = np.argsort(~comp, axis=1, kind="stable")
    minus_pos = np.argsort(~minus, axis=1, kind="stable")
    forward = np.full((R, J), -1, dtype=np.int64)
    hits = image.astype(np.int64)
    for k in range(J):
        rows = np.flatnonzero((k < ccount) & (k < mcount))
        forward[rows, minus_pos[rows, k]] = comp_pos[rows, k]
        hits[rows, comp_pos[rows, k]] += 1
    backward = np.full((R, J), -1, dtype=np.int64)
    r_idx, j_idx = np.nonzero(forward >= 0)
    backward[r_idx, forward[r_idx, j_idx]] = j_idx
    inverse_ok = (backward[r_idx, forward[r_idx, j_idx]] == j_idx)
    ok &= (hits == plus).all(axis=1)
    if not inverse_ok.all():
        ok[r_idx[~inverse_ok]] = False
    res = BlockResult(block, vec, t_count, plus, minus, image, forward, ok)
    if face_formula:
        # the literal B- leg: beta -> beta - sum_{x in supp beta} x, alpha gains the same
        shifted = vec - (vec > 0)
        strides = np.array([int(np.prod(block.mults[k + 1 :] + 1)) for k in range(len(block.mults))], dtype=np.int64)
        target = shifted @ strides if len(strides) else np.zeros(J, np.int64)
        lit = minus & ~spl_hit
        outside = lit & ~plus[:, target]
        onehot = np.zeros((R, J), np.int64)
        for j in range(J):
            onehot[:, target[j]] += lit[:, j]
        collide = ((onehot + image) > 1).any(axis=1)
        res.gap_outside = outside.sum(axis=1)
        res.gap_collide = collide
    return res


@dataclass
class FastReport:
    variant: Variant
    N: int
    by_degree: dict = field(default_factory=dict)  # n -> {"gammas","T","B+","B-","failures"}
    failures: list = field(default_factory=list)  # (key, gamma str, (T, B-, B+)) sorted
    failure_count: int = 0
    gap_outside: int = 0
    gap_collide: int = 0
    gap_example: str | None = None

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def to_json(self, limit: int = 20) -> dict:
        return {
            "variant": self.variant.value,
            "N": self.N,
            "by_degree": {str(n): v for n, v in sorted(self.by_degree.items())},
            "failure_count": self.failure_count,
            "minimal_failures": [{"gamma": s, "T": c[0], "B-": c[1], "B+": c[2]} for _, s, c in self.failures[:limit]],
        }


def _gamma_str(terms, table: PointTable) -> str:
    """gamma with point labels, e.g. "[x] + 2*[x+4]"."""
    label = lambda x: f"[{table.point(int(x)).id}]"  # noqa: E731
    return " + ".join(label(x) if a == 1 else f"{a}*{label(x)}" for x, a in terms) or "0"


def fast_global_check(curve: CurveSpec, N: int, variant: Variant | str = Variant.CORRECTED, face_formula: bool = False, keep: int = 50) -> FastReport:
    """Certify |T| + |B-| = |B+| and the explicit matching for every gamma of degree <= N."""
    variant = Variant(variant)
    table = point_table(curve, max(N, 1))
    rep = FastReport(variant, N)
    for n in range(N + 1):
        tally = {"gammas": 0, "T": 0, "B+": 0, "B-": 0, "failures": 0}
        for block in cycle_blocks(table, n):
            res = run_block(table, block, variant, face_formula)
            tally["gammas"] += len(block)
            tally["T"] += int(res.t_count.sum())
            tally["B+"] += int(res.plus.sum())
            tally["B-"] += int(res.minus.sum())
            bad = np.flatnonzero(~res.ok)
            tally["failures"] += len(bad)
            rep.failure_count += len(bad)
            for r in bad[:keep]:
                terms = block.cycle_terms(int(r))
                card = (int(res.t_count[r]), int(res.minus[r].sum()), int(res.plus[r].sum()))
                rep.failures.append(((n, terms), _gamma_str(terms, table), card))
            if face_formula:
                rep.gap_outside += int(res.gap_outside.sum())
                rep.gap_collide += int(res.gap_collide.sum())
                where = np.flatnonzero(res.gap_outside > 0)
                if len(where):
                    cand = block.cycle_terms(int(where[0]))
                    if rep.gap_example is None or (n, cand) < rep.gap_example[0]:
                        rep.gap_example = ((n, cand), _gamma_str(cand, table))
        rep.by_degree[n] = tally
    rep.failures.sort()
    rep.failures = rep.failures[:keep]
    if rep.gap_example is not None:
        rep.gap_example = rep.gap_example[1]
    return rep


def witness_from_block(sets: GlobalSets, res: BlockResult, row: int) -> dict:
    """Translate a kernel fiber into labeled form: B- beta vector -> B+ beta vector."""
    return {tuple(res.vectors[j]): tuple(res.vectors[res.forward[row, j]]) for j in np.flatnonzero(res.forward[row] >= 0)}


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def _support_series(curve: CurveSpec, N: int, variant: Variant) -> tuple[Series, Series]:
    """Generating functions of S+ and S- by degree, counted over all cycles of P^1."""
    table = point_table(curve, max(N, 1))
    plus, minus = [1] + [0] * N, [0] * (N + 1)
    for n in range(1, N + 1):
        for block in cycle_blocks(table, n):
            chi = table.chi[block.pids]
            clean = ~(chi == 0).any(axis=1)
            odd = ((chi == -1) * block.mults).sum(axis=1) % 2 == 1
            no_split = ~(chi == 1).any(axis=1)
            plus[n] += int((clean & ~odd).sum())
            m = clean & odd
            if variant is Variant.LITERAL:
                m &= no_split
            minus[n] += int(m.sum())
    return Series(plus, N), Series(minus, N)


def factorization_series_check(curve: CurveSpec, N: int, report: FastReport | None = None) -> dict:
    """Cardinalities of both sides, pushed to generating functions, against Z(C) and L(C)."""
    report = fast_global_check(curve, N) if report is None else report
    zc = zt.zeta_euler_product(curve, N)
    zp = zt.zeta_p1(curve.q, N)
    lp, lm = _support_series(curve, N, report.variant)
    L = zt.l_polynomial(curve)
    lser = Series(list(L.coeffs)[: N + 1], N)
    T = Series([report.by_degree[n]["T"] for n in range(N + 1)], N)
    Bp = Series([report.by_degree[n]["B+"] for n in range(N + 1)], N)
    Bm = Series([report.by_degree[n]["B-"] for n in range(N + 1)], N)
    checks = {
        "T_is_ZC": T == zc,
        "Bplus_is_ZP1_Lplus": Bp == zp * lp,
        "Bminus_is_ZP1_Lminus": Bm == zp * lm,
        "ZC_plus_ZP1_Lminus_eq_ZP1_Lplus": zc + zp * lm == zp * lp,
        "Lplus_minus_Lminus_eq_L": lp - lm == lser,
    }
    return {
        "N": N,
        "variant": report.variant.value,
        "Z_C": [int(c) for c in zc.coeffs],
        "Z_P1": [int(c) for c in zp.coeffs],
        "L_plus": [int(c) for c in lp.coeffs],
        "L_minus": [int(c) for c in lm.coeffs],
        "L": [int(c) for c in lser.coeffs],
        "checks": checks,
        "ok": all(checks.values()),
    }


def variant_discrepancy_report(curve: CurveSpec, N: int, limit: int = 20) -> dict:
    corrected = fast_global_check(curve, N, Variant.CORRECTED)
    literal = fast_global_check(curve, N, Variant.LITERAL, face_formula=True, keep=limit)
    minimal = None
    if literal.failures:
        _, s, card = literal.failures[0]
        minimal = {"gamma": s, "T": card[0], "B-": card[1], "B+": card[2]}
    lp, lm = _support_series(curve, N, Variant.LITERAL)
    L = zt.l_polynomial(curve)
    lser = Series(list(L.coeffs)[: N + 1], N)
    return {
        "N": N,
        "corrected_mismatches": corrected.failure_count,
        "literal_mismatches": literal.failure_count,
        "literal_minimal": minimal,
        "literal_smallest": [{"gamma": s, "T": c[0], "B-": c[1], "B+": c[2]} for _, s, c in literal.failures[:limit]],
        "literal_series_L_plus_minus_L_minus": [int(c) for c in (lp - lm).coeffs],
        "L": [int(c) for c in lser.coeffs],
        "literal_series_matches_L": lp - lm == lser,
        "face_formula": {
            "outside_Bplus": literal.gap_outside,
            "collisions": literal.gap_collide,
            "first_gamma": literal.gap_example,
        },
        "ok": corrected.failure_count == 0,
    }
