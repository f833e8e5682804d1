"""Command-line entry point: `hyperzeta <command> ...`.

Exit status is 0 when every check passes (discrepancy findings included), 1 when a
verification fails and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from . import curve as cv
from . import equiv as eq
from . import lrep, topo
from . import zeta as zt
from .errors import BudgetExceeded, FixtureError, HyperzetaError, VerificationFailed
from .fixtures import Fixture, load_fixtures, load_topology

PASS, FAIL, DISC = "pass", "fail", "discrepancy"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    tables: list = field(default_factory=list)  # (title, list of row dicts)
    payload: dict = field(default_factory=dict)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))
        return ok

    def discrepancy(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, DISC, detail))

    def table(self, title: str, rows: list[dict]) -> None:
        self.tables.append((title, rows))

    @property
    def failed(self) -> bool:
        return any(c.status == FAIL for c in self.checks)

    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "status": FAIL if self.failed else PASS,
            "checks": [c.to_json() for c in self.checks],
            "tables": [{"title": t, "rows": rows} for t, rows in self.tables],
            "payload": self.payload,
        }

    def render(self) -> str:
        out = [f"$ hyperzeta {self.command}"]
        for title, rows in self.tables:
            out.append("")
            out.append(title)
            out.extend(_format_table(rows))
        normal = [c for c in self.checks if c.status != DISC]
        disc = [c for c in self.checks if c.status == DISC]
        if normal:
            out.append("")
            out.append("CHECKS")
            out.extend(f"  {c.status.upper():4}  {c.name}: {c.detail}" for c in normal)
        if disc:
            out.append("")
            out.append("DISCREPANCY")
            out.extend(f"  {c.name}: {c.detail}" for c in disc)
        n_fail = sum(c.status == FAIL for c in self.checks)
        out.append("")
        out.append(f"RESULT: {'FAIL' if n_fail else 'PASS'} ({len(normal) - n_fail}/{len(normal)} checks passed, {len(disc)} discrepancies)")
        return "\n".join(out)


def _format_table(rows: list[dict]) -> list[str]:
    if not rows:
        return ["  (empty)"]
    cols = list(rows[0])
    cells = [[str(r.get(c, "")) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    line = lambda vals: "  " + "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()  # noqa: E731
    return [line(cols), line(["-" * w for w in widths])] + [line(r) for r in cells]


# ---------------------------------------------------------------------------
# curve selection
# ---------------------------------------------------------------------------


class UsageError(Exception):
    pass


def _select_curve(args) -> tuple[str, cv.CurveSpec, Fixture | None]:
    if getattr(args, "p", None) is not None or getattr(args, "f", None) is not None:
        if args.p is None or args.f is None:
            raise UsageError("--p and --f must be given together")
        try:
            c = cv.validate_curve(args.p, args.f)
        except (HyperzetaError, ValueError) as e:
            raise UsageError(f"invalid curve: {e}") from None
        return f"y^2={args.f}/F_{args.p}", c, None
    name = args.curve
    if name is None:
        raise UsageError("give --curve NAME or --p P --f F")
    for fx in load_fixtures(args.fixtures):
        if fx.name == name:
            return name, fx.curve, fx
    raise UsageError(f"unknown fixture {name!r}")


def _degree1_roots(curve: cv.CurveSpec, kind: cv.Splitting) -> list:
    table = cv.point_table(curve, 1)
    out = []
    for i in table.indices_of_degree(1):
        if table.splitting(i) is kind:
            pt = table.point(i)
            out.append("inf" if pt.minpoly is None else (-pt.minpoly.coeffs[0]) % curve.p)
    return out


def _root_key(v) -> tuple:
    return (0, 0) if v == "inf" else (1, int(v))


def _counts(curve, N, budget, summary):
    """Point counts for n <= N: brute force within budget, else from the splitting summary."""
    counts, sources = [], []
    for n in range(1, N + 1):
        try:
            counts.append(zt.point_count(curve, n, budget))
            sources.append("direct")
        except BudgetExceeded:
            counts.append(cv.count_points_from_splitting(curve, n, summary))
            sources.append("splitting")
    return counts, sources


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_points(args, rep: Report) -> None:
    name, c, _ = _select_curve(args)
    rows = cv.points_table(c, args.maxdeg)
    rep.payload["rows"] = rows
    summary = cv.splitting_summary(c, args.maxdeg)
    rep.payload["summary"] = summary.to_json()
    if args.csv:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["id", "kind", "degree", "minpoly", "splitting", "fiber_labels"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        rep.payload["csv"] = buf.getvalue()
    rep.table(f"closed points of P^1 up to degree {args.maxdeg} ({name})", rows if len(rows) <= 200 else rows[:200])
    rep.table("splitting summary", [{"degree": d, "r": r, "s": s, "i": i} for d, (r, s, i) in sorted(summary.counts.items())])
    for d, (r, s, i) in summary.counts.items():
        rep.check(f"summary_total_d{d}", r + s + i == summary_cap(c, d), f"r+s+i = {r + s + i}")
    rh = cv.riemann_hurwitz_check(c, max(args.maxdeg, c.f.degree))
    rep.check("riemann_hurwitz", rh["ok"], f"sum deg(e-1) = {rh['ramification_sum']} = 2g+2 = {rh['expected']}")


def summary_cap(c, d):
    from .gf import count_irreducibles

    return count_irreducibles(c.p, d) + (d == 1)


def cmd_zeta(args, rep: Report) -> None:
    name, c, _ = _select_curve(args)
    N = args.trunc
    summary = cv.splitting_summary(c, max(N, 1))
    counts, sources = _counts(c, N, args.budget, summary)
    z_counts = zt.zeta_from_counts(c, N, counts=counts)
    z_euler = zt.zeta_euler_product(c, N, summary)
    L = zt.l_polynomial(c, "chi", summary=summary)
    z_lq = L.series(N) * zt.zeta_p1(c.q, N)
    rows = [
        {"n": n, "#C(F_q^n)": counts[n - 1] if n else "", "source": sources[n - 1] if n else "", "counts": int(z_counts[n]), "euler": int(z_euler[n]), "L/(1-t)(1-qt)": int(z_lq[n])}
        for n in range(N + 1)
    ]
    rep.table(f"Z(C,t) for {name}", rows)
    rep.payload["zeta"] = z_euler.to_json()
    rep.check("counts_eq_euler", z_counts == z_euler, "exp-of-counts route equals Euler product")
    rep.check("euler_eq_L_quotient", z_euler == z_lq, "Euler product equals L(t)/((1-t)(1-qt))")


def cmd_lpoly(args, rep: Report) -> None:
    name, c, fx = _select_curve(args)
    Lc = zt.l_polynomial(c, "chi")
    Lq = zt.l_polynomial(c, "quotient", budget=args.budget)
    rep.table(f"L(C,t) for {name}", [{"route": "quotient", "L": str(Lq)}, {"route": "chi", "L": str(Lc)}])
    rep.payload["L"] = Lc.to_json()
    rep.check("routes_agree", Lq == Lc, f"{Lq} vs {Lc}")
    rep.check("functional_equation", Lc.functional_equation_holds(), f"c[2g-i] = q^(g-i) c[i] for {Lc}")
    rep.check("hasse_bound", zt.hasse_bound_holds(Lc), f"|a_q| = {abs(Lc.a_q)}")
    if fx and "L" in fx.expected:
        rep.check("expected_L", list(Lc.coeffs) == fx.expected["L"], fx.provenance["L"])


def cmd_chi(args, rep: Report) -> None:
    name, c, _ = _select_curve(args)
    N = args.trunc
    rows = []
    ok = True
    for n in range(N + 1):
        s = zt.chi_degree_sum(c, n)
        e = zt.chi_degree_sum_exhaustive(c, n) if args.exhaustive else ""
        ok &= e == "" or s == e
        rows.append({"n": n, "series": s, "exhaustive": e})
    rep.table(f"sum of chi(alpha) over cycles of degree n ({name})", rows)
    if args.exhaustive:
        rep.check("series_eq_exhaustive", ok, "chi-product coefficients against cycle enumeration")


def cmd_verify_local(args, rep: Report) -> None:
    name, c, _ = _select_curve(args)
    table = cv.point_table(c, 1)
    rows = []
    for kind in cv.Splitting:
        idx = [i for i in table.indices_of_degree(1) if table.splitting(i) is kind]
        if not idx:
            rows.append({"kind": kind.value, "point": "-", "fibers": 0, "elements": 0, "status": "absent"})
            continue
        i = idx[0]
        w = eq.local_phi(c, i, args.bound, table)
        bad = w.failures()
        st = w.stats()
        rows.append({"kind": kind.value, "point": table.point(i).id, "fibers": st["fibers"], "elements": st["elements"], "status": "ok" if not bad else bad[0][2]})
        rep.check(f"local_{kind.value}", not bad, f"gamma = n*({table.point(i).id}), n <= {args.bound}")
        if kind is cv.Splitting.INERT:
            dec = eq.local_inert_decomposition(w)
            rep.check("local_inert_images", all(dec.values()), ", ".join(f"{k}={v}" for k, v in dec.items()))
        if args.emit_witness:
            rep.payload.setdefault("witness", {})[kind.value] = w.emit()
    rep.table(f"local bijections ({name})", rows)


def cmd_verify_global(args, rep: Report) -> None:
    name, c, _ = _select_curve(args)
    variant = eq.Variant(args.variant)
    t0 = time.perf_counter()
    res = eq.fast_global_check(c, args.maxdeg, variant)
    rows = [{"degree": n, **v} for n, v in sorted(res.by_degree.items())]
    rep.table(f"|T| + |B-| = |B+| by degree ({name}, {variant.value})", rows)
    rep.payload["verify"] = res.to_json()
    detail = f"{sum(v['gammas'] for v in res.by_degree.values())} fibers, degree <= {args.maxdeg}"
    if variant is eq.Variant.CORRECTED:
        rep.check("global_bijection", res.ok, detail if res.ok else f"first failure {res.failures[0][1]}")
        fs = eq.factorization_series_check(c, args.maxdeg, res)
        rep.check("factorization_series", fs["ok"], f"Z(C) = {fs['Z_C']}, L+ = {fs['L_plus']}, L- = {fs['L_minus']}")
    elif res.ok:
        rep.check("global_bijection", True, detail)
    else:
        _, g, card = res.failures[0]
        rep.discrepancy("literal_S-_variant", f"{res.failure_count} mismatching fibers; minimal gamma = {g} with |T|={card[0]}, |B-|={card[1]}, |B+|={card[2]}")
    if args.emit_witness:
        if variant is not eq.Variant.CORRECTED:
            raise UsageError("--emit-witness needs --variant corrected")
        w = eq.global_phi(c, args.maxdeg)
        w.verify()
        rep.payload["witness"] = w.emit()
    if args.timing:
        rep.payload["seconds"] = round(time.perf_counter() - t0, 3)


def _tally_discrepancy(rep: Report, fx: Fixture, budget: int, summary) -> None:
    c = fx.curve
    for key, claim in sorted(fx.claims.items()):
        if not key.startswith("tallies_n"):
            continue
        n = int(key[len("tallies_n") :])
        points = zt.point_count(c, n, budget)
        r, s, i = cv.tallies_from_identities(c, n, points, summary)
        a = c.q**n + 1 - points
        brute = cv.extension_tallies(c, n, budget)
        consistent = i - s == a and r + s + i == c.q**n + 1 and 2 * s + r == points
        rep.check(f"tallies_n{n}_identities", consistent and brute == (r, s, i), f"(r,s,i) = {(r, s, i)} from identities, brute force {brute}")
        stated = (claim.get("r", r), claim["s"], claim["i"])
        if stated != (r, s, i):
            rep.discrepancy(
                f"tallies_F{c.q}^{n}",
                f"stated r={stated[0]}, s={stated[1]}, i={stated[2]}; recomputed r={r}, s={s}, i={i} "
                f"(i-s = a = {a}, r+s+i = {c.q ** n + 1}, 2s+r = #C = {points}; brute force agrees: {brute == (r, s, i)})",
            )


def _variant_discrepancy(rep: Report, c, N: int) -> None:
    d = eq.variant_discrepancy_report(c, N)
    rep.check("corrected_variant", d["corrected_mismatches"] == 0, f"0 mismatching fibers to degree {N}")
    ff = d["face_formula"]
    if d["literal_mismatches"]:
        m = d["literal_minimal"]
        rep.discrepancy(
            "literal_S-_variant",
            f"{d['literal_mismatches']} mismatching fibers to degree {N}; minimal gamma = {m['gamma']} with "
            f"|T|={m['T']}, |B-|={m['B-']}, |B+|={m['B+']}; L+ - L- = {d['literal_series_L_plus_minus_L_minus']} vs L = {d['L']}",
        )
    if ff["outside_Bplus"] or ff["collisions"]:
        rep.discrepancy(
            "literal_B-_face_formula",
            f"beta -> beta - sum_(x in supp beta) x leaves B+ for {ff['outside_Bplus']} elements and collides in "
            f"{ff['collisions']} fibers; first gamma {ff['first_gamma']}; rank matching used instead",
        )
    rep.payload["variant_report"] = d


def reproduce_fixture(fx: Fixture, maxdeg: int = 4, budget: int = cv.DEFAULT_BUDGET, rep: Report | None = None) -> Report:
    rep = Report(f"reproduce {fx.name}") if rep is None else rep
    c, exp, prov = fx.curve, fx.expected, fx.provenance
    summary = cv.splitting_summary(c, max(maxdeg, c.f.degree))
    counts, sources = _counts(c, maxdeg, budget, summary)
    r1, s1, i1 = summary.counts[1]
    rep.table(
        f"{fx.name}: {c}",
        [{"n": n, "#C(F_q^n)": counts[n - 1], "source": sources[n - 1], "from_splitting": cv.count_points_from_splitting(c, n, summary)} for n in range(1, maxdeg + 1)],
    )
    rep.table("splitting summary", [{"degree": d, "r": r, "s": s, "i": i} for d, (r, s, i) in sorted(summary.counts.items()) if d <= maxdeg])
    for n in range(1, maxdeg + 1):
        key = f"count_n{n}"
        if key in exp:
            rep.check(key, counts[n - 1] == exp[key], f"{counts[n - 1]} ({prov[key]})")
        if sources[n - 1] == "direct":
            rep.check(f"count_routes_n{n}", counts[n - 1] == cv.count_points_from_splitting(c, n, summary), "brute force = splitting formula")
    for key, val in (("r1", r1), ("s1", s1), ("i1", i1)):
        if key in exp:
            rep.check(key, val == exp[key], f"{val} ({prov[key]})")
    for key, kind in (("ramified_x", cv.Splitting.RAMIFIED), ("split_x", cv.Splitting.SPLIT), ("inert_x", cv.Splitting.INERT)):
        if key in exp:
            got = sorted(_degree1_roots(c, kind), key=_root_key)
            rep.check(key, got == sorted(exp[key], key=_root_key), f"{got}")
    Lq = zt.l_polynomial(c, "quotient", budget=budget)
    Lc = zt.l_polynomial(c, "chi", summary=summary)
    rep.check("L_routes_agree", Lq == Lc, f"quotient {Lq}, chi {Lc}")
    if "L" in exp:
        rep.check("L", list(Lc.coeffs) == exp["L"], f"{Lc} ({prov['L']})")
    rep.check("a_q_is_i1_minus_s1", Lc.a_q == i1 - s1 == c.q + 1 - counts[0], f"a_q = {Lc.a_q}, i1 - s1 = {i1 - s1}")
    rep.check("functional_equation", Lc.functional_equation_holds(), str(Lc))
    rh = cv.riemann_hurwitz_check(c, summary.depth)
    rep.check("riemann_hurwitz", rh["ok"], f"ramified {rh['ramified_points']}, sum = {rh['ramification_sum']}")
    z = zt.zeta_from_counts(c, maxdeg, counts=counts)
    rep.check("zeta_routes", z == zt.zeta_euler_product(c, maxdeg, summary), f"Z = {[int(x) for x in z.coeffs]}")
    table = cv.point_table(c, 1)
    for kind in cv.Splitting:
        idx = [i for i in table.indices_of_degree(1) if table.splitting(i) is kind]
        if idx:
            bad = eq.local_phi(c, idx[0], 8, table).failures()
            rep.check(f"local_{kind.value}", not bad, f"at {table.point(idx[0]).id}, multiplicity <= 8")
    res = eq.fast_global_check(c, maxdeg)
    rep.check("global_bijection", res.ok, f"{sum(v['gammas'] for v in res.by_degree.values())} fibers to degree {maxdeg}")
    fs = eq.factorization_series_check(c, maxdeg, res)
    rep.check("factorization_series", fs["ok"], f"L+ = {fs['L_plus']}, L- = {fs['L_minus']}")
    for n in range(maxdeg + 1):
        sym = zt.sym_identity_check(c, n, counts=counts[:n])
        rep.check(f"sym_n{n}", sym["ok"], f"#Sym^{n} = {sym['sym']} = Burnside {sym['burnside']} = {sym['rhs']}")
    tr = lrep.sym_traces(list(Lc.coeffs), 8)
    rep.check("sym_traces_recurrence", lrep.satisfies_recurrence(list(Lc.coeffs), tr), str(tr))
    signed = [zt.chi_degree_sum(c, n, summary) for n in range(maxdeg + 1)]
    rep.check("convolution_inverse", lrep.convolution_inverse_check(signed, list(Lc.coeffs), maxdeg)["ok"], f"(L+ - L-) = {signed}")
    _tally_discrepancy(rep, fx, budget, summary)
    _variant_discrepancy(rep, c, maxdeg)
    return rep


def cmd_discrepancy(args, rep: Report) -> None:
    name, c, fx = _select_curve(args)
    summary = cv.splitting_summary(c, max(args.maxdeg, 3))
    if fx is not None:
        _tally_discrepancy(rep, fx, args.budget, summary)
    _variant_discrepancy(rep, c, args.maxdeg)
    d = rep.payload["variant_report"]
    rep.table(f"smallest literal-S- mismatches ({name})", d["literal_smallest"])


def cmd_sym(args, rep: Report) -> None:
    name, c, _ = _select_curve(args)
    summary = cv.splitting_summary(c, max(args.n, 1))
    counts, _ = _counts(c, args.n, args.budget, summary)
    rows = []
    for n in range(args.n + 1):
        r = zt.sym_identity_check(c, n, counts=counts[:n])
        rows.append({"n": n, "#Sym^n": r["sym"], "Burnside": r["burnside"], "sum (q^i+..+1) chi_j": r["rhs"], "n=2 form": r.get("explicit_n2", "")})
        rep.check(f"sym_n{n}", r["ok"], f"{r['sym']} = {r['burnside']} = {r['rhs']}")
    rep.table(f"symmetric powers ({name})", rows)


def cmd_mobius(args, rep: Report) -> None:
    r = zt.mobius_check(args.p, args.maxdeg)
    rep.check("mobius", r["ok"], f"{r['cycles']} cycles of degree <= {args.maxdeg} over F_{args.p}")
    rep.payload["mobius"] = r


def _complex_arg(args):
    complexes, _ = load_topology(args.fixtures)
    if args.file:
        with open(args.file) as fh:
            return args.file, topo.SimplicialComplex.from_json(json.load(fh))
    names = [args.complex] if args.complex else sorted(complexes)
    if any(n not in complexes for n in names):
        raise UsageError(f"unknown complex {args.complex!r}")
    return names, [topo.SimplicialComplex.from_json(complexes[n]) for n in names]


def cmd_topo_euler(args, rep: Report) -> None:
    names, Ks = _complex_arg(args)
    if isinstance(names, str):
        names, Ks = [names], [Ks]
    rows = []
    for name, K in zip(names, Ks):
        fc = K.face_counts()
        chi = topo.euler_char(K)
        mac = topo.macdonald_series(K, args.trunc)
        ref = topo.Series.geometric_power(1, chi, args.trunc)
        mob = topo.mobius_inversion_check(K)
        sub = topo.euler_char(topo.barycentric_subdivision(K)) if K.dim <= 2 else chi
        rows.append({"complex": name, "faces": list(fc.c), "chi": chi, "macdonald": [int(x) for x in mac.coeffs]})
        rep.check(f"{name}_macdonald", mac == ref, f"(1-t)^-{chi} to t^{args.trunc}")
        rep.check(f"{name}_mobius", mob["ok"], f"{mob['intervals']} intervals")
        rep.check(f"{name}_subdivision", sub == chi, f"chi(sd K) = {sub}")
    rep.table("Euler characteristics", rows)


def cmd_topo_cover(args, rep: Report) -> None:
    _, covers = load_topology(args.fixtures)
    if args.file:
        with open(args.file) as fh:
            covers = [dict(json.load(fh), name=args.file)]
    elif args.cover:
        covers = [c for c in covers if c["name"] == args.cover]
        if not covers:
            raise UsageError(f"unknown cover {args.cover!r}")
    rows = []
    for data in covers:
        cov = topo.SimplicialCover.from_json(data)
        if cov.branch:
            R, r = topo.verify_branched(cov)
            rep.check(data["name"], r["ok"], f"chi(Y) = {r['chi_Y']} = {cov.degree}*{r['chi_X']} - |R| with |R| = {len(R)}")
        else:
            r = topo.verify_unbranched(cov)
            R = []
            rep.check(data["name"], r["ok"], f"chi(Y) = {r['chi_Y']} = {cov.degree}*{r['chi_X']}")
        rows.append({"cover": data["name"], "n": cov.degree, "chi_X": r["chi_X"], "chi_Y": r["chi_Y"], "|R|": len(R), "pairs": len(r["bijection"])})
        if args.emit_witness:
            rep.payload.setdefault("bijections", {})[data["name"]] = {"pairs": r["bijection"], "R": R}
    rep.table("covers", rows)


def cmd_lrep(args, rep: Report) -> None:
    M = lrep.signed_trace_matrix(lrep.c2_example_span())
    rep.check("c2_trace_matrix", M == [[1, -3], [-2, -1]], str(M))
    if args.curve or args.p is not None:
        name, c, _ = _select_curve(args)
        L = zt.l_polynomial(c)
        tr = lrep.sym_traces(list(L.coeffs), args.trunc)
        rep.table(f"Tr(F | Sym^n V) for {name}", [{"n": n, "trace": v} for n, v in enumerate(tr)])
        rep.check("recurrence", lrep.satisfies_recurrence(list(L.coeffs), tr), f"L = {L}")
        depth = min(args.trunc, cv.DEFAULT_MAXDEG)
        signed = [zt.chi_degree_sum(c, n) for n in range(depth + 1)]
        chk = lrep.convolution_inverse_check(signed, list(L.coeffs), depth)
        rep.check("convolution_inverse", chk["ok"], f"product {chk['product']}")


def cmd_reproduce(args, rep: Report) -> None:
    fixtures = load_fixtures(args.fixtures)
    names = [fx.name for fx in fixtures] if args.fixture == "all" else [args.fixture]
    by_name = {fx.name: fx for fx in fixtures}
    for n in names:
        if n not in by_name:
            raise UsageError(f"unknown fixture {n!r}")
        reproduce_fixture(by_name[n], args.maxdeg, args.budget, rep)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _curve_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--curve", help="bundled fixture name, e.g. 1.5.d")
    p.add_argument("--p", type=int, help="prime for an ad-hoc curve")
    p.add_argument("--f", help="polynomial for an ad-hoc curve, e.g. x^3+x+1")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperzeta", description="Zeta and L-functions of odd-degree hyperelliptic curves over F_p.")
    ap.add_argument("--json", action="store_true", help="emit the machine-readable report")
    ap.add_argument("--fixtures", help="fixture file (default: bundled)")
    ap.add_argument("--budget", type=int, default=cv.DEFAULT_BUDGET, help="largest p^n for brute-force counts")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points", help="closed points of P^1 with splitting types")
    _curve_args(p)
    p.add_argument("--maxdeg", type=int, default=1)
    p.add_argument("--csv", action="store_true", help="include the CSV table in the payload")
    p.set_defaults(func=cmd_points)

    p = sub.add_parser("zeta", help="Z(C,t) by counts, Euler product and L quotient")
    _curve_args(p)
    p.add_argument("--trunc", type=int, default=zt.DEFAULT_TRUNC)
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("lpoly", help="L(C,t) by the quotient and chi routes")
    _curve_args(p)
    p.set_defaults(func=cmd_lpoly)

    p = sub.add_parser("chi", help="degree sums of the chi character")
    _curve_args(p)
    p.add_argument("--trunc", type=int, default=zt.DEFAULT_TRUNC)
    p.add_argument("--exhaustive", action="store_true", help="also enumerate cycles")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("verify-local", help="local bijections at one point of each splitting type")
    _curve_args(p)
    p.add_argument("--bound", type=int, default=8, help="largest multiplicity")
    p.add_argument("--emit-witness", action="store_true")
    p.set_defaults(func=cmd_verify_local)

    p = sub.add_parser("verify-global", help="fiberwise global bijection")
    _curve_args(p)
    p.add_argument("--maxdeg", type=int, default=4)
    p.add_argument("--variant", choices=[v.value for v in eq.Variant], default="corrected")
    p.add_argument("--emit-witness", action="store_true", help="dump the labeled bijection (slow for large fields)")
    p.add_argument("--timing", action="store_true")
    p.set_defaults(func=cmd_verify_global)

    p = sub.add_parser("discrepancy", help="stated values and the literal S- variant against recomputation")
    _curve_args(p)
    p.add_argument("--maxdeg", type=int, default=4)
    p.set_defaults(func=cmd_discrepancy)

    p = sub.add_parser("sym", help="symmetric power identities")
    _curve_args(p)
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("mobius", help="Moebius function of P^1 over F_p")
    p.add_argument("--p", type=int, default=5)
    p.add_argument("--maxdeg", type=int, default=4)
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("topo-euler", help="Euler characteristic, Macdonald series, Moebius inversion")
    p.add_argument("--complex", help="bundled complex name (default: all)")
    p.add_argument("--file", help="complex JSON file")
    p.add_argument("--trunc", type=int, default=4)
    p.set_defaults(func=cmd_topo_euler)

    p = sub.add_parser("topo-cover", help="verify simplicial covers")
    p.add_argument("--cover", help="bundled cover name (default: all)")
    p.add_argument("--file", help="cover JSON file")
    p.add_argument("--emit-witness", action="store_true")
    p.set_defaults(func=cmd_topo_cover)

    p = sub.add_parser("lrep", help="trace sequences and the signed trace matrix")
    _curve_args(p)
    p.add_argument("--trunc", type=int, default=8)
    p.set_defaults(func=cmd_lrep)

    p = sub.add_parser("reproduce", help="full pipeline against a fixture's expected values")
    p.add_argument("fixture", help="fixture name or 'all'")
    p.add_argument("--maxdeg", type=int, default=4)
    p.set_defaults(func=cmd_reproduce)
    return ap


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if not hasattr(args, "fixtures"):
        args.fixtures = None
    rep = Report(" ".join(argv if argv is not None else sys.argv[1:]))
    try:
        args.func(args, rep)
    except (UsageError, FixtureError) as e:
        print(f"hyperzeta: error: {e}", file=sys.stderr)
        return 2
    except VerificationFailed as e:
        rep.checks.append(Check("verification", FAIL, f"{e} (counterexample {e.counterexample})"))
    if args.json:
        stdout.write(json.dumps(rep.to_json(), indent=1, sort_keys=True, default=str) + "\n")
    else:
        stdout.write(rep.render() + "\n")
    return rep.exit_code()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
