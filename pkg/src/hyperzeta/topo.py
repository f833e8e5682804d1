"""Finite simplicial complexes, (branched) simplicial covers and Euler characteristics.

Faces are stored as sorted vertex tuples.  A cover is a vertex map carrying every
simplex of the source onto a simplex of the same dimension in the target; branching
is allowed only at target vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Hashable, Iterable

from .errors import FixtureError, NotABranchedCover, NotACover
from .series import Series


def _sort_key(v):
    return (type(v).__name__, v) if not isinstance(v, tuple) else ("tuple", tuple(map(str, v)))


def _face(vs: Iterable) -> tuple:
    return tuple(sorted(set(vs), key=_sort_key))


class SimplicialComplex:
    def __init__(self, maximal_simplices: Iterable[Iterable[Hashable]], vertices: Iterable[Hashable] = ()):
        faces: set[tuple] = set()
        for s in maximal_simplices:
            s = _face(s)
            if not s:
                continue
            for k in range(1, len(s) + 1):
                faces.update(itertools.combinations(s, k))
        faces.update((v,) for v in vertices)
        self.faces: dict[int, list[tuple]] = {}
        for f in faces:
            self.faces.setdefault(len(f) - 1, []).append(f)
        for k in self.faces:
            self.faces[k].sort(key=lambda f: tuple(map(_sort_key, f)))
        self._set = faces

    @property
    def dim(self) -> int:
        return max(self.faces, default=-1)

    @property
    def vertices(self) -> list:
        return [f[0] for f in self.faces.get(0, [])]

    def __contains__(self, face) -> bool:
        return _face(face) in self._set

    def face_counts(self) -> FaceCounts:
        return FaceCounts(tuple(len(self.faces.get(k, [])) for k in range(self.dim + 1)))

    def all_faces(self) -> list[tuple]:
        return [f for k in sorted(self.faces) for f in self.faces[k]]

    def is_closed_under_faces(self) -> bool:
        return all(g in self._set for f in self._set for k in range(1, len(f)) for g in itertools.combinations(f, k))

    def to_json(self) -> dict:
        maximal = [f for f in self.all_faces() if not any(set(f) < set(g) for g in self._set if len(g) == len(f) + 1)]
        return {"vertices": self.vertices, "maximal_simplices": [list(f) for f in maximal]}

    @classmethod
    def from_json(cls, data: dict) -> SimplicialComplex:
        if "maximal_simplices" not in data:
            raise FixtureError("complex needs 'maximal_simplices'")
        return cls(data["maximal_simplices"], data.get("vertices", ()))


@dataclass(frozen=True)
class FaceCounts:
    c: tuple[int, ...]

    @property
    def e_even(self) -> int:
        return sum(self.c[0::2])

    @property
    def e_odd(self) -> int:
        return sum(self.c[1::2])

    @property
    def euler(self) -> int:
        return self.e_even - self.e_odd


def euler_char(K: SimplicialComplex) -> int:
    return sum((-1) ** k * len(fs) for k, fs in K.faces.items())


def disjoint_union(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    tag = lambda t, f: [(t, v) for v in f]  # noqa: E731
    faces = [tag("a", f) for f in A.all_faces()] + [tag("b", f) for f in B.all_faces()]
    return SimplicialComplex(faces)


def barycentric_subdivision(K: SimplicialComplex) -> SimplicialComplex:
    """Vertices are faces of K, simplices are chains of faces under inclusion."""
    faces = K.all_faces()
    maximal = []
    for top in faces:
        if any(set(top) < set(g) for g in faces):
            continue
        # full flags of faces inside a maximal simplex
        for perm in itertools.permutations(top):
            maximal.append([_face(perm[: i + 1]) for i in range(len(perm))])
    return SimplicialComplex(maximal)


def macdonald_series(K: SimplicialComplex, N: int) -> Series:
    """(1-t)^{-e_even} (1-t)^{e_odd}: the ratio of the pushed-forward face functors."""
    fc = K.face_counts()
    return Series.geometric_power(1, fc.e_even, N) * Series.geometric_power(1, -fc.e_odd, N)


# ---------------------------------------------------------------------------
# covers
# ---------------------------------------------------------------------------


@dataclass
class SimplicialCover:
    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: dict
    degree: int
    branch: list = field(default_factory=list)
    ramification: dict = field(default_factory=dict)  # optional e(y) for points over branch vertices

    def image(self, face: tuple) -> tuple:
        return _face(self.vertex_map[v] for v in face)

    def preimages(self) -> dict[tuple, list[tuple]]:
        out: dict[tuple, list[tuple]] = {f: [] for f in self.target.all_faces()}
        for f in self.source.all_faces():
            img = self.image(f)
            if len(img) != len(f) or img not in out:
                raise NotACover(f"{f} does not map onto a simplex of the same dimension")
            out[img].append(f)
        return out

    @classmethod
    def from_json(cls, data: dict) -> SimplicialCover:
        try:
            src = SimplicialComplex.from_json(data["source"])
            tgt = SimplicialComplex.from_json(data["target"])
            vmap = data["vertex_map"]
            degree = int(data["degree"])
        except KeyError as e:
            raise FixtureError(f"cover fixture is missing {e}") from None
        keys = {str(v): v for v in src.vertices}
        tkeys = {str(v): v for v in tgt.vertices}
        vmap = {keys[str(k)]: tkeys[str(v)] for k, v in vmap.items()}
        branch = [tkeys[str(b)] for b in data.get("branch", [])]
        ram = {keys[str(k)]: int(e) for k, e in data.get("ramification", {}).items()}
        return cls(src, tgt, vmap, degree, branch, ram)


def _bijection(cov: SimplicialCover, pre: dict, with_r: bool) -> tuple[list, list]:
    """(copy i, base face) -> lift, or -> a missing slot over a branch vertex."""
    pairs, R = [], []
    branch = set(cov.branch)
    for sigma in cov.target.all_faces():
        lifts = pre[sigma]
        for i in range(cov.degree):
            if i < len(lifts):
                pairs.append({"copy": i, "base": list(sigma), "lift": list(lifts[i])})
            elif with_r and len(sigma) == 1 and sigma[0] in branch:
                slot = {"branch": sigma[0], "slot": i - len(lifts)}
                R.append(slot)
                pairs.append({"copy": i, "base": list(sigma), "missing": slot})
    return pairs, R


def verify_unbranched(cov: SimplicialCover) -> dict:
    if cov.branch:
        raise NotACover("cover has branch vertices; use verify_branched")
    pre = cov.preimages()
    for sigma, lifts in pre.items():
        if len(lifts) != cov.degree:
            raise NotACover(f"{sigma} has {len(lifts)} preimages, expected {cov.degree}")
    pairs, _ = _bijection(cov, pre, with_r=False)
    X, Yc = cov.target.face_counts(), cov.source.face_counts()
    n = cov.degree
    lifted = sorted(tuple(p["lift"]) for p in pairs)
    checks = {
        "bijective": lifted == sorted(cov.source.all_faces()),
        "euler": euler_char(cov.source) == n * euler_char(cov.target),
        "additive_form": n * X.e_even + Yc.e_odd == n * X.e_odd + Yc.e_even,
    }
    return {
        "degree": n,
        "chi_X": X.euler,
        "chi_Y": Yc.euler,
        "faces_X": list(X.c),
        "faces_Y": list(Yc.c),
        "bijection": pairs,
        "checks": checks,
        "ok": all(checks.values()),
    }


def verify_branched(cov: SimplicialCover) -> tuple[list, dict]:
    pre = cov.preimages()
    n = cov.degree
    branch = set(cov.branch)
    for sigma, lifts in pre.items():
        at_branch = len(sigma) == 1 and sigma[0] in branch
        if at_branch and not 1 <= len(lifts) <= n:
            raise NotABranchedCover(f"branch vertex {sigma[0]} has {len(lifts)} preimages")
        if not at_branch and len(lifts) != n:
            raise NotABranchedCover(f"{sigma} has {len(lifts)} preimages, expected {n}")
    pairs, R = _bijection(cov, pre, with_r=True)
    ram_sum = 0
    for b in cov.branch:
        lifts = [f[0] for f in pre[(b,)]]
        if cov.ramification:
            es = [cov.ramification.get(y, 1) for y in lifts]
            if sum(es) != n:
                raise NotABranchedCover(f"ramification indices over {b} sum to {sum(es)}, not {n}")
            ram_sum += sum(e - 1 for e in es)
        else:
            ram_sum += n - len(lifts)
    lifted = sorted(tuple(p["lift"]) for p in pairs if "lift" in p)
    chi_X, chi_Y = euler_char(cov.target), euler_char(cov.source)
    checks = {
        "bijective": lifted == sorted(cov.source.all_faces()) and len(pairs) == n * sum(cov.target.face_counts().c),
        "euler": chi_Y == n * chi_X - len(R),
        "R_is_ramification": len(R) == ram_sum,
    }
    report = {
        "degree": n,
        "chi_X": chi_X,
        "chi_Y": chi_Y,
        "R_size": len(R),
        "ramification_sum": ram_sum,
        "bijection": pairs,
        "checks": checks,
        "ok": all(checks.values()),
    }
    return R, report


# ---------------------------------------------------------------------------
# Moebius inversion in the face poset
# ---------------------------------------------------------------------------


def mobius_inversion_check(K: SimplicialComplex, depth: int | None = None) -> dict:
    """zeta * (Phi_even - Phi_odd) = delta on every interval of the face poset.

    Phi_k(a, b) counts strict chains a = x_0 < ... < x_k = b (Phi_0 = delta), so
    Phi_even - Phi_odd is the alternating chain count.  It is compared both with delta
    under convolution and with mu from the recursion mu(a,b) = -sum_{a<=c<b} mu(a,c).
    """
    faces = K.all_faces()
    sets = [frozenset(f) for f in faces]
    n = len(faces)
    below = [[j for j in range(n) if sets[i] <= sets[j]] for i in range(n)]
    longest = K.dim + 1
    depth = longest if depth is None else depth
    # chains[k][(i, j)]: strict chains of length k from i to j
    chains = [{(i, i): 1 for i in range(n)}]
    for k in range(1, depth + 1):
        nxt: dict = {}
        for (i, j), c in chains[-1].items():
            for m in below[j]:
                if m != j:
                    nxt[(i, m)] = nxt.get((i, m), 0) + c
        chains.append(nxt)
    truncated = bool(chains[-1]) and depth < longest
    phi = {}
    for k, ck in enumerate(chains):
        for key, c in ck.items():
            phi[key] = phi.get(key, 0) + (-1) ** k * c
    bad = []
    mu: dict = {}
    for i in range(n):
        for j in sorted(below[i], key=lambda j: len(sets[j])):
            mu[(i, j)] = 1 if i == j else -sum(mu[(i, c)] for c in below[i] if c != j and sets[c] <= sets[j])
            conv = sum(phi.get((c, j), 0) for c in below[i] if sets[c] <= sets[j])
            if conv != (1 if i == j else 0) or mu[(i, j)] != phi.get((i, j), 0):
                bad.append((faces[i], faces[j]))
    return {"faces": n, "intervals": len(mu), "depth": depth, "truncated": truncated, "failures": bad, "ok": not bad and not truncated}


# ---------------------------------------------------------------------------
# the bundled shapes
# ---------------------------------------------------------------------------


def point() -> SimplicialComplex:
    return SimplicialComplex([[0]])


def cycle_graph(n: int, prefix: str = "v") -> SimplicialComplex:
    return SimplicialComplex([[f"{prefix}{i}", f"{prefix}{(i + 1) % n}"] for i in range(n)])


def tetrahedron_boundary() -> SimplicialComplex:
    return SimplicialComplex(itertools.combinations(range(4), 3))


def suspension(K: SimplicialComplex, north="N", south="S") -> SimplicialComplex:
    tops = [f for f in K.all_faces() if not any(set(f) < set(g) for g in K.all_faces())]
    return SimplicialComplex([list(f) + [pole] for f in tops for pole in (north, south)])
