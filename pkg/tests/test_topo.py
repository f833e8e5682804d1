from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperzeta import topo
from hyperzeta.errors import NotABranchedCover, NotACover
from hyperzeta.fixtures import load_topology

COMPLEXES, COVERS = load_topology()
SHAPES = {name: topo.SimplicialComplex.from_json(d) for name, d in COMPLEXES.items()}


def test_bundled_euler_characteristics():
    chi = {n: topo.euler_char(K) for n, K in SHAPES.items()}
    assert chi["point"] == 1 and chi["edge"] == 1
    assert chi["triangle_boundary"] == 0 and chi["hexagon"] == 0
    assert chi["tetrahedron_boundary"] == 2 and chi["sphere"] == 2


@pytest.mark.parametrize("name", sorted(COMPLEXES))
def test_subdivision_and_mobius(name):
    K = SHAPES[name]
    if K.dim <= 2:
        assert topo.euler_char(topo.barycentric_subdivision(K)) == topo.euler_char(K)
    assert topo.mobius_inversion_check(K)["ok"]
    assert topo.SimplicialComplex.from_json(K.to_json()).all_faces() == K.all_faces()


@pytest.mark.parametrize("a", sorted(COMPLEXES))
@pytest.mark.parametrize("b", ["point", "hexagon", "sphere"])
def test_additivity(a, b):
    assert topo.euler_char(topo.disjoint_union(SHAPES[a], SHAPES[b])) == topo.euler_char(SHAPES[a]) + topo.euler_char(SHAPES[b])


@pytest.mark.parametrize("name", ["point", "sphere", "hexagon", "tetrahedron_boundary"])
def test_macdonald(name):
    K = SHAPES[name]
    chi = topo.euler_char(K)
    mac = topo.macdonald_series(K, 4)
    assert mac == topo.Series.geometric_power(1, chi, 4)
    # formal exponent negation gives the inverse series
    fc = K.face_counts()
    neg = topo.Series.geometric_power(1, -fc.e_even, 4) * topo.Series.geometric_power(1, fc.e_odd, 4)
    assert mac * neg == topo.Series.one(4)


def test_macdonald_known_values():
    assert [int(c) for c in topo.macdonald_series(SHAPES["point"], 4).coeffs] == [1, 1, 1, 1, 1]
    assert [int(c) for c in topo.macdonald_series(SHAPES["sphere"], 4).coeffs] == [1, 2, 3, 4, 5]


def _cover(name):
    return topo.SimplicialCover.from_json(next(c for c in COVERS if c["name"] == name))


@pytest.mark.parametrize("name,n,chi_x,chi_y", [("hexagon_over_triangle", 2, 0, 0), ("three_points_over_point", 3, 1, 3), ("tetrahedron_identity", 1, 2, 2)])
def test_unbranched(name, n, chi_x, chi_y):
    cov = _cover(name)
    r = topo.verify_unbranched(cov)
    assert r["ok"] and (r["degree"], r["chi_X"], r["chi_Y"]) == (n, chi_x, chi_y)
    lifts = sorted(tuple(p["lift"]) for p in r["bijection"])
    assert lifts == sorted(cov.source.all_faces())
    assert len(r["bijection"]) == n * len(cov.target.all_faces())
    # the branched check with no branch vertices is the same statement
    R, rb = topo.verify_branched(cov)
    assert R == [] and rb["ok"] and rb["bijection"] == r["bijection"]


@pytest.mark.parametrize("name,R_size", [("path_over_edge", 1), ("sphere_over_sphere", 2)])
def test_branched(name, R_size):
    cov = _cover(name)
    R, r = topo.verify_branched(cov)
    assert r["ok"] and len(R) == R_size
    assert r["chi_Y"] == cov.degree * r["chi_X"] - len(R)
    with pytest.raises(NotACover):
        topo.verify_unbranched(cov)


def test_bad_covers_rejected():
    tri = topo.cycle_graph(3)
    with pytest.raises(NotACover):
        topo.verify_unbranched(topo.SimplicialCover(tri, tri, {"v0": "v0", "v1": "v0", "v2": "v1"}, 1))
    hexagon = topo.cycle_graph(6)
    vmap = {f"v{i}": f"v{i % 3}" for i in range(6)}
    with pytest.raises(NotACover):
        topo.verify_unbranched(topo.SimplicialCover(hexagon, tri, vmap, 3))
    with pytest.raises(NotABranchedCover):
        topo.verify_branched(topo.SimplicialCover(hexagon, tri, vmap, 3, branch=["v0"]))


@settings(max_examples=30, deadline=None)
@given(st.integers(3, 9), st.integers(1, 4))
def test_cyclic_covers_of_cycles(m, n):
    src, tgt = topo.cycle_graph(m * n, "s"), topo.cycle_graph(m, "t")
    vmap = {f"s{i}": f"t{i % m}" for i in range(m * n)}
    r = topo.verify_unbranched(topo.SimplicialCover(src, tgt, vmap, n))
    assert r["ok"] and r["chi_Y"] == 0


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 7), st.integers(2, 3))
def test_suspension_branched_at_poles(m, n):
    src = topo.suspension(topo.cycle_graph(m * n, "s"))
    tgt = topo.suspension(topo.cycle_graph(m, "t"))
    vmap = {f"s{i}": f"t{i % m}" for i in range(m * n)} | {"N": "N", "S": "S"}
    R, r = topo.verify_branched(topo.SimplicialCover(src, tgt, vmap, n, branch=["N", "S"]))
    assert r["ok"] and len(R) == 2 * (n - 1)
