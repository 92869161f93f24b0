from decimal import Decimal, getcontext

import pytest

from conftest import TETRA
from ringelsurf import (NotAClosedSurface, NotDCovered, build, check_closed_surface, classify,
                        covered_core, covered_degrees, d_bound, equivelar_degree,
                        euler_characteristic, genus, heawood_min_vertices, is_neighborly,
                        orientability, q_bound, ringel, stack)
from ringelsurf.embedded import load


def test_closed_tetra(tetra):
    assert check_closed_surface(tetra) is None


def test_missing_facet():
    d = check_closed_surface(build(TETRA[:-1]))
    assert d.kind == "edge"
    edge, count = d.witness
    assert count == 1


def test_pinched_tetrahedra():
    other = [[1, 5, 6], [1, 5, 7], [1, 6, 7], [5, 6, 7]]
    d = check_closed_surface(build(TETRA + other))
    assert d.kind == "link"
    v, comps = d.witness
    assert v == 1 and len(comps) == 2


def test_disjoint_tetrahedra():
    other = [[a + 10 for a in f] for f in TETRA]
    d = check_closed_surface(build(TETRA + other))
    assert d.kind == "disconnected"
    assert d.witness == [4, 4]


def test_empty():
    assert check_closed_surface(build([])).kind == "empty"


def test_edge_in_three_facets():
    d = check_closed_surface(build(TETRA + [[1, 2, 5], [1, 5, 3], [2, 5, 3]]))
    assert d.kind == "edge" and d.witness[1] == 3


def test_tetra_invariants(tetra):
    assert euler_characteristic(tetra) == 2
    assert orientability(tetra).orientable
    assert genus(tetra) == 0


def test_rp2(rp2):
    assert check_closed_surface(rp2) is None
    r = classify(rp2)
    assert (r.chi, r.orientable, r.genus) == (1, False, 1)
    assert r.equivelar_degree == 5 and r.neighborly


def test_e13_e1():
    r = classify(load("E13").triangulation)
    assert (r.chi, r.orientable, r.genus) == (-64, True, 33)
    r = classify(load("E1").triangulation)
    assert (r.chi, r.orientable, r.genus) == (-7, False, 9)


def _check_orientation(T, orientation):
    arcs = {}
    for f in T.facets:
        a, b, c = orientation[f]
        assert {a, b, c} == set(f)
        for arc in ((a, b), (b, c), (c, a)):
            assert arc not in arcs
            arcs[arc] = f
    for a, b in list(arcs):
        assert (b, a) in arcs


def _shares_edge(f, g):
    return len(set(f) & set(g)) == 2


@pytest.mark.parametrize("seed", [None, 0, 1, 2, 3, 4])
def test_orientation_assignment_is_consistent(seed):
    T = ringel(1, 21)
    o = orientability(T, seed=seed)
    assert o.orientable
    _check_orientation(T, o.orientation)


@pytest.mark.parametrize("seed", [None, 0, 1, 2, 3, 4])
def test_conflict_certificate_is_closed_facet_path(rp2, seed):
    for T in (rp2, load("E1").triangulation):
        o = orientability(T, seed=seed)
        assert not o.orientable
        path = o.conflict
        assert path[0] == path[-1] and len(path) >= 3
        assert all(_shares_edge(f, g) for f, g in zip(path, path[1:]))
        # carrying an orientation along the loop must come back reversed
        a, b, c = path[0]
        cur = (a, b, c)
        for g in path[1:]:
            shared = set(cur) & set(g)
            arcs = [(cur[i], cur[(i + 1) % 3]) for i in range(3)]
            x, y = next(arc for arc in arcs if set(arc) == shared)
            z = next(v for v in g if v not in shared)
            cur = (y, x, z)
        start_arcs = {(a, b), (b, c), (c, a)}
        assert (cur[0], cur[1]) not in start_arcs


def test_orientability_requires_surface():
    with pytest.raises(NotAClosedSurface):
        orientability(build(TETRA[:-1]))
    with pytest.raises(NotAClosedSurface):
        classify(build(TETRA[:-1]))


def test_equivelar_and_neighborly(moebius_torus, tetra):
    assert equivelar_degree(moebius_torus) == 6 and is_neighborly(moebius_torus)
    R = ringel(1, 19)
    assert equivelar_degree(R) == 18 and is_neighborly(R)
    S = stack(tetra)
    assert equivelar_degree(S) is None and not is_neighborly(S)


def test_covered_degrees(tetra, moebius_torus, octahedron):
    assert covered_degrees(tetra) == {3}
    assert covered_core(tetra, 3).min_degree_h == 3
    assert 6 in covered_degrees(moebius_torus)
    assert 12 in covered_degrees(stack(moebius_torus))
    assert covered_degrees(octahedron) == {4}


def test_covered_core_of_stacked_torus(moebius_torus):
    core = covered_core(stack(moebius_torus), 12)
    assert core.h_vertices == frozenset(range(7))
    assert core.f1 == 21 and core.min_degree_h == 6


def test_covered_core_rejects_invalid_d(tetra):
    with pytest.raises(NotDCovered):
        covered_core(tetra, 4)
    with pytest.raises(NotDCovered):
        covered_core(stack(tetra), 3)


def _heawood_oracle(chi):
    # least n with C(n,2) >= 3(n - chi)
    n = 4
    while n * (n - 1) // 2 < 3 * (n - chi):
        n += 1
    return n


def _qbound_oracle(chi):
    # largest q with q <= 6 - 6 chi/(q+1), i.e. q^2 - 5q - 6 + 6 chi <= 0
    q = 0
    while (q + 1) ** 2 - 5 * (q + 1) - 6 + 6 * chi <= 0:
        q += 1
    return q


def test_heawood_examples():
    assert heawood_min_vertices(2) == 4
    assert heawood_min_vertices(0) == 7
    assert heawood_min_vertices(-10) == 12
    assert heawood_min_vertices(-1) == 8


def test_heawood_matches_oracle():
    for chi in range(2, -2001, -1):
        assert heawood_min_vertices(chi) == _heawood_oracle(chi), chi


def test_bounds_examples():
    assert (q_bound(-2), d_bound(-2)) == (7, 14)
    assert q_bound(-60) == 21
    assert (q_bound(1), d_bound(1)) == (5, 10)
    assert (q_bound(2), d_bound(2)) == (5, 10)
    assert q_bound(0) == 6


def test_qbound_matches_oracles():
    getcontext().prec = 60
    for chi in range(0, -2001, -1):
        exact = q_bound(chi)
        assert exact == _qbound_oracle(chi)
        approx = int((5 + Decimal(49 - 24 * chi).sqrt()) / 2)
        assert exact == approx


def test_bounds_are_exact_for_huge_chi():
    # perfect squares of 49 - 24 chi sit exactly on a floor boundary
    for s in (10**20 + 1, 10**30 + 7, 2**100 + 1):
        if (s * s - 49) % 24 or s % 2 == 0:
            continue
        chi = -((s * s - 49) // 24)
        assert q_bound(chi) == (5 + s) // 2
        assert heawood_min_vertices(chi) == (7 + s + 1) // 2
        assert q_bound(chi - 1) == (5 + s) // 2
        assert q_bound(chi + 1) == (3 + s) // 2


def test_classify_e19():
    r = classify(load("E19").triangulation)
    assert r.fvec == (30, 420, 280)
    assert (r.chi, r.orientable, r.genus, r.equivelar_degree, r.q_tight) == (-110, True, 56, 28, True)


def test_classify_ringel_1_20():
    r = classify(ringel(1, 20))
    assert (r.chi, r.orientable, r.genus, r.equivelar_degree, r.q_tight) == (-40, True, 21, 18, True)
    assert not r.neighborly


def test_classify_stacked_e19():
    r = classify(stack(load("E19").triangulation))
    assert r.chi == -110
    assert 56 in r.covered_degrees
    assert r.d_tight_witnesses == {56}


def test_report_dict_keys(tetra):
    d = classify(tetra).to_dict()
    assert list(d) == ["fvec", "chi", "orientable", "genus", "equivelar_degree", "neighborly",
                       "covered_degrees", "min_degree", "heawood_min", "q_bound", "d_bound",
                       "q_tight", "d_tight_witnesses"]
    assert d["covered_degrees"] == [3]
