from hypothesis import given, settings, strategies as st

from ringelsurf import (build, classify, covered_core, covered_degrees, f_vector, ringel, stack,
                        vertex_degrees)
from ringelsurf.verify import euler_characteristic, is_orientable


def test_stack_tetra(tetra):
    S = stack(tetra)
    assert f_vector(S) == (8, 18, 12)
    r = classify(S)
    assert r.chi == 2 and r.orientable
    assert 6 in r.covered_degrees
    # every edge has a degree-6 endpoint: original edges have two, new edges one
    deg = vertex_degrees(S)
    for a, b in S.edges:
        both = (deg[a] == 6) + (deg[b] == 6)
        assert both == (2 if a <= 4 and b <= 4 else 1)


def test_stack_moebius(moebius_torus):
    S = stack(moebius_torus)
    assert f_vector(S) == (21, 63, 42)
    assert euler_characteristic(S) == 0
    assert 12 in covered_degrees(S)


def test_stack_ringel_1_20_is_d_tight():
    r = classify(stack(ringel(1, 20)))
    assert r.d_bound == 36 and r.d_tight_witnesses == {36}


def test_fresh_labels_zero_based(moebius_torus):
    S = stack(moebius_torus)
    new = [v for v in S.vertices if v not in moebius_torus.vertices]
    assert new == list(range(7, 21))
    # the first facet in canonical order gets the first new label
    a, b, c = moebius_torus.facets[0]
    assert (a, b, 7) in S.facets


def test_fresh_labels_after_max_label():
    T = build([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
    S = stack(T)
    assert S.vertices == tuple(range(1, 9))


def test_stack_string_labels():
    S = stack(build([["a", "b", "c"]]))
    assert f_vector(S) == (4, 6, 3)


def test_stack_non_surface_is_allowed():
    S = stack(build([[0, 1, 2], [0, 3, 4]]))
    assert f_vector(S) == (7, 12, 6)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2).flatmap(lambda k: st.tuples(st.just(k), st.integers(7 + 12 * k, 7 + 12 * k + 15))))
def test_stack_properties_on_ringel(args):
    k, n = args
    T = ringel(k, n)
    S = stack(T)
    f0, f1, f2 = f_vector(T)
    assert f_vector(S) == (f0 + f2, f1 + 3 * f2, 3 * f2)
    assert euler_characteristic(S) == euler_characteristic(T)
    assert is_orientable(S) == is_orientable(T)
    q = 6 + 12 * k
    deg = vertex_degrees(S)
    assert all(deg[v] == 2 * q for v in T.vertices)
    assert 2 * q in covered_degrees(S)
    core = covered_core(S, 2 * q)
    assert core.min_degree_h >= q
    assert core.f1 <= 3 * (core.f0 - euler_characteristic(T))
    assert len(set(S.facets)) == len(S.facets) == 3 * f2
    assert len(set(S.vertices)) == f0 + f2


def test_stack_preserves_non_orientability(rp2):
    S = stack(rp2)
    assert not is_orientable(S)
    assert euler_characteristic(S) == 1
