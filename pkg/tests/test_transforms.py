from __future__ import annotations

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from alpha_spectra.canon import canonical_code, is_isomorphic
from alpha_spectra.enumeration import all_trees
from alpha_spectra.families import Complete, Cycle, make_gpsq, path, spider, star
from alpha_spectra.graph import check_invariants, is_connected, new_graph
from alpha_spectra.spectral import ALPHA_GRID, spectral_radius, spectral_radius_oracle
from alpha_spectra.structure import matching_number
from alpha_spectra.transforms import (
    ShiftSpec,
    TransformError,
    check_shift,
    find_leg,
    rebalance_pendent_paths,
    shift_neighbors,
    split_pendent_path,
    split_sites,
)
from alpha_spectra.verify import theorem1_grid

from conftest import connected_graphs


def test_shift_star_leaf_construction():
    g = star(4)
    h = shift_neighbors(g, ShiftSpec(v=0, u=1, moved={2}))
    assert is_isomorphic(h, path(4))
    x = spectral_radius(g, 0.0).x
    assert x[1] < x[0]  # Perron hypothesis fails, nothing claimed


def test_shift_p4_midpoint():
    g = path(4)
    h = shift_neighbors(g, ShiftSpec(v=1, u=2, moved={0}))
    assert is_isomorphic(h, star(4))
    x = spectral_radius(g, 0.0).x
    assert abs(x[1] - x[2]) <= 1e-12
    assert spectral_radius_oracle(h, 0.0) > spectral_radius_oracle(g, 0.0) + 1e-8


def test_shift_merges_two_cliques_onto_one_cut_vertex():
    k4 = [(a, b) for a in range(4) for b in range(a + 1, 4)]
    g = new_graph(8, k4 + [(a + 4, b + 4) for a, b in k4] + [(3, 4)])
    x = spectral_radius(g, 0.0).x
    assert abs(x[3] - x[4]) <= 1e-12
    h = shift_neighbors(g, ShiftSpec(v=4, u=3, moved={5, 6, 7}))
    for a in ALPHA_GRID:
        assert spectral_radius_oracle(h, a) > spectral_radius_oracle(g, a) + 1e-8


@pytest.mark.parametrize("spec", [
    ShiftSpec(1, 1, {0}),
    ShiftSpec(1, 2, set()),
    ShiftSpec(1, 2, {3}),
    ShiftSpec(1, 2, {2}),
    ShiftSpec(1, 9, {0}),
])
def test_shift_preconditions(spec):
    with pytest.raises(TransformError):
        check_shift(path(4), spec)


def test_shift_blocks_moved_onto_existing_neighbour():
    g = new_graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    with pytest.raises(TransformError):
        shift_neighbors(g, ShiftSpec(v=0, u=1, moved={2}))


def test_shift_disconnection_detected():
    with pytest.raises(TransformError, match="disconnects"):
        shift_neighbors(path(4), ShiftSpec(v=0, u=3, moved={1}))


@given(connected_graphs(min_n=3, max_n=8), st.sampled_from(ALPHA_GRID), st.data())
@settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_shift_raises_radius_when_hypothesis_holds(g, a, data):
    v = data.draw(st.integers(0, g.n - 1))
    u = data.draw(st.integers(0, g.n - 1))
    assume(u != v)
    cand = [w for w in g.adj[v] if w != u and not g.has_edge(u, w)]
    assume(cand)
    moved = data.draw(st.sets(st.sampled_from(cand), min_size=1))
    res = spectral_radius(g, a)
    assume(res.x[u] >= res.x[v] - 1e-12)
    try:
        h = shift_neighbors(g, ShiftSpec(v, u, moved))
    except TransformError:
        return
    check_invariants(h)
    assert is_connected(h) and h.m == g.m
    assert spectral_radius(h, a).rho > res.rho + 1e-9


def test_rebalance_examples():
    out = rebalance_pendent_paths(make_gpsq(Cycle(3), 3, 0, 1))
    assert (out.p, out.s, out.q) == (2, 0, 2)
    assert canonical_code(out.graph) == canonical_code(make_gpsq(Cycle(3), 2, 0, 2).graph)
    for core, p, s in ((Cycle(4), 4, 1), (Cycle(5), 5, 2)):
        before = make_gpsq(core, p, s, 1)
        after = rebalance_pendent_paths(before)
        assert (after.p, after.q) == (p - 1, 2)
        for a in ALPHA_GRID:
            assert spectral_radius_oracle(after.graph, a) > spectral_radius_oracle(before.graph, a)


def test_rebalance_labels_consistent():
    out = rebalance_pendent_paths(make_gpsq(Complete(4), 6, 2, 1))
    g = out.graph
    assert len(out.u_path) == 5 and len(out.v_path) == 2
    assert g.degree(out.u_path[0]) == 1 and g.degree(out.v_path[0]) == 1
    for a, b in zip(out.v_path, out.v_path[1:]):
        assert g.has_edge(a, b)
    assert g.has_edge(out.v_path[-1], out.v)
    assert g.has_edge(out.u_path[-1], out.u)


def test_rebalance_hypothesis_guard():
    with pytest.raises(TransformError, match="p - q >= max"):
        rebalance_pendent_paths(make_gpsq(Cycle(4), 3, 2, 1))
    with pytest.raises(TransformError):
        rebalance_pendent_paths(make_gpsq(Cycle(3), 2, 0, 1))


def test_rebalance_matches_direct_construction_on_grid():
    for core, p, s, q in theorem1_grid():
        out = rebalance_pendent_paths(make_gpsq(core, p, s, q))
        assert canonical_code(out.graph) == canonical_code(make_gpsq(core, p - 1, s, q + 1).graph)
        assert is_connected(out.graph)


def test_split_p7():
    t = path(7)
    h = split_pendent_path(t, 2, 4)
    assert is_isomorphic(h, spider(2, 2, 2))
    assert matching_number(h).size == matching_number(t).size == 3
    for a in ALPHA_GRID:
        assert spectral_radius_oracle(h, a) > spectral_radius_oracle(t, a)


def test_split_spider_leg():
    t = spider(1, 1, 4)
    h = split_pendent_path(t, 0, 4)
    assert is_isomorphic(h, spider(1, 1, 2, 2))
    assert matching_number(h).size == matching_number(t).size
    assert h.n == t.n


def test_split_guards():
    with pytest.raises(TransformError):
        split_pendent_path(path(6), 2, 3)
    with pytest.raises(TransformError):
        split_pendent_path(path(6), 0, 4)
    with pytest.raises(TransformError):
        split_pendent_path(make_gpsq(Cycle(3), 4, 0, 0).graph, 0, 4)
    with pytest.raises(TransformError):
        find_leg(spider(1, 1, 4), 0, 5)


def test_split_all_trees_up_to_9():
    for n in range(5, 10):
        for t in all_trees(n):
            sites = split_sites(t)
            if not sites:
                continue
            rho = spectral_radius(t, 0.5).rho
            for v, p in sites:
                h = split_pendent_path(t, v, p)
                assert h.n == t.n and matching_number(h).size == matching_number(t).size
                assert spectral_radius(h, 0.5).rho > rho + 1e-9
