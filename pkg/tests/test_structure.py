from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from alpha_spectra.enumeration import all_connected_graphs, all_trees
from alpha_spectra.families import Cycle, complete, cycle, make_ank, make_gnk, make_gpsq, path, star
from alpha_spectra.graph import GraphError, new_graph
from alpha_spectra.structure import (
    BRUTE_MAX_EDGES,
    block_decomposition,
    count_cut_vertices,
    count_cut_vertices_brute,
    is_matching,
    is_regular,
    is_tree,
    leg_from,
    matching_number,
    matching_number_brute,
    max_degree,
    min_degree,
    pendent_paths,
)

from conftest import connected_graphs, random_connected


def test_blocks_examples():
    bd = block_decomposition(path(4))
    assert len(bd.blocks) == 3 and bd.cut_vertices == {1, 2}
    bd = block_decomposition(complete(5))
    assert bd.blocks == (frozenset(range(5)),) and not bd.cut_vertices
    bd = block_decomposition(make_gnk(7, 3))
    assert sorted(len(b) for b in bd.blocks) == [2, 2, 2, 4]
    assert len(bd.cut_vertices) == 3


def test_blocks_reject_disconnected():
    with pytest.raises(GraphError):
        block_decomposition(new_graph(4, [(0, 1), (2, 3)]))


@given(connected_graphs(min_n=2, max_n=10))
@settings(max_examples=100, deadline=None)
def test_block_invariants(g):
    bd = block_decomposition(g)
    for u, v in g.edges():
        assert sum(1 for b in bd.blocks if u in b and v in b) == 1
    for v in range(g.n):
        in_blocks = sum(1 for b in bd.blocks if v in b)
        assert (v in bd.cut_vertices) == (in_blocks >= 2)


def test_cut_vertex_examples():
    assert count_cut_vertices(cycle(8)) == 0
    assert all(count_cut_vertices(path(n)) == max(n - 2, 0) for n in range(1, 10))
    assert count_cut_vertices(make_gnk(9, 4)) == 4
    assert count_cut_vertices_brute(make_gnk(9, 4)) == 4


def test_cut_vertices_match_brute_force_corpus():
    for n in range(1, 8):
        for g in all_connected_graphs(n):
            assert count_cut_vertices(g) == count_cut_vertices_brute(g)


def test_cut_vertices_match_networkx(rng):
    for _ in range(200):
        g = random_connected(rng.randint(2, 14), rng.random() * 0.3, rng)
        ref = nx.Graph(list(g.edges()))
        assert count_cut_vertices(g) == len(set(nx.articulation_points(ref)))
        ours = sorted(sorted(b) for b in block_decomposition(g).blocks)
        theirs = sorted(sorted(b) for b in nx.biconnected_components(ref))
        assert ours == theirs


def test_matching_examples():
    assert matching_number(path(4)).size == 2
    assert all(matching_number(star(n)).size == 1 for n in range(2, 9))
    assert matching_number(make_ank(10, 4)).size == 4
    assert matching_number(cycle(5)).size == 2
    assert matching_number_brute(complete(4)) == 2
    assert matching_number(new_graph(1)).size == 0


def test_matching_witness_valid():
    for g in (cycle(9), complete(7), make_gnk(10, 5), make_ank(11, 5)):
        res = matching_number(g)
        assert is_matching(g, res.edges)
        assert len(res.edges) == res.size <= g.n // 2


def test_brute_budget():
    with pytest.raises(GraphError):
        matching_number_brute(complete(8))
    assert complete(7).m <= BRUTE_MAX_EDGES


def test_matching_agrees_with_brute_trees_and_graphs():
    for n in range(1, 11):
        for t in all_trees(n):
            assert matching_number(t).size == matching_number_brute(t)
    for n in range(1, 8):
        for g in all_connected_graphs(n):
            if g.m <= BRUTE_MAX_EDGES:
                assert matching_number(g).size == matching_number_brute(g)


def test_matching_agrees_with_networkx_blossoms(rng):
    # odd cycles hanging off each other force blossom contraction
    for _ in range(300):
        g = random_connected(rng.randint(2, 18), rng.random() * 0.4, rng)
        ref = nx.max_weight_matching(nx.Graph(list(g.edges())), maxcardinality=True)
        assert matching_number(g).size == len(ref)


def test_pendent_path_examples():
    pps = pendent_paths(star(5))
    assert len(pps) == 4 and all(p.anchor == 0 and len(p) == 1 for p in pps)
    pps = pendent_paths(make_gnk(7, 3))
    assert len(pps) == 3 and all(len(p) == 1 for p in pps)
    assert {p.anchor for p in pps} == {0, 1, 2}
    pp = make_gpsq(Cycle(3), 3, 0, 2)
    pps = pendent_paths(pp.graph)
    assert sorted(len(p) for p in pps) == [2, 3]
    assert all(p.anchor == pp.v for p in pps)
    by_len = {len(p): p.vertices for p in pps}
    assert by_len[3] == pp.u_path and by_len[2] == pp.v_path


def test_pendent_paths_pure_path_and_cycle():
    (pp,) = pendent_paths(path(5))
    assert pp.anchor is None and pp.vertices in ((0, 1, 2, 3, 4), (4, 3, 2, 1, 0))
    assert pendent_paths(cycle(5)) == []
    with pytest.raises(GraphError):
        pendent_paths(new_graph(1))


def test_leg_from():
    g = make_gpsq(Cycle(4), 3, 1, 0).graph
    pp = make_gpsq(Cycle(4), 3, 1, 0)
    assert leg_from(g, pp.u, pp.u_path[-1]) == pp.u_path
    assert leg_from(g, 0, 3) is None


def test_ank_has_short_pendent_paths_only():
    for n in range(4, 13):
        for k in range(1, n // 2 + 1):
            pps = pendent_paths(make_ank(n, k))
            if (n, k) == (4, 2):
                # A(4,2) is P_4 itself, reported as one unanchored path
                assert pps[0].anchor is None
                continue
            assert all(len(p) <= 2 for p in pps)


def test_degree_helpers():
    assert is_regular(cycle(7)) and max_degree(cycle(7)) == 2
    assert not is_regular(path(3)) and max_degree(path(3)) == 2 and min_degree(path(3)) == 1
    assert max_degree(make_ank(9, 3)) == 6
    assert is_tree(make_ank(9, 3)) and not is_tree(cycle(4))
