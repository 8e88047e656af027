from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alpha_spectra.canon import MAX_CANON_N, canonical_code, canonical_form, canonical_order, is_isomorphic
from alpha_spectra.families import complete, cycle, path, star
from alpha_spectra.graph import GraphError, new_graph, relabel

from conftest import connected_graphs, random_connected


def test_p3_relabelings_share_code():
    codes = {canonical_code(relabel(path(3), list(perm))) for perm in itertools.permutations(range(3))}
    assert len(codes) == 1


def test_p4_and_star_differ():
    assert canonical_code(path(4)) != canonical_code(star(4))


def test_all_labelings_of_c6_one_code():
    g = cycle(6)
    codes = {canonical_code(relabel(g, list(perm))) for perm in itertools.permutations(range(6))}
    assert len(codes) == 1


def test_code_starts_with_vertex_count():
    assert canonical_code(complete(4))[0] == 4


def test_canonical_form_is_fixed_point():
    g = path(5)
    f = canonical_form(g)
    assert canonical_form(f) == f
    assert canonical_code(f) == canonical_code(g)
    order = canonical_order(g)
    assert sorted(order) == list(range(5))


def test_size_budget():
    with pytest.raises(GraphError):
        canonical_code(path(MAX_CANON_N + 1))
    canonical_code(complete(MAX_CANON_N))


@given(connected_graphs(max_n=9), st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_code_invariant_under_100_permutations(g, r):
    code = canonical_code(g)
    for _ in range(100):
        perm = list(range(g.n))
        r.shuffle(perm)
        assert canonical_code(relabel(g, perm)) == code


def test_agrees_with_networkx_isomorphism(rng):
    for _ in range(300):
        n = rng.randint(3, 8)
        g = random_connected(n, 0.3, rng)
        h = random_connected(n, 0.3, rng)
        if g.m != h.m:
            continue
        ng, nh = nx.Graph(list(g.edges())), nx.Graph(list(h.edges()))
        assert is_isomorphic(g, h) == nx.is_isomorphic(ng, nh)


def test_regular_nonisomorphic_pair():
    # C6 and two disjoint triangles, both 2-regular
    two_triangles = new_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle(6), two_triangles)
    # two 3-regular graphs on six vertices
    k33 = new_graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    prism = new_graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    assert not is_isomorphic(k33, prism)


def test_vertex_transitive_large():
    rng = random.Random(5)
    g = complete(12)
    perm = list(range(12))
    rng.shuffle(perm)
    assert canonical_code(relabel(g, perm)) == canonical_code(g)
