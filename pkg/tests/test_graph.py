from __future__ import annotations

import json
import math
import random
from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from oracles import brute_isomorphic, edge_set, floyd_warshall, graphs, max_independent_size
from pegkit.graphs import (
    Graph,
    GraphError,
    automorphisms,
    canonical_form,
    cartesian_product,
    complement,
    complete,
    complete_multipartite,
    components,
    contains_induced,
    cycle,
    diameter,
    disjoint_union,
    distance_matrix,
    dpm1_a,
    dpm1_b,
    dumps_graph,
    empty,
    enumerate_graphs,
    find_p4,
    girth,
    graph_from_dict,
    graph_hash,
    graph_to_dict,
    hoffman_singleton,
    hypercube,
    independence_number,
    is_connected,
    is_isomorphic,
    join,
    ld3_extremal,
    ld3_labels,
    loads_graph,
    make_family,
    path,
    spider,
    star,
    to_mask,
    vertex_edge_diameter,
)


# --- construction and validation ---------------------------------------------------


def test_rejects_asymmetric_adjacency():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))


def test_rejects_self_loop():
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(0, 0)])


def test_rejects_stray_high_bits():
    with pytest.raises(GraphError):
        Graph(1, (0b10,))


def test_rejects_out_of_range_edge():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_capacity_is_64_vertices():
    assert empty(64).n == 64
    with pytest.raises(GraphError):
        empty(65)


def test_to_mask_accepts_masks_and_iterables():
    assert to_mask([0, 2]) == 0b101
    assert to_mask(0b101) == 0b101


# --- JSON ---------------------------------------------------------------------------


@given(graphs(max_n=8))
def test_json_round_trip(g):
    assert loads_graph(dumps_graph(g)) == g


def test_json_normal_form():
    g = Graph.from_edges(3, [(2, 1), (1, 0)], name="P3")
    assert dumps_graph(g) == '{"edges":[[0,1],[1,2]],"n":3,"name":"P3"}'


@pytest.mark.parametrize(
    "payload",
    [
        {"n": 3, "edges": [[1, 0]]},
        {"n": 3, "edges": [[1, 2], [0, 1]]},
        {"n": 3, "edges": [[0, 1], [0, 1]]},
        {"n": 3, "edges": [[1, 1]]},
        {"n": 3, "edges": [[0, 3]]},
        {"n": 3, "edges": [], "colour": "red"},
        {"edges": []},
        {"n": -1, "edges": []},
    ],
)
def test_json_reader_rejects_violations(payload):
    with pytest.raises((GraphError, ValueError, TypeError, KeyError)):
        graph_from_dict(payload)


def test_json_writer_omits_missing_name():
    assert "name" not in graph_to_dict(Graph.from_edges(2, [(0, 1)]))
    assert json.loads(dumps_graph(cycle(4)))["name"] == "C4"


# --- families -----------------------------------------------------------------------


@pytest.mark.parametrize("n", range(3, 10))
def test_cycle_is_two_regular_and_connected(n):
    g = cycle(n)
    assert all(g.degree(v) == 2 for v in range(n)) and is_connected(g)


def test_hypercube_three():
    g = make_family("hypercube", [3])
    assert g.n == 8 and all(g.degree(v) == 3 for v in range(8))
    assert diameter(g) == 3
    # bipartite by parity of the coordinate sum
    assert all(bin(u).count("1") % 2 != bin(v).count("1") % 2 for u, v in g.edges())


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hypercube_is_product_of_edges(n):
    g = complete(2)
    for _ in range(n - 1):
        g = cartesian_product(g, complete(2))
    assert is_isomorphic(g, hypercube(n))


def test_hypercube_adjacency_is_hamming_distance_one():
    g = hypercube(4)
    assert edge_set(g) == {frozenset((u, v)) for u, v in combinations(range(16), 2) if (u ^ v).bit_count() == 1}


def test_hoffman_singleton_parameters():
    g = hoffman_singleton()
    assert g.n == 50 and g.edge_count == 175
    assert all(g.degree(v) == 7 for v in range(50))
    assert girth(g) == 5 and diameter(g) == 2


def test_hoffman_singleton_independence_regression():
    size, witness = independence_number(hoffman_singleton())
    assert size == 15
    g = hoffman_singleton()
    assert len(witness) == 15 and not any(g.has_edge(u, v) for u, v in combinations(witness, 2))


def test_ld3_extremal_two():
    g = ld3_extremal(2)
    assert g.n == 7
    assert ld3_labels(2) == [("v", 1, 1), ("v", 2, 1), ("v", 2, 2), ("v", 2, 3), ("v", 2, 4), ("u", 1, 2), ("u", 2, 1)]
    assert diameter(g) == 3 and independence_number(g)[0] == 2


@pytest.mark.parametrize("alpha", [2, 3, 4])
def test_ld3_extremal_order_and_independence(alpha):
    g = ld3_extremal(alpha)
    assert g.n == 2 * alpha + 1 + alpha * (alpha - 1)
    assert independence_number(g)[0] == alpha
    assert vertex_edge_diameter(g) == 3


def test_ld3_extremal_capacity():
    assert ld3_extremal(7).n <= 64
    with pytest.raises(GraphError):
        ld3_extremal(8)


def test_spider_shape():
    g = spider()
    assert g.n == 7 and diameter(g) == 4
    assert sorted(g.degree(v) for v in range(7)) == [1, 1, 1, 2, 2, 2, 3]


def test_dpm1_b_extends_dpm1_a():
    assert dpm1_b().induced(range(6)) == dpm1_a().with_name(dpm1_b().induced(range(6)).name)
    assert contains_induced(dpm1_b(), dpm1_a()) is not None


def test_join_examples():
    assert is_isomorphic(join(complete(1), complete(3)), complete(4))
    assert is_isomorphic(join(empty(2), empty(2)), cycle(4))
    g = join(path(3), complete(1))
    assert any(g.degree(v) == 3 for v in range(4))


def test_product_examples():
    assert is_isomorphic(cartesian_product(complete(2), complete(2)), cycle(4))
    assert is_isomorphic(cartesian_product(hypercube(2), complete(2)), hypercube(3))
    k33 = cartesian_product(complete(3), complete(3))
    assert k33.n == 9 and all(k33.degree(v) == 4 for v in range(9))


@given(graphs(max_n=4), graphs(max_n=4))
def test_product_adjacency_rule(g, h):
    gh = cartesian_product(g, h)
    for (a, b), (c, d) in combinations([(a, b) for a in range(g.n) for b in range(h.n)], 2):
        expected = (a == c and h.has_edge(b, d)) or (b == d and g.has_edge(a, c))
        assert gh.has_edge(a * h.n + b, c * h.n + d) == expected


def test_complete_multipartite_and_star():
    g = complete_multipartite([2, 3])
    assert g.n == 5 and g.edge_count == 6
    assert independence_number(g)[0] == 3
    s = star(3)
    assert s.degree(0) == 3 and s.edge_count == 3


@given(graphs(max_n=7))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


def test_unknown_family():
    with pytest.raises(GraphError):
        make_family("petersen", [])
    with pytest.raises(GraphError):
        make_family("cycle", [])


def test_family_names_accept_hyphens():
    assert make_family("hoffman-singleton").n == 50


# --- metrics ------------------------------------------------------------------------


@given(graphs(max_n=8))
def test_distance_matrix_matches_floyd_warshall(g):
    assert distance_matrix(g) == floyd_warshall(g)


def test_distance_examples():
    assert distance_matrix(path(4))[0][3] == 3
    assert max(max(row) for row in distance_matrix(hoffman_singleton())) == 2
    assert distance_matrix(disjoint_union(complete(2), complete(2)))[0][2] == math.inf


def test_vertex_edge_diameter_examples():
    claw = star(3)
    assert vertex_edge_diameter(claw) == 1
    assert vertex_edge_diameter(Graph.from_edges(4, claw.edges() + [(1, 2)])) == 2
    assert diameter(cycle(6)) == 3 and vertex_edge_diameter(cycle(6)) == 2


def test_vertex_edge_diameter_needs_edges_and_connectivity():
    with pytest.raises(GraphError):
        vertex_edge_diameter(empty(1))
    with pytest.raises(GraphError):
        diameter(empty(2))


@given(graphs(min_n=2, max_n=7, connected=True))
def test_vertex_edge_diameter_brackets(g):
    d = floyd_warshall(g)
    oracle = max(min(d[t][u], d[t][v]) for t in range(g.n) for u, v in g.edges())
    assert vertex_edge_diameter(g) == oracle
    assert diameter(g) - 1 <= oracle <= diameter(g)


@given(graphs(max_n=10))
def test_independence_number_matches_brute_force(g):
    size, witness = independence_number(g)
    assert size == max_independent_size(g)
    assert len(witness) == size and not any(g.has_edge(u, v) for u, v in combinations(witness, 2))


def test_independence_examples():
    assert independence_number(hypercube(3))[0] == 4
    assert independence_number(complete(5))[0] == 1


def test_components_and_girth():
    g = disjoint_union(cycle(3), path(2))
    assert len(components(g)) == 2 and girth(g) == 3
    assert girth(path(5)) == math.inf


def test_find_p4_examples():
    a, b, c, d = find_p4(cycle(4))
    g = cycle(4)
    assert len({a, b, c, d}) == 4
    assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d)
    assert find_p4(star(3)) is None


def test_find_p4_whenever_order_large_relative_to_independence():
    checked = 0
    for n in range(4, 7):
        for g in enumerate_graphs(n, dedup=True):
            if is_connected(g) and g.n >= 2 * independence_number(g)[0] - 1:
                assert find_p4(g) is not None, dumps_graph(g)
                checked += 1
    assert checked > 100


def test_contains_induced_examples():
    assert contains_induced(cycle(5), path(4)) is not None
    assert contains_induced(complete(4), cycle(4)) is None


@given(graphs(max_n=6), graphs(min_n=1, max_n=4))
def test_contains_induced_matches_brute_force(g, pattern):
    emb = contains_induced(g, pattern)
    brute = any(
        all(g.has_edge(s[a], s[b]) == pattern.has_edge(a, b) for a, b in combinations(range(pattern.n), 2))
        for s in permutations(range(g.n), pattern.n)
    )
    assert (emb is not None) == brute
    if emb is not None:
        assert all(g.has_edge(emb[a], emb[b]) == pattern.has_edge(a, b) for a, b in combinations(range(pattern.n), 2))


# --- isomorphism and enumeration ----------------------------------------------------


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_dedup_class_counts(n, count):
    assert sum(1 for _ in enumerate_graphs(n, dedup=True)) == count


def test_dedup_class_count_seven():
    assert sum(1 for _ in enumerate_graphs(7, dedup=True)) == 1044


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_labelled_counts(n):
    assert sum(1 for _ in enumerate_graphs(n, dedup=False)) == 2 ** (n * (n - 1) // 2)


def test_dedup_classes_are_pairwise_non_isomorphic():
    classes = list(enumerate_graphs(5, dedup=True))
    for g, h in combinations(classes, 2):
        if g.edge_count == h.edge_count:
            assert not brute_isomorphic(g, h)


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        enumerate_graphs(8, dedup=True)


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_is_relabelling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(g)[0] == canonical_form(h)[0]
    assert graph_hash(g) == graph_hash(h)


@given(graphs(max_n=6), graphs(max_n=6))
def test_is_isomorphic_matches_brute_force(g, h):
    assert is_isomorphic(g, h) == brute_isomorphic(g, h)


@given(graphs(min_n=2, max_n=7))
def test_canonical_perm_maps_to_canonical_graph(g):
    code, perm = canonical_form(g)
    relabelled = Graph.from_edges(g.n, [(i, j) for i, j in combinations(range(g.n), 2) if g.has_edge(perm[i], perm[j])])
    assert canonical_form(relabelled)[0] == code


@pytest.mark.parametrize("g,count", [(cycle(5), 10), (complete(4), 24), (path(4), 2), (empty(3), 6), (spider(), 6)])
def test_automorphism_counts(g, count):
    auts = automorphisms(g)
    assert len(auts) == count
    assert all(g.relabel(list(p)) == g.with_name(g.relabel(list(p)).name) for p in auts)


def test_graph_hash_distinguishes_large_labelled_graphs():
    g = hypercube(3)
    assert graph_hash(g) != graph_hash(cycle(8))
    big = path(9)
    assert graph_hash(big) == graph_hash(path(9))


def test_random_relabel_of_hoffman_singleton_keeps_parameters():
    rng = random.Random(3)
    perm = list(range(50))
    rng.shuffle(perm)
    h = hoffman_singleton().relabel(perm)
    assert girth(h) == 5 and diameter(h) == 2
