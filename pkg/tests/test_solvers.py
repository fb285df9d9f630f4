from __future__ import annotations

from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings

from oracles import (
    graphs,
    multiset_counts,
    naive_optimal_pegging_number,
    naive_pegging_number,
    naive_reach,
    naive_reach_extended,
    pebble_reachable,
)
from pegkit.engine import BudgetExhausted, MultiDistribution, reach, reach_all_moves
from pegkit.graphs import (
    cartesian_product,
    complete,
    cycle,
    diameter,
    disjoint_union,
    empty,
    hoffman_singleton,
    hypercube,
    is_connected,
    join,
    path,
    spider,
    star,
)
from pegkit.solvers import (
    INFINITY,
    dominating_pair_exists,
    multisets,
    optimal_pebbling_number,
    optimal_peggling_number,
    optimal_pegging_number,
    pebbling_number,
    pebbling_reachable,
    peggling_number,
    pegging_number,
    subsets_colex,
    symmetry_group,
    two_pebbling_number,
)


def naive_every_multi(g, n_max: int) -> int:
    full = frozenset(range(g.n))
    for d in range(1, n_max + 1):
        if all(naive_reach_extended(g, multiset_counts(g.n, c)) == full
               for c in combinations_with_replacement(range(g.n), d)):
            return d
    raise AssertionError


def naive_some_multi(g, n_max: int) -> int:
    full = frozenset(range(g.n))
    for d in range(1, n_max + 1):
        if any(naive_reach_extended(g, multiset_counts(g.n, c)) == full
               for c in combinations_with_replacement(range(g.n), d)):
            return d
    raise AssertionError


def naive_pebbling(g, copies: int, some: bool = False) -> int:
    d = 1
    while True:
        results = (
            all(pebble_reachable(g, multiset_counts(g.n, c), t, copies) for t in range(g.n))
            for c in combinations_with_replacement(range(g.n), d)
        )
        if (any if some else all)(results):
            return d
        d += 1


# --- enumeration helpers --------------------------------------------------------------


def test_subsets_colex():
    assert list(subsets_colex(4, 2)) == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
    assert list(subsets_colex(3, 0)) == [0]
    assert list(subsets_colex(2, 3)) == []


def test_multisets_count():
    assert sum(1 for _ in multisets(4, 3)) == 20
    assert all(sum(c) == 3 for c in multisets(4, 3))


# --- pegging numbers -------------------------------------------------------------------


@pytest.mark.parametrize(
    "g,value",
    [(cycle(5), 3), (path(5), 4), (hypercube(3), 5), (disjoint_union(complete(2), complete(2)), 4),
     (complete(1), 1), (complete(2), 2), (complete(4), 2), (empty(2), 2)],
)
def test_pegging_number_examples(g, value):
    assert pegging_number(g).value == value


@pytest.mark.parametrize(
    "g,value",
    [(cycle(7), 4), (join(path(3), path(3)), 2), (cartesian_product(complete(3), complete(3)), 3),
     (hoffman_singleton(), 4), (path(1), 1), (path(2), 2), (disjoint_union(complete(2), complete(2)), 4)],
)
def test_optimal_pegging_number_examples(g, value):
    result = optimal_pegging_number(g)
    assert result.value == value
    assert len(result.witness) == value
    assert reach(g, result.witness).reachable_mask == g.full_mask


@given(graphs(max_n=6))
@settings(max_examples=40)
def test_pegging_numbers_match_naive(g):
    assert pegging_number(g).value == naive_pegging_number(g)
    assert optimal_pegging_number(g).value == naive_optimal_pegging_number(g)


@given(graphs(min_n=2, max_n=6))
@settings(max_examples=40)
def test_pegging_witness_fails_one_below(g):
    res = pegging_number(g)
    assert len(res.witness) == res.value - 1
    assert naive_reach(g, res.witness) != frozenset(range(g.n))


@given(graphs(max_n=6))
@settings(max_examples=30)
def test_search_options_do_not_change_values(g):
    base = pegging_number(g).value
    assert pegging_number(g, certificates=False).value == base
    assert pegging_number(g, symmetry=True).value == base
    assert pegging_number(g, direct=True).value == base
    opt = optimal_pegging_number(g).value
    assert optimal_pegging_number(g, fast_path=False, symmetry=True).value == opt


def test_hypercube_symmetry_mode_agrees():
    assert pegging_number(hypercube(3), symmetry=True).value == 5


def test_registered_symmetries_are_automorphisms():
    for g in (hypercube(3), hypercube(4), hoffman_singleton()):
        group = symmetry_group(g)
        assert len(group) > 1
        for perm in group:
            assert all(g.has_edge(perm[u], perm[v]) for u, v in g.edges())


def test_pegging_budget_reports_level():
    with pytest.raises(BudgetExhausted) as info:
        pegging_number(hypercube(4), budget=500)
    assert info.value.level is not None


def test_dominating_pair_examples():
    assert dominating_pair_exists(path(4)) == (1, 2)
    assert dominating_pair_exists(cycle(6)) is None
    assert dominating_pair_exists(join(empty(3), path(2))) is not None


@given(graphs(min_n=2, max_n=6, connected=True))
@settings(max_examples=40)
def test_dominating_pair_iff_optimal_two(g):
    assert (optimal_pegging_number(g, fast_path=False).value == 2) == (dominating_pair_exists(g) is not None)


def test_component_formula_against_direct_search():
    g = disjoint_union(complete(2), path(3))
    assert pegging_number(g).value == pegging_number(g, direct=True).value == naive_pegging_number(g)
    assert optimal_pegging_number(g).value == naive_optimal_pegging_number(g)


def test_pegging_json():
    out = pegging_number(cycle(5)).to_json("C5")
    assert out["graph"] == "C5" and out["invariant"] == "P" and out["value"] == 3
    assert pebbling_number(empty(2)).to_json()["value"] == "infinity"


# --- peggling numbers -----------------------------------------------------------------


def test_peggling_examples():
    assert peggling_number(path(4)).value == 5
    assert peggling_number(complete(2)).value == 2
    assert optimal_peggling_number(spider()).value == 3


@pytest.mark.parametrize("g", [path(3), path(4), cycle(4), star(3), complete(3), cycle(5)])
def test_peggling_numbers_match_naive(g):
    assert peggling_number(g).value == naive_every_multi(g, 3 * g.n)
    assert optimal_peggling_number(g).value == naive_some_multi(g, g.n)


def test_peggling_witnesses_replay():
    g = path(4)
    res = peggling_number(g)
    d = MultiDistribution.from_dict(g.n, res.witness)
    assert d.total == res.value - 1 and reach_all_moves(g, d) != g.full_mask
    opt = optimal_peggling_number(spider())
    d = MultiDistribution.from_dict(7, opt.witness)
    assert d.total == 3 and reach_all_moves(spider(), d) == spider().full_mask


def test_peggling_disconnected_is_flagged():
    res = peggling_number(disjoint_union(complete(2), complete(2)))
    assert res.stats["extrapolated"] is True
    assert optimal_peggling_number(disjoint_union(complete(1), complete(2))).value == 3


def test_peggling_cap_raises_budget():
    with pytest.raises(BudgetExhausted):
        peggling_number(path(4), max_total=4)


# --- pebbling numbers -----------------------------------------------------------------


def test_pebbling_reachable_examples():
    assert pebbling_reachable(complete(2), (4, 0), 1, copies=2)
    assert not pebbling_reachable(complete(2), (3, 0), 1, copies=2)
    assert pebbling_reachable(path(3), (4, 0, 0), 2)
    assert pebbling_reachable(path(3), (0, 0, 1), 2)


def test_pebbling_examples():
    assert pebbling_number(path(4)).value == 8
    assert pebbling_number(hypercube(3)).value == 8
    assert optimal_pebbling_number(spider()).value == 4
    assert two_pebbling_number(complete(2)).value == 4


@pytest.mark.parametrize("g", [path(2), path(3), cycle(4), star(3), cycle(5), complete(3)])
def test_pebbling_numbers_match_naive(g):
    assert pebbling_number(g).value == naive_pebbling(g, 1)
    assert two_pebbling_number(g).value == naive_pebbling(g, 2)
    assert optimal_pebbling_number(g).value == naive_pebbling(g, 1, some=True)


def test_pebbling_disconnected_is_infinite():
    assert pebbling_number(empty(2)).value == INFINITY


# --- cross-invariant properties --------------------------------------------------------


@given(graphs(min_n=1, max_n=6))
@settings(max_examples=40)
def test_basic_bounds(g):
    P = pegging_number(g).value
    p = optimal_pegging_number(g).value
    assert p <= P <= g.n
    if is_connected(g) and g.n > 1:
        assert P >= diameter(g)


@given(graphs(min_n=2, max_n=4, connected=True))
@settings(max_examples=15)
def test_peggling_sandwich(g):
    assert pegging_number(g).value <= peggling_number(g).value <= pebbling_number(g).value
    assert optimal_peggling_number(g).value <= min(optimal_pegging_number(g).value, optimal_pebbling_number(g).value)
