import pytest
from hypothesis import given

from interval_completion.generators import cycle, path, tent, twin_shallow_dagger
from interval_completion.graph import Graph, is_module
from interval_completion.interval import is_interval
from interval_completion.oracle import (ExceedsKmax, all_interval_supergraphs, brute_min_completion,
                                        brute_minimal_hole_fills, enumerate_minimum_supergraphs,
                                        interval_orders, is_interval_brute)
from strategies import graphs


def test_minimums_of_small_graphs():
    assert brute_min_completion(path(5)).min_size == 0
    assert brute_min_completion(cycle(5)).min_size == 2
    assert brute_min_completion(tent(1).graph).min_size == 1


def test_kmax_is_enforced():
    with pytest.raises(ExceedsKmax):
        brute_min_completion(cycle(6), kmax=2)
    with pytest.raises(ExceedsKmax):
        brute_min_completion(cycle(6), kmax=2, method="subsets")


@given(graphs(max_n=6))
def test_profile_matches_subset_search(g):
    a = brute_min_completion(g)
    b = brute_min_completion(g, method="subsets")
    assert a.min_size == b.min_size
    assert is_interval(g.add_edges(a.one_witness))
    assert len(a.one_witness) == a.min_size


@given(graphs(max_n=6))
def test_every_enumerated_supergraph_is_a_minimum(g):
    best = brute_min_completion(g).min_size
    every = enumerate_minimum_supergraphs(g)
    assert every and all(len(s) == best and is_interval_brute(g.add_edges(s)) for s in every)
    assert len(set(every)) == len(every)


@given(graphs(max_n=5))
def test_enumeration_is_complete(g):
    best = brute_min_completion(g).min_size
    every = set(enumerate_minimum_supergraphs(g))
    assert every == {s for s in all_interval_supergraphs(g) if len(s) == best}


def test_enumeration_on_holes():
    assert enumerate_minimum_supergraphs(cycle(4)) == [frozenset({(0, 2)}), frozenset({(1, 3)})]
    five = enumerate_minimum_supergraphs(cycle(5))
    assert len(five) == 5 and {len(s) for s in five} == {2}
    assert five == brute_minimal_hole_fills(range(5))


def test_disconnected_module_can_be_broken():
    lab = twin_shallow_dagger(4, terminal_twins=1)
    pair = [lab.roles["s1"], lab.roles["s2"]]
    g = lab.graph
    assert is_module(g, pair)
    every = enumerate_minimum_supergraphs(g)
    assert len(every) == 18
    assert sum(not is_module(g.add_edges(s), pair) for s in every) == 12


def test_single_terminal_drawing_breaks_module_only_above_minimum():
    lab = twin_shallow_dagger(5)
    g, s1, s2, base = lab.graph, lab.roles["s1"], lab.roles["s2"], lab.base
    every = enumerate_minimum_supergraphs(g)
    assert [len(s) for s in every] == [1, 1]
    assert all(is_module(g.add_edges(s), [s1, s2]) for s in every)
    wider = g.add_edges([(s1, base[0]), (s2, base[2])])
    assert is_interval(wider) and not is_module(wider, [s1, s2])


def test_brute_hole_fill_counts():
    assert len(brute_minimal_hole_fills(range(4))) == 2
    assert [len(f) for f in brute_minimal_hole_fills(range(5))] == [2] * 5
    seven = brute_minimal_hole_fills(range(7))
    assert len(seven) == 42 and {len(f) for f in seven} == {4}
    assert 42 <= 4 ** 5


def test_interval_orders_of_a_path():
    # left-endpoint orders of P3 models: the middle vertex never comes last among the ends' order
    orders = interval_orders(path(3), (0, 1, 2))
    assert (0, 1, 2) in orders and (2, 1, 0) in orders
    assert (0, 2, 1) not in orders


def test_interval_orders_of_non_interval_graph_is_empty():
    assert interval_orders(cycle(4), (0, 1)) == set()


def test_as_dict():
    body = brute_min_completion(cycle(4), enumerate_all=True).as_dict()
    assert body["k_used"] == 1 and body["all_minimum"] == 2
    assert Graph.from_edges(4, cycle(4).edges() + [tuple(e) for e in body["inserted_edges"]])
