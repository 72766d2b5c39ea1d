import random

import pytest
from hypothesis import given

from interval_completion.errors import ObstructionError
from interval_completion.generators import (cycle, dagger_aw, double_dagger_aw, long_claw, net, path,
                                            small_aw_templates, tent, whipping_top)
from interval_completion.graph import Graph, edge, induced, to_mask
from interval_completion.interval import is_chordal, is_interval
from interval_completion.obstructions import (AWKind, Hole, aw_from_at, branch_edges, find_at, find_hole,
                                              find_obstruction, find_small_obstruction, is_at, is_hole,
                                              long_aw_branch_edges, minimal_hole_fills, small_aw_branch_edges)
from interval_completion.oracle import brute_minimal_hole_fills, has_at_brute, is_chordal_brute
from strategies import graphs, interval_graphs


# -- holes ------------------------------------------------------------------

def test_find_hole_examples():
    assert find_hole(cycle(4)) == Hole((0, 1, 2, 3))
    tree = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert find_hole(tree) is None
    split_c6 = cycle(6).add_edges([(0, 3)])
    assert len(find_hole(split_c6)) == 4


@given(graphs(max_n=8))
def test_find_hole_iff_not_chordal(g):
    h = find_hole(g)
    assert (h is None) == is_chordal_brute(g)
    if h is not None:
        assert is_hole(g, h.vertices)


@pytest.mark.parametrize("n, count", [(4, 2), (5, 5), (6, 14)])
def test_fill_counts(n, count):
    fills = minimal_hole_fills(tuple(range(n)))
    assert len(fills) == count
    assert {len(f) for f in fills} == {n - 3}
    assert count <= 4 ** (n - 2)


def test_c4_fills_are_the_diagonals():
    assert minimal_hole_fills(Hole((0, 1, 2, 3))) == [frozenset({(0, 2)}), frozenset({(1, 3)})]


def test_fills_use_hole_labels():
    fills = minimal_hole_fills((10, 11, 12, 13, 14))
    assert fills == brute_minimal_hole_fills((10, 11, 12, 13, 14))


def test_fills_reject_short_cycles():
    with pytest.raises(ObstructionError):
        minimal_hole_fills((0, 1, 2))


# -- asteroidal triples -------------------------------------------------------

def test_find_at_on_long_claw():
    lab = long_claw()
    r = lab.roles
    assert sorted(find_at(lab.graph)) == sorted((r["t1"], r["t2"], r["t3"]))


@given(interval_graphs())
def test_interval_graphs_have_no_at(g):
    assert find_at(g) is None


def test_c6_triple_is_asteroidal():
    t = find_at(cycle(6))
    assert t is not None and is_at(cycle(6), t)


@given(graphs(max_n=8))
def test_find_at_agrees_with_brute_force(g):
    assert (find_at(g) is not None) == has_at_brute(g)


# -- asteroidal witnesses ---------------------------------------------------

def test_aw_from_at_long_claw():
    lab = long_claw()
    r = lab.roles
    w = aw_from_at(lab.graph, (r["t1"], r["t2"], r["t3"]))
    assert w.kind == AWKind.LONG_CLAW
    assert w.c == r["c"]
    assert sorted(w.terminals) == sorted((r["t1"], r["t2"], r["t3"]))


def test_aw_from_at_long_dagger():
    lab = dagger_aw(4)
    r = lab.roles
    w = aw_from_at(lab.graph, (r["s"], r["l"], r["r"]))
    assert w.kind == AWKind.LONG_DAGGER
    assert w.base in (lab.base, lab.base[::-1])
    f = w.frame
    assert (f.s, f.c1, f.c2) == (r["s"], r["c"], r["c"])
    assert {f.h, f.t} == {lab.base[0], lab.base[-1]}


def test_aw_from_at_net():
    lab = net(2)
    r = lab.roles
    w = aw_from_at(lab.graph, (r["s"], r["l"], r["r"]))
    assert w.kind == AWKind.NET and w.d == 2


def test_aw_from_at_returns_inner_witness_for_subdivided_net():
    # net with one leg subdivided: the triple's own witness is not minimal
    lab = net(2)
    g = lab.graph
    extra = g.n
    g2 = Graph.from_edges(g.n + 1, g.edges() + [(lab.roles["l"], extra)])
    w = aw_from_at(g2, (extra, lab.roles["s"], lab.roles["r"]))
    sub, ids = induced(g2, w.vertices)
    assert not is_interval(sub)
    assert all(is_interval(g2, [v for v in w.vertices if v != x]) for x in w.vertices)


@pytest.mark.parametrize("name", sorted(small_aw_templates()))
def test_templates_are_minimal_forbidden(name):
    g = small_aw_templates()[name].graph
    assert is_chordal(g) and not is_interval(g)
    for v in range(g.n):
        assert is_interval(g, [u for u in range(g.n) if u != v])


@pytest.mark.parametrize("name, kind", [("long_claw", AWKind.LONG_CLAW), ("whipping_top", AWKind.WHIPPING_TOP),
                                        ("net2", AWKind.NET), ("net3", AWKind.NET), ("tent1", AWKind.TENT),
                                        ("tent2", AWKind.TENT), ("tent3", AWKind.TENT)])
def test_small_obstruction_kinds(name, kind):
    w = find_small_obstruction(small_aw_templates()[name].graph)
    assert w.kind == kind
    assert w.expected_edges() == set(induced_edges(small_aw_templates()[name].graph, w.vertices))


def induced_edges(g, vs):
    vs = set(vs)
    return [e for e in g.edges() if e[0] in vs and e[1] in vs]


def test_find_small_obstruction_examples():
    assert find_small_obstruction(cycle(5)) == Hole((0, 1, 2, 3, 4))
    assert find_small_obstruction(tent(1).graph).kind == AWKind.TENT
    assert find_small_obstruction(dagger_aw(4).graph) is None
    assert find_obstruction(dagger_aw(4).graph).kind == AWKind.LONG_DAGGER
    assert find_obstruction(double_dagger_aw(5).graph).kind == AWKind.LONG_DOUBLE_DAGGER


def test_long_dagger_has_no_small_induced_obstruction():
    g = dagger_aw(4).graph
    for v in range(g.n):
        rest = g.all_mask & ~(1 << v)
        assert find_small_obstruction(g, rest) is None
        assert is_interval(g, rest)


def test_reduced_random_graphs_have_only_long_aws():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(6, 9)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        obs = find_obstruction(g)
        assert (obs is None) == is_interval(g)
        if obs is not None and find_small_obstruction(g) is None:
            assert obs.is_long


# -- branch sets ---------------------------------------------------------------

@pytest.mark.parametrize("name, size", [("long_claw", 6), ("whipping_top", 4), ("net2", 6), ("net3", 6),
                                        ("tent1", 3), ("tent2", 4), ("tent3", 6)])
def test_small_branch_widths(name, size):
    g = small_aw_templates()[name].graph
    w = find_small_obstruction(g)
    edges = small_aw_branch_edges(w)
    assert len(edges) == size
    assert not any(g.has_edge(*e) for e in edges)


def test_long_branch_edges_dagger():
    lab = dagger_aw(4)
    r = lab.roles
    w = aw_from_at(lab.graph, (r["s"], r["l"], r["r"]))
    b1, b2, b3, b4 = lab.base
    s, c, l, rr = r["s"], r["c"], r["l"], r["r"]
    expected = {edge(l, c), edge(c, rr), edge(b1, b4), edge(s, b1), edge(s, b2), edge(s, b3), edge(s, b4)}
    assert set(long_aw_branch_edges(w.frame, w.base)) == expected


def test_long_branch_edges_double_dagger():
    lab = double_dagger_aw(4)
    r = lab.roles
    w = aw_from_at(lab.graph, (r["s"], r["l"], r["r"]))
    edges = long_aw_branch_edges(w.frame, w.base)
    assert len(edges) == 7
    assert w.frame.c1 != w.frame.c2
    assert edge(r["l"], r["c2"]) in edges and edge(r["c1"], r["r"]) in edges


def test_long_branch_edges_reject_short_base():
    w = find_small_obstruction(net(3).graph)
    with pytest.raises(ObstructionError):
        long_aw_branch_edges(w.frame, w.base)


@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_long_branch_edges_count(d):
    for lab in (dagger_aw(d), double_dagger_aw(d)):
        r = lab.roles
        w = aw_from_at(lab.graph, (r["s"], r["l"], r["r"]))
        assert len(branch_edges(w)) == d + 3
