import networkx as nx
import pytest
from hypothesis import given

from interval_completion.generators import cycle, dagger_aw, path
from interval_completion.graph import (Graph, ParseError, connected_components, edge, induced, is_module,
                                       parse_graph, serialize_graph, shortest_path)
from strategies import graphs


def test_edge_list_c4():
    g = parse_graph("4\n0 1\n1 2\n2 3\n3 0", "edge_list")
    assert g.n == 4
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_graph6_matches_networkx_decoder():
    g = parse_graph("D?{", "graph6")
    ref = nx.from_graph6_bytes(b"D?{")
    assert g.n == 5
    assert g.edges() == sorted(tuple(sorted(e)) for e in ref.edges())
    assert serialize_graph(g, "graph6") == "D?{"


def test_self_loop_reports_offset():
    with pytest.raises(ParseError) as err:
        parse_graph("2\n0 0", "edge_list")
    assert err.value.offset == 2


@pytest.mark.parametrize("text", ["", "x", "3\n0 1 2", "3\n0 5", "3\n0 1\n1 0", "-1"])
def test_malformed_edge_lists(text):
    with pytest.raises(ParseError):
        parse_graph(text, "edge_list")


def test_bad_graph6_byte():
    with pytest.raises(ParseError):
        parse_graph("D?\x01", "graph6")


def test_serialize_small_cases():
    assert serialize_graph(cycle(4), "edge_list").strip().count("\n") == 4
    assert serialize_graph(Graph.empty(3), "edge_list") == "3\n"


@given(graphs(max_n=10))
def test_round_trip_both_formats(g):
    for fmt in ("edge_list", "graph6"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


@given(graphs(min_n=1, max_n=10))
def test_graph6_agrees_with_networkx(g):
    ref = nx.from_graph6_bytes(serialize_graph(g, "graph6").encode())
    assert sorted(tuple(sorted(e)) for e in ref.edges()) == g.edges()


def test_induced_keeps_id_map():
    sub, ids = induced(cycle(5), [1, 2, 3])
    assert ids == [1, 2, 3]
    assert sub.edges() == path(3).edges()
    whole, _ = induced(cycle(5), range(5))
    assert whole == cycle(5)


def test_induced_frame_of_dagger():
    lab = dagger_aw(4)
    r = lab.roles
    frame = [r["s"], r["c"], r["l"], lab.base[0], lab.base[-1], r["r"]]
    sub, ids = induced(lab.graph, frame)
    # s-c, c-h, c-t, l-h, t-r
    assert sub.m == 5


def test_is_module_examples():
    c4 = cycle(4)
    assert is_module(c4, [2])
    assert is_module(c4, [0, 2])
    assert not is_module(path(4), [1, 2])


def test_components():
    assert connected_components(cycle(4)) == [[0, 1, 2, 3]]
    two = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert len(connected_components(two)) == 2
    assert connected_components(Graph.empty(3)) == [[0], [1], [2]]


@given(graphs(min_n=2, max_n=9))
def test_shortest_path_matches_networkx(g):
    ref = nx.Graph(g.edges())
    ref.add_nodes_from(range(g.n))
    p = shortest_path(g, 0, g.n - 1, g.all_mask)
    if nx.has_path(ref, 0, g.n - 1):
        assert p is not None and len(p) - 1 == nx.shortest_path_length(ref, 0, g.n - 1)
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))
    else:
        assert p is None


def test_edge_normalizes_and_rejects_loops():
    assert edge(3, 1) == (1, 3)
    with pytest.raises(ValueError):
        edge(2, 2)
