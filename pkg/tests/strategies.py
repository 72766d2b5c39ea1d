"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from interval_completion.generators import interval_graph
from interval_completion.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def interval_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    spans = []
    for _ in range(n):
        a = draw(st.integers(0, 2 * n))
        spans.append((a, a + draw(st.integers(0, n))))
    return interval_graph(spans)
