"""Hypothesis strategies for small graphs."""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from agilesets.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=7, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = {e for e, k in zip(pairs, keep) if k}
    if connected:
        # a random spanning tree keeps the graph connected
        for v in range(1, n):
            u = draw(st.integers(0, v - 1))
            edges.add((u, v))
    return Graph.from_edges(n, edges)
