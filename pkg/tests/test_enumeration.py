from __future__ import annotations

import itertools

import networkx as nx
import pytest

from agilesets.enumeration import connected_graphs, connected_graphs_upto
from agilesets.graph import is_connected

from .oracles import nx_graph

# OEIS A001349
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(connected_graphs(n)) == CONNECTED_COUNTS[n - 1]


def test_counts_match_graph_atlas():
    atlas = [g for g in nx.graph_atlas_g() if g.number_of_nodes() > 0 and nx.is_connected(g)]
    for n in range(1, 8):
        assert len(connected_graphs(n)) == sum(1 for g in atlas if g.number_of_nodes() == n)


@pytest.mark.parametrize("n", range(1, 7))
def test_connected_and_pairwise_non_isomorphic(n):
    gs = connected_graphs(n)
    assert all(is_connected(g) and g.n == n for g in gs)
    for a, b in itertools.combinations(gs, 2):
        assert not nx.is_isomorphic(nx_graph(a), nx_graph(b))


def test_deterministic_order():
    assert connected_graphs(5) == tuple(sorted(connected_graphs(5), key=lambda g: (g.num_edges, g.edge_list())))
    assert len(connected_graphs_upto(5)) == sum(CONNECTED_COUNTS[:5])
    assert connected_graphs(0) == ()
