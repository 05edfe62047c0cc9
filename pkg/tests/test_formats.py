from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given
from networkx.readwrite.graph6 import n_to_data

from agilesets.formats import (
    Graph6Error,
    _encode_size,
    graph_from_json,
    graph_to_json,
    parse_graph6,
    read_graph,
    serialize_graph6,
)
from agilesets.graph import Graph
from agilesets.generators import gnp

from .oracles import nx_graph
from .strategies import graphs


def test_decode_star():
    # independently decoded with networkx: a star centred at 4
    g = parse_graph6("D?{")
    assert g.n == 5
    assert g.edge_list() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_single_vertex():
    assert parse_graph6("@") == Graph(1, frozenset())
    assert serialize_graph6(Graph(1, frozenset())) == b"@"


def test_k4_code():
    assert serialize_graph6(Graph.complete(4)) == b"C~"


@pytest.mark.parametrize("bad", ["D?", "", "D?{{", "C\x7f", "C "])
def test_malformed(bad):
    with pytest.raises(Graph6Error) as err:
        parse_graph6(bad)
    assert "byte offset" in str(err.value)


def test_header_and_newline_accepted():
    assert parse_graph6(b">>graph6<<C~\n") == Graph.complete(4)


@pytest.mark.parametrize("n", [0, 1, 62, 63, 100])
def test_path_codes_match_networkx(n):
    g = Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    assert serialize_graph6(g) == nx.to_graph6_bytes(nx_graph(g), header=False).strip()


@pytest.mark.parametrize("n", [0, 62, 63, 258047, 258048, 10**6])
def test_size_headers_match_networkx(n):
    assert _encode_size(n) == bytes(x + 63 for x in n_to_data(n))


def test_random_round_trip_500():
    rng = random.Random(2024)
    for _ in range(500):
        g = gnp(rng.randint(1, 40), rng.random(), rng)
        code = serialize_graph6(g)
        assert parse_graph6(code) == g
        assert code == nx.to_graph6_bytes(nx_graph(g), header=False).strip()


@given(graphs(max_n=12))
def test_json_round_trip(g):
    assert graph_from_json(graph_to_json(g)) == g
    assert read_graph(graph_to_json(g)) == g
    assert read_graph(serialize_graph6(g)) == g
