from __future__ import annotations

import random

import networkx as nx
import pytest

from agilesets.graph import Graph, GraphError, is_connected
from agilesets.generators import (
    complete_bipartite,
    counterexample_graph,
    diagonal_dexterous_instance,
    fan,
    gnp,
    grid,
    grid_magile_instance,
    ladder,
    regular_strip,
    strip,
    wheel,
)
from agilesets.strips import StripError, StripSpec, counterexample_strip_spec, regular_strip_spec

from .oracles import nx_graph


def iso(g, h):
    return nx.is_isomorphic(nx_graph(g), h if isinstance(h, nx.Graph) else nx_graph(h))


class TestCompleteBipartite:
    def test_k23(self):
        lg = complete_bipartite(2, 3)
        assert (lg.graph.n, lg.graph.num_edges) == (5, 6)
        assert lg["hubs"] == {0, 1} and lg["leaves"] == {2, 3, 4}
        assert iso(lg.graph, nx.complete_bipartite_graph(2, 3))

    def test_single_edge(self):
        assert complete_bipartite(1, 1).graph == Graph.from_edges(2, [(0, 1)])

    def test_rejects_zero(self):
        with pytest.raises(GraphError):
            complete_bipartite(0, 3)


class TestCounterexample:
    def test_counts_n9(self):
        lg = counterexample_graph(9)
        # 9 red edges, 7 white edges, 8 + 8 diagonals
        assert (lg.graph.n, lg.graph.num_edges) == (18, 32)
        assert len(lg["red"]) == 10 and len(lg["white"]) == 8

    @pytest.mark.parametrize("n", range(3, 12))
    def test_count_formula(self, n):
        assert counterexample_graph(n).graph.num_edges == n + (n - 2) + 2 * (n - 1)

    def test_white_vertex_neighbourhoods(self):
        n = 9
        g = counterexample_graph(n).graph
        for i in range(1, n):
            w = n + i
            expected = {i - 1, i + 1} | {n + j for j in (i - 1, i + 1) if 1 <= j <= n - 1}
            assert set(g.neighbors(w)) == expected

    def test_matches_strip_spec(self):
        for n in range(3, 11):
            spec = counterexample_strip_spec(n)
            assert spec.graph == counterexample_graph(n).graph

    def test_small_n_rejected(self):
        with pytest.raises(GraphError):
            counterexample_graph(2)


class TestRegularStrip:
    def test_counts_k9(self):
        g = regular_strip(9).graph
        assert (g.n, g.num_edges) == (18, 32)

    def test_k2_is_c4(self):
        assert iso(regular_strip(2).graph, nx.cycle_graph(4))

    def test_matches_strip_spec(self):
        for k in range(2, 9):
            assert regular_strip_spec(k).graph == regular_strip(k).graph

    @pytest.mark.parametrize("n", [4, 6, 9])
    def test_embeds_in_counterexample(self, n):
        # v_j -> r_{j+1}, w_j -> w_{j+1} (0-based j) is a subgraph embedding for k <= n - 1
        host = counterexample_graph(n).graph
        for k in range(2, n):
            phi = {j: 1 + j for j in range(k)} | {k + j: n + 1 + j for j in range(k)}
            for u, v in regular_strip(k).graph.edge_list():
                assert host.has_edge(phi[u], phi[v]), (k, u, v)

    def test_rejects_k1(self):
        with pytest.raises(GraphError):
            regular_strip(1)


class TestFanAndStrip:
    def test_fan_two_far_chords(self):
        lg = fan(6, [2, 4])
        assert lg.info["length"] == 2
        assert lg.graph.num_edges == 8
        assert lg["corners"] == {5, 0, 1}

    def test_fan_no_chords_is_cycle(self):
        lg = fan(7, [])
        assert lg.graph == Graph.cycle(7)
        assert lg.info["length"] == 0

    @pytest.mark.parametrize("bad", [[1], [6], [0], [9], [3, 3]])
    def test_fan_rejects(self, bad):
        with pytest.raises(GraphError):
            fan(7, bad)

    def test_regular_strip_crossings(self):
        spec = regular_strip_spec(4)
        assert len(spec.crossing_pairs()) == 3
        assert strip(spec).info["crossing_pairs"] == 3

    def test_chordless_strip_is_cycle(self):
        spec = StripSpec(cycle=tuple(range(6)), ab=(0, 1), cd=(3, 4))
        assert spec.graph == Graph.cycle(6)
        assert spec.crossing_pairs() == [] and spec.length == 0

    def test_chord_crossed_twice_rejected(self):
        # cycle 0..7, P1 = 0,7,6,5 and P2 = 1,2,3,4; chord (7,3) is crossed by (6,2) and (0,4)
        with pytest.raises(StripError, match="more than one"):
            StripSpec(cycle=tuple(range(8)), ab=(0, 1), cd=(4, 5), chords=((7, 3), (6, 2), (0, 4)))

    def test_unbraced_crossing_rejected(self):
        with pytest.raises(StripError, match="braced"):
            StripSpec(cycle=tuple(range(10)), ab=(0, 1), cd=(5, 6), chords=((9, 4), (7, 2)))

    def test_chord_within_one_path_rejected(self):
        with pytest.raises(StripError, match="join the two paths"):
            StripSpec(cycle=tuple(range(8)), ab=(0, 1), cd=(4, 5), chords=((1, 3),))

    def test_counterexample_strip_length(self):
        spec = counterexample_strip_spec(9)
        assert len(spec.crossing_pairs()) == 7
        assert spec.length == 7


class TestLadderAndGrids:
    def test_ladder_counts(self):
        assert ladder(5).graph.num_edges == 13
        for n in range(2, 9):
            assert ladder(n).graph.num_edges == 3 * n - 2
            assert iso(ladder(n).graph, nx.ladder_graph(n))

    def test_ladder_2_clique_ends_is_k4(self):
        assert ladder(2, clique_ends=True).graph == Graph.complete(4)

    def test_grid_counts(self):
        g = grid(3, 7).graph
        assert (g.n, g.num_edges) == (21, 32)
        assert iso(grid(3, 7).graph, nx.grid_2d_graph(3, 7))

    def test_grid_degenerate(self):
        assert grid(1, 5).graph == Graph.path(5)
        assert iso(grid(2, 2).graph, nx.cycle_graph(4))

    def test_grid_magile_shapes(self):
        lg = grid_magile_instance(2, 3)
        assert (lg.info["rows"], lg.info["cols"]) == (3, 5)
        assert lg["agile"] == {5, 7, 9}
        lg = grid_magile_instance(2, 2)
        assert (lg.info["rows"], lg.info["cols"]) == (3, 3)
        assert lg["agile"] == {3, 5}

    def test_diagonal_n2(self):
        lg = diagonal_dexterous_instance(2)
        assert lg.graph.n == 16
        assert lg["dexterous"] == {0, 10}


class TestWheel:
    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_classical_wheel(self, n):
        lg = wheel([], 1, [0], [0], n)
        assert iso(lg.graph, nx.wheel_graph(n + 1))
        assert lg["hub"] == {n}

    def test_prism(self):
        lg = wheel([(0, 1)], 0, [0, 1], [], 4)
        assert iso(lg.graph, nx.circular_ladder_graph(4))

    def test_twisted_closure(self):
        # swapping the two rails on wrap-around gives a Moebius ladder
        lg = wheel([(0, 1)], 0, [1, 0], [], 4)
        assert iso(lg.graph, nx.circulant_graph(8, [1, 4]))

    @pytest.mark.parametrize(
        "args",
        [([(0, 1)], 0, [0, 0], [], 4), ([(0, 1)], 1, [0, 1], [5], 4), ([], 0, [0, 1], [], 4), ([], 0, [0], [], 2)],
    )
    def test_rejects(self, args):
        with pytest.raises(GraphError):
            wheel(*args)


def test_gnp_connected():
    rng = random.Random(1)
    for _ in range(20):
        assert is_connected(gnp(8, 0.3, rng, connected=True))
