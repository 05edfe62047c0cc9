from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings

from agilesets.graph import (
    Graph,
    GraphError,
    components,
    cut_vertices,
    is_connected,
    is_internally_3_connected,
    is_k_connected,
    normal_spanning_tree,
)
from agilesets.models import MinorModel, minor_from_operations, validate_minor_model
from agilesets.separations import Separation, nested, order2_separations, separations_of_order, torso

from .oracles import brute_separating_vertices, brute_separations, nx_graph
from .strategies import graphs


def two_triangles():
    return Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def subdivided_k4():
    # K4 on 0..3, edge (i, j) subdivided by a new vertex
    edges = []
    for x, (i, j) in enumerate(itertools.combinations(range(4), 2), start=4):
        edges += [(i, x), (x, j)]
    return Graph.from_edges(10, edges)


class TestBasics:
    def test_edges_are_normalised(self):
        g = Graph.from_edges(3, [(2, 0), (1, 0)])
        assert g.edge_list() == [(0, 1), (0, 2)]
        assert g.neighbors(0) == [1, 2]

    @pytest.mark.parametrize("bad", [[(0, 0)], [(0, 3)], [(-1, 0)]])
    def test_rejects_loops_and_out_of_range(self, bad):
        with pytest.raises(GraphError):
            Graph.from_edges(3, bad)

    def test_components_examples(self):
        assert components(Graph.complete(4)) == [frozenset(range(4))]
        assert components(Graph.from_edges(4, [(0, 1), (2, 3)])) == [frozenset({0, 1}), frozenset({2, 3})]
        assert components(Graph(3, frozenset())) == [frozenset({0}), frozenset({1}), frozenset({2})]

    @given(graphs(max_n=8))
    def test_components_match_networkx(self, g):
        ours = sorted(sorted(c) for c in components(g))
        theirs = sorted(sorted(c) for c in nx.connected_components(nx_graph(g)))
        assert ours == theirs
        assert is_connected(g) == nx.is_connected(nx_graph(g))


class TestCutVertices:
    def test_examples(self):
        assert cut_vertices(Graph.path(3)) == {1}
        assert cut_vertices(Graph.cycle(4)) == frozenset()
        assert cut_vertices(two_triangles()) == {2}

    def test_disconnected_raises(self):
        with pytest.raises(GraphError):
            cut_vertices(Graph.from_edges(4, [(0, 1), (2, 3)]))

    @given(graphs(max_n=8, connected=True))
    def test_matches_brute_force(self, g):
        assert cut_vertices(g) == brute_separating_vertices(g)


class TestContraction:
    def test_c4_to_c3(self):
        h, mp = Graph.cycle(4).contract_edge(0, 1)
        assert nx.is_isomorphic(nx_graph(h), nx.cycle_graph(3))
        assert mp == [0, 0, 1, 2]

    def test_k4_to_k3(self):
        h, _ = Graph.complete(4).contract_edge(1, 3)
        assert h == Graph.complete(3)

    def test_star_pendant(self):
        star = Graph.from_edges(5, [(0, i) for i in range(1, 5)])
        h, _ = star.contract_edge(0, 4)
        assert h == Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])

    def test_non_edge_raises(self):
        with pytest.raises(GraphError):
            Graph.path(3).contract_edge(0, 2)

    @given(graphs(min_n=2, max_n=7))
    def test_matches_networkx(self, g):
        if not g.edges:
            return
        u, v = g.edge_list()[0]
        h, mp = g.contract_edge(u, v)
        ref = nx.contracted_nodes(nx_graph(g), u, v, self_loops=False)
        ref = nx.relabel_nodes(ref, {x: mp[x] for x in ref.nodes})
        assert sorted(h.edge_list()) == sorted(tuple(sorted(e)) for e in ref.edges())


class TestTorso:
    def test_whole_graph(self):
        g = two_triangles()
        h, keep = torso(g, g.vertices, [])
        assert h == g and keep == list(g.vertices)

    def test_k23_leaf_gives_triangle(self):
        k23 = Graph.from_edges(5, [(h, l) for h in (0, 1) for l in (2, 3, 4)])
        h, keep = torso(k23, {0, 1, 2}, {0, 1})
        assert keep == [0, 1, 2]
        assert h == Graph.complete(3)

    def test_path_ends(self):
        h, _ = torso(Graph.path(3), {0, 2}, {0, 2})
        assert h == Graph.from_edges(2, [(0, 1)])

    def test_interface_outside_part(self):
        with pytest.raises(GraphError):
            torso(Graph.path(3), {0, 1}, {2})


class TestNormalSpanningTree:
    def assert_normal(self, g, t):
        tg = t.as_graph()
        assert nx.is_tree(nx_graph(tg))
        assert set(tg.edges) <= set(g.edges)
        for u, v in g.edge_list():
            assert t.comparable(u, v)

    def test_tree_input(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        t = normal_spanning_tree(g, root=3)
        assert t.as_graph() == g
        assert t.root == 3 and t.parent[3] == -1

    def test_c4_is_hamiltonian_path(self):
        for root in range(4):
            t = normal_spanning_tree(Graph.cycle(4), root)
            self.assert_normal(Graph.cycle(4), t)
            assert max(t.depth) == 3

    def test_k4_is_path(self):
        t = normal_spanning_tree(Graph.complete(4))
        assert sorted(t.depth) == [0, 1, 2, 3]

    def test_disconnected_raises(self):
        with pytest.raises(GraphError):
            normal_spanning_tree(Graph(2, frozenset()))

    @given(graphs(max_n=9, connected=True))
    def test_every_edge_is_comparable(self, g):
        self.assert_normal(g, normal_spanning_tree(g))


class TestSeparations:
    def test_k4_has_none(self):
        assert order2_separations(Graph.complete(4)) == []

    def test_c4_diagonals(self):
        seps = order2_separations(Graph.cycle(4))
        assert {s.separator for s in seps} == {frozenset({0, 2}), frozenset({1, 3})}
        assert len(seps) == 4

    def test_k23_hub_separator(self):
        k23 = Graph.from_edges(5, [(h, l) for h in (0, 1) for l in (2, 3, 4)])
        seps = order2_separations(k23)
        assert {s.separator for s in seps} == {frozenset({0, 1})}
        # three leaves split 1|2 three ways, both orientations
        assert len(seps) == 6

    def test_not_2_connected_names_cut_vertex(self):
        with pytest.raises(GraphError, match="2 is a cut vertex"):
            order2_separations(two_triangles())

    @given(graphs(min_n=3, max_n=7, connected=True))
    @settings(max_examples=60)
    def test_match_brute_force(self, g):
        ours = {(s.A, s.B) for s in separations_of_order(g, 2)}
        assert ours == brute_separations(g, 2)

    def test_nested_examples(self):
        s = Separation.of({0, 1, 2}, {2, 3})
        assert nested(s, s.inverse)
        c4 = order2_separations(Graph.cycle(4))
        a = next(x for x in c4 if x.separator == {0, 2})
        b = next(x for x in c4 if x.separator == {1, 3})
        assert not nested(a, b)
        # chain along a path 0-1-2-3-4
        left = Separation.of({0, 1}, {1, 2, 3, 4})
        right = Separation.of({0, 1, 2, 3}, {3, 4})
        assert left <= right and nested(left, right)


class TestMinorModels:
    def test_identity_k4(self):
        k4 = Graph.complete(4)
        assert validate_minor_model(k4, MinorModel.of(k4, {i: {i} for i in range(4)})) == (True, None)

    def test_c4_to_k3(self):
        model = MinorModel.of(Graph.complete(3), {0: {0, 1}, 1: {2}, 2: {3}})
        assert validate_minor_model(Graph.cycle(4), model) == (True, None)

    def test_overlap(self):
        model = MinorModel.of(Graph.complete(3), {0: {0, 1}, 1: {1, 2}, 2: {3}})
        ok, why = validate_minor_model(Graph.cycle(4), model)
        assert not ok and why == "disjointness"

    @pytest.mark.parametrize("seed", range(20))
    def test_operations_give_valid_models(self, seed):
        rng = random.Random(seed)
        g = Graph.from_edges(8, [e for e in itertools.combinations(range(8), 2) if rng.random() < 0.4])
        ops = []
        h = g
        for _ in range(4):
            if h.edges and rng.random() < 0.5:
                e = rng.choice(h.edge_list())
                kind = rng.choice(["contract", "delete-edge"])
                ops.append((kind, e))
                h = h.contract_edge(*e)[0] if kind == "contract" else h.delete_edge(*e)
            elif h.n > 1:
                v = rng.randrange(h.n)
                ops.append(("delete-vertex", v))
                h = h.delete_vertices([v])[0]
        minor, model = minor_from_operations(g, ops)
        assert minor == h
        assert validate_minor_model(g, model) == (True, None)


class TestInternally3Connected:
    def test_examples(self):
        assert is_internally_3_connected(Graph.complete(4))
        assert is_internally_3_connected(subdivided_k4())
        assert not is_internally_3_connected(Graph.cycle(6))

    def test_adjacent_subdivision_vertices_rejected(self):
        # subdividing one K4 edge twice
        g = Graph.from_edges(6, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)])
        assert not is_internally_3_connected(g)

    @given(graphs(min_n=4, max_n=7))
    def test_3_connected_graphs_qualify(self, g):
        if is_k_connected(g, 3):
            assert is_internally_3_connected(g)
            assert nx.node_connectivity(nx_graph(g)) >= 3
