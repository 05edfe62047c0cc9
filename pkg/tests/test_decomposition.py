from __future__ import annotations

import itertools
import random

import pytest

from agilesets.decomposition import (
    CrossingReport,
    TreeDecomposition,
    decompose_along_order2,
    nested_family_check,
    torso_3connectivity_report,
    torsos,
    tree_decomposition_from_nested,
)
from agilesets.graph import Graph, GraphError, cut_vertices
from agilesets.generators import complete_bipartite, gnp
from agilesets.separations import Separation, order2_separations

K23 = complete_bipartite(2, 3).graph


def closed(seps):
    return list(seps) + [s.inverse for s in seps]


class TestNestedCheck:
    def test_k23_is_nested(self):
        assert nested_family_check(order2_separations(K23)) is None

    def test_c4_crosses(self):
        report = nested_family_check(order2_separations(Graph.cycle(4)))
        assert isinstance(report, CrossingReport)
        assert {report.s.separator, report.t.separator} == {frozenset({0, 2}), frozenset({1, 3})}
        # every vertex of C4 lies in one of the two separators, so the quadrant interiors are empty
        assert report.nonempty == []
        assert all(report.corners.values())

    def test_path_chain(self):
        seps = [Separation.of(range(i + 1), range(i, 6)) for i in range(1, 5)]
        assert nested_family_check(closed(seps)) is None


class TestConstruction:
    def test_empty_family(self):
        g = Graph.cycle(5)
        td = tree_decomposition_from_nested(g, [])
        assert td.tree.n == 1 and td.bags == (frozenset(range(5)),)

    def test_single_separation(self):
        g = Graph.path(3)
        s = Separation.of({0, 1}, {1, 2})
        td = tree_decomposition_from_nested(g, [s, s.inverse])
        assert sorted(map(sorted, td.bags)) == [[0, 1], [1, 2]]
        assert td.tree.num_edges == 1

    def test_k23_star(self):
        td = tree_decomposition_from_nested(K23, order2_separations(K23))
        centre = max(td.tree.vertices, key=td.tree.degree)
        assert td.tree.degree(centre) == 3
        assert td.bags[centre] == {0, 1}
        leaves = sorted(sorted(td.bags[t]) for t in td.tree.vertices if t != centre)
        assert leaves == [[0, 1, 2], [0, 1, 3], [0, 1, 4]]

    def test_crossing_input_rejected(self):
        with pytest.raises(GraphError, match="cross"):
            tree_decomposition_from_nested(Graph.cycle(4), order2_separations(Graph.cycle(4)))

    def test_missing_inverse_rejected(self):
        with pytest.raises(GraphError, match="involution"):
            tree_decomposition_from_nested(Graph.path(3), [Separation.of({0, 1}, {1, 2})])

    def test_invalid_separation_rejected(self):
        with pytest.raises(GraphError):
            s = Separation.of({0, 1}, {2, 3})
            tree_decomposition_from_nested(Graph.path(4), [s, s.inverse])

    @pytest.mark.parametrize("seed", range(30))
    def test_round_trip(self, seed):
        rng = random.Random(seed)
        while True:
            g = gnp(rng.randint(5, 9), 0.35, rng, connected=True)
            if not cut_vertices(g):
                seps = order2_separations(g)
                if seps and nested_family_check(seps) is None:
                    break
        td = tree_decomposition_from_nested(g, seps)
        assert td.violation(g) is None
        assert set(td.induced_separations()) == set(seps)


class TestTorsos:
    def test_single_bag(self):
        g = Graph.cycle(5)
        assert torsos(g, tree_decomposition_from_nested(g, [])) == [g]

    def test_path_chain_gives_edges(self):
        g = Graph.path(4)
        seps = closed([Separation.of({0, 1}, {1, 2, 3}), Separation.of({0, 1, 2}, {2, 3})])
        td = tree_decomposition_from_nested(g, seps)
        assert [t.edge_list() for t in torsos(g, td)] == [[(0, 1)]] * 3

    def test_order2_chain_completes_adhesions(self):
        # both separators are the non-edge {0,2}, so every torso gains the edge 0-2
        g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 2), (2, 4), (4, 5), (5, 0)])
        seps = closed([Separation.of({0, 1, 2}, {0, 2, 3, 4, 5}), Separation.of({0, 1, 2, 3}, {0, 2, 4, 5})])
        td = tree_decomposition_from_nested(g, seps)
        out = {tuple(sorted(td.bags[t])): torsos(g, td)[t] for t in td.tree.vertices}
        assert out[(0, 1, 2)] == Graph.complete(3)
        assert out[(0, 2, 3)] == Graph.complete(3)
        assert out[(0, 2, 4, 5)] == Graph.cycle(4)

    def test_k23_leaf_torsos_are_triangles(self):
        td = tree_decomposition_from_nested(K23, order2_separations(K23))
        for t, h in zip(td.tree.vertices, torsos(K23, td)):
            if len(td.bags[t]) == 3:
                assert h == Graph.complete(3)

    def test_invalid_td(self):
        bad = TreeDecomposition(Graph(1, frozenset()), (frozenset({0, 1}),))
        with pytest.raises(GraphError):
            torsos(Graph.path(3), bad)


class TestDecompose:
    def test_k4(self):
        td = decompose_along_order2(Graph.complete(4))
        assert td.bags == (frozenset(range(4)),)
        assert torso_3connectivity_report(Graph.complete(4), td)[0]["status"] == "3-connected"

    def test_k23(self):
        td = decompose_along_order2(K23)
        assert td.tree.n == 4
        assert {r["status"] for r in torso_3connectivity_report(K23, td)} == {"small"}

    def test_c4(self):
        assert isinstance(decompose_along_order2(Graph.cycle(4)), CrossingReport)

    def test_not_2_connected(self):
        with pytest.raises(GraphError):
            decompose_along_order2(Graph.path(4))

    @pytest.mark.parametrize("seed", range(20))
    def test_axioms_hold(self, seed):
        rng = random.Random(100 + seed)
        while True:
            g = gnp(rng.randint(4, 9), 0.4, rng, connected=True)
            if g.n >= 3 and not cut_vertices(g):
                break
        out = decompose_along_order2(g)
        if isinstance(out, CrossingReport):
            assert not all(
                (s <= t or s <= t.inverse or s.inverse <= t or s.inverse <= t.inverse)
                for s, t in itertools.combinations(order2_separations(g), 2)
            )
        else:
            assert out.violation(g) is None

    def test_to_dict(self):
        d = decompose_along_order2(K23).to_dict()
        assert d["tree"]["n"] == 4 and len(d["bags"]) == 4
