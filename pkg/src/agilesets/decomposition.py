"""Tree-decompositions from nested, involution-closed sets of separations, and their torsos.

Tree construction: every separation pair {s, s*} becomes a tree edge. The
nodes are the classes of the equivalence generated by "s is an immediate
predecessor of t*", and a node's bag is the intersection of the B-sides of
its separations (A, B). The output is checked against (T1)-(T3) and against
the input by recomputing the separations the tree induces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, is_k_connected
from .separations import Separation, nested, order2_separations


@dataclass(frozen=True)
class CrossingReport:
    s: Separation
    t: Separation
    quadrants: dict[str, frozenset[int]]

    @property
    def nonempty(self) -> list[str]:
        return [name for name, q in self.quadrants.items() if q]

    @property
    def corners(self) -> dict[str, frozenset[int]]:
        """Closed corners A&C, B&C, A&D, B&D (quadrant interiors plus their separator parts)."""
        s, t = self.s, self.t
        return {"A&C": s.A & t.A, "B&C": s.B & t.A, "A&D": s.A & t.B, "B&D": s.B & t.B}

    def to_dict(self) -> dict:
        return {
            "crossing": [[sorted(self.s.A), sorted(self.s.B)], [sorted(self.t.A), sorted(self.t.B)]],
            "quadrants": {k: sorted(v) for k, v in self.quadrants.items()},
            "corners": {k: sorted(v) for k, v in self.corners.items()},
        }


def quadrants(s: Separation, t: Separation) -> dict[str, frozenset[int]]:
    """The four corners V-(B u D), V-(A u D), V-(B u C), V-(A u C) for s=(A,B), t=(C,D)."""
    A, B, C, D = s.A, s.B, t.A, t.B
    V = A | B | C | D
    return {
        "A&C": V - (B | D),
        "B&C": V - (A | D),
        "A&D": V - (B | C),
        "B&D": V - (A | C),
    }


def nested_family_check(seps: Sequence[Separation]) -> CrossingReport | None:
    """``None`` if the separations are pairwise nested, else the first crossing pair with its quadrants."""
    for s, t in itertools.combinations(seps, 2):
        if not nested(s, t):
            return CrossingReport(s, t, quadrants(s, t))
    return None


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    bags: tuple[frozenset[int], ...]

    def adhesion(self, t: int, u: int) -> frozenset[int]:
        return self.bags[t] & self.bags[u]

    def _side(self, t: int, u: int) -> set[int]:
        """Tree nodes on t's side of the edge tu."""
        seen = {t}
        stack = [t]
        while stack:
            x = stack.pop()
            for y in self.tree.neighbors(x):
                if y not in seen and not (x == t and y == u):
                    seen.add(y)
                    stack.append(y)
        return seen

    def induced_separations(self) -> list[Separation]:
        out = []
        for t, u in self.tree.edge_list():
            left = self._side(t, u)
            A = frozenset().union(*(self.bags[x] for x in left))
            B = frozenset().union(*(self.bags[x] for x in self.tree.vertices if x not in left))
            out.append(Separation(A, B))
            out.append(Separation(B, A))
        return out

    def violation(self, g: Graph) -> str | None:
        """First failed axiom ("tree", "T1", "T2", "T3") or ``None``."""
        T = self.tree
        if T.n != len(self.bags) or T.n == 0:
            return "tree"
        if T.num_edges != T.n - 1 or len(self._side(0, -1)) != T.n:
            return "tree"
        if frozenset().union(*self.bags) != frozenset(g.vertices):
            return "T1"
        for u, v in g.edge_list():
            if not any(u in b and v in b for b in self.bags):
                return "T2"
        for v in g.vertices:
            holders = {t for t in T.vertices if v in self.bags[t]}
            start = min(holders)
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in T.neighbors(x):
                    if y in holders and y not in seen:
                        seen.add(y)
                        stack.append(y)
            if seen != holders:
                return "T3"
        return None

    def torso(self, g: Graph, t: int) -> tuple[Graph, list[int]]:
        """Bag t with each adhesion set to a neighbouring bag made complete."""
        sub, keep = g.induced_subgraph(self.bags[t])
        index = {v: i for i, v in enumerate(keep)}
        extra = []
        for u in self.tree.neighbors(t):
            adh = sorted(self.adhesion(t, u))
            extra += [(index[a], index[b]) for a, b in itertools.combinations(adh, 2)]
        return sub.add_edges(extra), keep

    def to_dict(self) -> dict:
        return {
            "tree": {"n": self.tree.n, "edges": [list(e) for e in self.tree.edge_list()]},
            "bags": [sorted(b) for b in self.bags],
        }


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def tree_decomposition_from_nested(g: Graph, seps: Iterable[Separation]) -> TreeDecomposition:
    seps = sorted(set(seps), key=lambda s: (sorted(s.A), sorted(s.B)))
    for s in seps:
        if not s.is_valid_for(g):
            raise GraphError(f"{s} is not a separation of the graph")
        if s.inverse not in seps:
            raise GraphError(f"family is not closed under involution: {s.inverse} missing")
    report = nested_family_check(seps)
    if report is not None:
        raise GraphError(f"separations {report.s} and {report.t} cross")
    if not seps:
        td = TreeDecomposition(Graph(1, frozenset()), (frozenset(g.vertices),))
        return td
    idx = {s: i for i, s in enumerate(seps)}
    uf = _UnionFind(len(seps))
    for s in seps:
        for t in seps:
            ts = t.inverse
            if s < ts and not any(s < r < ts for r in seps):
                uf.union(idx[s], idx[t])
    roots = sorted({uf.find(i) for i in range(len(seps))})
    node = {r: i for i, r in enumerate(roots)}
    bags: list[frozenset[int]] = [frozenset(g.vertices)] * len(roots)
    for s in seps:
        x = node[uf.find(idx[s])]
        bags[x] = bags[x] & s.B
    edges = set()
    for s in seps:
        x, y = node[uf.find(idx[s])], node[uf.find(idx[s.inverse])]
        if x == y:
            raise GraphError(f"{s} and its inverse fall into one node")
        edges.add((min(x, y), max(x, y)))
    td = TreeDecomposition(Graph.from_edges(len(roots), edges), tuple(bags))
    bad = td.violation(g)
    if bad is not None:
        raise GraphError(f"constructed decomposition violates {bad}")
    if set(td.induced_separations()) != set(seps):
        raise GraphError("constructed decomposition does not induce exactly the input separations")
    return td


def torsos(g: Graph, td: TreeDecomposition) -> list[Graph]:
    bad = td.violation(g)
    if bad is not None:
        raise GraphError(f"invalid tree-decomposition ({bad})")
    return [td.torso(g, t)[0] for t in td.tree.vertices]


def decompose_along_order2(g: Graph) -> TreeDecomposition | CrossingReport:
    """Decomposition along all regular order-2 separations, or the first crossing pair."""
    seps = order2_separations(g)
    report = nested_family_check(seps)
    if report is not None:
        return report
    return tree_decomposition_from_nested(g, seps)


def torso_3connectivity_report(g: Graph, td: TreeDecomposition) -> list[dict]:
    out = []
    for t in td.tree.vertices:
        h, _ = td.torso(g, t)
        if h.n < 4:
            status = "small"
        else:
            status = "3-connected" if is_k_connected(h, 3) else "not 3-connected"
        out.append({"node": t, "bag": sorted(td.bags[t]), "status": status})
    return out
