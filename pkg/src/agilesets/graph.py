"""Simple undirected graphs on dense integer vertex ids, plus elementary surgery.

Graphs are immutable values. Every operation that changes the vertex set
(deletion, contraction, induced subgraphs) also returns the id mapping so that
witnesses found in the smaller graph can be lifted back.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from ._bits import bits, component_masks, is_connected_mask, mask_of, reach


class GraphError(ValueError):
    pass


Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            norm.add(_norm(int(u), int(v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset(itertools.combinations(range(n), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls(n, frozenset(_norm(i, (i + 1) % n) for i in range(n)))

    # -- queries -----------------------------------------------------------

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Adjacency bitmasks, one int per vertex."""
        a = [0] * self.n
        for u, v in self.edges:
            a[u] |= 1 << v
            a[v] |= 1 << u
        return tuple(a)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_list()})"

    # -- surgery -----------------------------------------------------------

    def add_edges(self, pairs: Iterable[Sequence[int]]) -> "Graph":
        return Graph(self.n, self.edges | {_norm(u, v) for u, v in pairs})

    def delete_edge(self, u: int, v: int) -> "Graph":
        e = _norm(u, v)
        if e not in self.edges:
            raise GraphError(f"{e} is not an edge")
        return Graph(self.n, self.edges - {e})

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``; also returns new id -> old id."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = {(index[u], index[v]) for u, v in self.edges if u in index and v in index}
        return Graph(len(keep), frozenset(edges)), keep

    def delete_vertices(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Delete ``vertices``; also returns old id -> new id for the survivors."""
        gone = set(vertices)
        sub, keep = self.induced_subgraph(v for v in self.vertices if v not in gone)
        return sub, {old: new for new, old in enumerate(keep)}

    def contract_edge(self, u: int, v: int) -> tuple["Graph", list[int]]:
        """Contract ``uv``; returns the graph and old id -> new id for every old vertex.

        The merged vertex takes the smaller id; ids above the larger endpoint shift
        down by one. Parallel edges collapse and the would-be loop is dropped.
        """
        if _norm(u, v) not in self.edges:
            raise GraphError(f"{_norm(u, v)} is not an edge")
        keep, gone = min(u, v), max(u, v)
        mapping = [x if x < gone else x - 1 for x in range(self.n)]
        mapping[gone] = keep
        edges = set()
        for a, b in self.edges:
            a2, b2 = mapping[a], mapping[b]
            if a2 != b2:
                edges.add(_norm(a2, b2))
        return Graph(self.n - 1, frozenset(edges)), mapping

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Rename vertex ``v`` to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling must be a permutation of the vertices")
        return Graph(self.n, frozenset(_norm(perm[u], perm[v]) for u, v in self.edges))

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


# -- connectivity ---------------------------------------------------------


def components(g: Graph, within: Iterable[int] | None = None) -> list[frozenset[int]]:
    """Vertex sets of the components of ``g`` (or of ``g[within]``), by minimum vertex."""
    mask = g.full_mask if within is None else mask_of(within)
    return [frozenset(bits(c)) for c in component_masks(g.adj, mask)]


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g.adj, g.full_mask)


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph (iterative Hopcroft-Tarjan)."""
    if not is_connected(g):
        raise GraphError("cut_vertices needs a connected graph")
    if g.n <= 2:
        return frozenset()
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    disc[0] = low[0] = 0
    counter = 1
    root_children = 0
    stack = [(0, -1, iter(g.neighbors(0)))]
    while stack:
        v, parent, it = stack[-1]
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, v, iter(g.neighbors(w))))
                break
            if w != parent:
                low[v] = min(low[v], disc[w])
        else:
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if parent == 0:
                root_children += 1
            elif low[v] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(0)
    return frozenset(cuts)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has more than ``k`` vertices and no separator of size < k."""
    if g.n <= k:
        return False
    full = g.full_mask
    for size in range(k):
        for sep in itertools.combinations(range(g.n), size):
            rest = full & ~mask_of(sep)
            if not is_connected_mask(g.adj, rest):
                return False
    return True


def is_internally_3_connected(g: Graph) -> bool:
    """Whether ``g`` arises from a 3-connected graph by subdividing each edge at most once.

    Degree-2 vertices must be subdivision vertices: pairwise non-adjacent, and
    suppressing them may not create a parallel edge (with an existing edge or
    with another suppressed vertex). The suppressed graph must be 3-connected.
    """
    if g.n < 4:
        return False
    deg2 = []
    for v in g.vertices:
        d = g.degree(v)
        if d < 2:
            return False
        if d == 2:
            deg2.append(v)
    deg2_mask = mask_of(deg2)
    new_edges = set(g.edges)
    for v in deg2:
        if g.adj[v] & deg2_mask:
            return False
        x, y = g.neighbors(v)
        e = _norm(x, y)
        if e in new_edges:
            return False  # parallel edge after suppression
        new_edges.discard(_norm(v, x))
        new_edges.discard(_norm(v, y))
        new_edges.add(e)
    base = Graph(g.n, frozenset(new_edges))
    core, _ = base.delete_vertices(deg2)
    return is_k_connected(core, 3)


# -- normal spanning trees --------------------------------------------------


@dataclass(frozen=True)
class RootedTree:
    """A rooted spanning tree given by parent pointers (the root's parent is -1)."""

    root: int
    parent: tuple[int, ...]

    @cached_property
    def depth(self) -> tuple[int, ...]:
        d = [-1] * len(self.parent)
        for v in range(len(self.parent)):
            chain = []
            u = v
            while d[u] == -1 and u != self.root:
                chain.append(u)
                u = self.parent[u]
            base = 0 if u == self.root else d[u]
            d[self.root] = 0
            for i, w in enumerate(reversed(chain), 1):
                d[w] = base + i
        return tuple(d)

    def edges(self) -> list[Edge]:
        return sorted(_norm(v, p) for v, p in enumerate(self.parent) if p >= 0)

    def as_graph(self) -> Graph:
        return Graph(len(self.parent), frozenset(self.edges()))

    def is_ancestor(self, a: int, b: int) -> bool:
        """True iff ``a`` lies on the root path of ``b`` (a vertex is its own ancestor)."""
        while b != -1:
            if b == a:
                return True
            b = self.parent[b]
        return False

    def comparable(self, a: int, b: int) -> bool:
        return self.is_ancestor(a, b) or self.is_ancestor(b, a)


def normal_spanning_tree(g: Graph, root: int = 0) -> RootedTree:
    """Depth-first search tree from ``root``; every edge of ``g`` joins comparable vertices."""
    if not is_connected(g):
        raise GraphError("normal_spanning_tree needs a connected graph")
    parent = [-2] * g.n
    parent[root] = -1
    stack = [(root, iter(g.neighbors(root)))]
    while stack:
        v, it = stack[-1]
        for w in it:
            if parent[w] == -2:
                parent[w] = v
                stack.append((w, iter(g.neighbors(w))))
                break
        else:
            stack.pop()
    return RootedTree(root, tuple(parent))


def reachable(g: Graph, allowed: Iterable[int], start: Iterable[int]) -> frozenset[int]:
    return frozenset(bits(reach(g.adj, mask_of(allowed), mask_of(start))))
