"""Named graph families, each returned with its distinguished vertex sets ("roles")."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import Graph, GraphError, components
from .strips import StripSpec


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    roles: Mapping[str, frozenset[int]] = field(default_factory=dict)
    info: Mapping[str, object] = field(default_factory=dict)

    def __getitem__(self, role: str) -> frozenset[int]:
        return self.roles[role]

    def to_dict(self) -> dict:
        from .formats import graph_to_dict

        return {
            "graph": graph_to_dict(self.graph),
            "roles": {k: sorted(v) for k, v in sorted(self.roles.items())},
        }


def _labeled(order: int, edges, roles: dict, **info) -> LabeledGraph:
    g = Graph.from_edges(order, edges)
    return LabeledGraph(g, {k: frozenset(v) for k, v in roles.items()}, info)


def _positive(**kw: int) -> None:
    for name, value in kw.items():
        if value < 1:
            raise GraphError(f"{name} must be positive, got {value}")


def complete_bipartite(m: int, k: int) -> LabeledGraph:
    """K_{m,k}: hubs are 0..m-1, leaves m..m+k-1."""
    _positive(m=m, k=k)
    hubs = range(m)
    leaves = range(m, m + k)
    return _labeled(m + k, itertools.product(hubs, leaves), {"hubs": hubs, "leaves": leaves})


def counterexample_graph(n: int) -> LabeledGraph:
    """Red path r_0..r_n (ids 0..n) with white path w_1..w_{n-1} (ids n+1..2n-1).

    Edges: r_i r_{i+1}, w_i w_{i+1}, and both diagonals w_i r_{i-1}, w_i r_{i+1}
    for every 1 <= i <= n-1. No r_i w_i edge.
    """
    if n < 3:
        raise GraphError("counterexample_graph needs n >= 3")
    r = list(range(n + 1))
    w = {i: n + i for i in range(1, n)}
    edges = [(r[i], r[i + 1]) for i in range(n)]
    edges += [(w[i], w[i + 1]) for i in range(1, n - 1)]
    for i in range(1, n):
        edges.append((w[i], r[i - 1]))
        edges.append((w[i], r[i + 1]))
    return _labeled(2 * n, edges, {"red": r, "white": w.values()}, n=n)


def regular_strip(k: int) -> LabeledGraph:
    """Paths v_1..v_k (ids 0..k-1) and w_1..w_k (ids k..2k-1) plus both diagonals per rung."""
    if k < 2:
        raise GraphError("regular_strip needs k >= 2")
    v = list(range(k))
    w = list(range(k, 2 * k))
    edges = []
    for i in range(k - 1):
        edges += [(v[i], v[i + 1]), (w[i], w[i + 1]), (v[i], w[i + 1]), (w[i], v[i + 1])]
    roles = {"bottom": v, "top": w, "corners": (v[0], w[0], v[-1], w[-1])}
    return _labeled(2 * k, edges, roles, length=k)


def fan(cycle_len: int, chord_targets: Sequence[int]) -> LabeledGraph:
    """Cycle 0..L-1 with center b=0 and corners a=L-1, b=0, c=1; chords join b to each target."""
    if cycle_len < 4:
        raise GraphError("a fan needs a cycle of length >= 4")
    targets = list(chord_targets)
    if len(set(targets)) != len(targets):
        raise GraphError("repeated chord target")
    for t in targets:
        if t in (cycle_len - 1, 0, 1):
            raise GraphError(f"chord target {t} is the center or a cycle-neighbour of it")
        if not 0 <= t < cycle_len:
            raise GraphError(f"chord target {t} is not on the cycle")
    edges = [(i, (i + 1) % cycle_len) for i in range(cycle_len)]
    edges += [(0, t) for t in targets]
    roles = {"center": (0,), "corners": (cycle_len - 1, 0, 1)}
    return _labeled(cycle_len, edges, roles, length=len(targets))


def strip(spec: StripSpec) -> LabeledGraph:
    info = {"length": spec.length, "crossing_pairs": len(spec.crossing_pairs())}
    return LabeledGraph(spec.graph, {"corners": spec.corners}, info)


def ladder(n: int, clique_ends: bool = False) -> LabeledGraph:
    """Rails (i,0) -> id i and (i,1) -> id n+i for i in 0..n-1, with rungs between them."""
    if n < 2:
        raise GraphError("ladder needs n >= 2")
    rail0 = list(range(n))
    rail1 = list(range(n, 2 * n))
    edges = [(rail0[i], rail0[i + 1]) for i in range(n - 1)]
    edges += [(rail1[i], rail1[i + 1]) for i in range(n - 1)]
    edges += [(rail0[i], rail1[i]) for i in range(n)]
    ends = (rail0[0], rail1[0], rail0[-1], rail1[-1])
    if clique_ends:
        edges += list(itertools.combinations(ends, 2))
    return _labeled(2 * n, edges, {"ends": ends, "rail0": rail0, "rail1": rail1})


def grid(rows: int, cols: int) -> LabeledGraph:
    """Vertex (r, c) has id r*cols + c."""
    _positive(rows=rows, cols=cols)
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return _labeled(rows * cols, edges, {}, rows=rows, cols=cols)


def grid_magile_instance(m: int, N: int) -> LabeledGraph:
    """The (2m-1) x ((N-1)m+1) grid; "agile" = N middle-row vertices spaced m apart from column 0."""
    if m < 2 or N < 2:
        raise GraphError("grid_magile_instance needs m >= 2 and N >= 2")
    rows, cols = 2 * m - 1, (N - 1) * m + 1
    base = grid(rows, cols)
    mid = m - 1
    marked = [mid * cols + j * m for j in range(N)]
    return LabeledGraph(base.graph, {"agile": frozenset(marked)}, {"rows": rows, "cols": cols, "m": m})


def diagonal_dexterous_instance(N: int) -> LabeledGraph:
    """The N^2 x N^2 grid with (jN, jN) marked for j = 0..N-1."""
    if N < 2:
        raise GraphError("diagonal_dexterous_instance needs N >= 2")
    side = N * N
    base = grid(side, side)
    marked = [(j * N) * side + j * N for j in range(N)]
    return LabeledGraph(base.graph, {"dexterous": frozenset(marked)}, {"rows": side, "cols": side})


def wheel(
    tree_edges: Sequence[Sequence[int]],
    Z_size: int,
    pi: Sequence[int],
    psi: Mapping[int, int] | Sequence[int],
    n: int,
) -> LabeledGraph:
    """n copies of a t-vertex tree linked in a cycle of rails, plus l = Z_size hub vertices.

    Copy i (0-based) of tree vertex v has id i*t + v; hub z has id n*t + z.
    Rails join v_i to v_{i+1}; the last copy wraps to the first through ``pi``:
    v_{n-1} is joined to pi(v)_0. Hub z is joined to every copy of psi(z).
    """
    t = len(pi)
    if t < 1:
        raise GraphError("the tree needs at least one vertex")
    if n < 3:
        raise GraphError("wheel needs n >= 3 copies")
    if sorted(pi) != list(range(t)):
        raise GraphError("pi must be a permutation of the tree vertices")
    tree = Graph.from_edges(t, tree_edges)
    if tree.num_edges != t - 1 or len(components(tree)) != 1:
        raise GraphError("tree_edges do not form a tree on the vertices of pi")
    psi_map = dict(psi) if isinstance(psi, Mapping) else dict(enumerate(psi))
    if sorted(psi_map) != list(range(Z_size)) or any(not 0 <= x < t for x in psi_map.values()):
        raise GraphError("psi must map every hub 0..Z_size-1 to a tree vertex")
    edges = []
    for i in range(n):
        off = i * t
        edges += [(off + a, off + b) for a, b in tree.edge_list()]
        if i + 1 < n:
            edges += [(off + v, off + t + v) for v in range(t)]
    last = (n - 1) * t
    edges += [(last + v, pi[v]) for v in range(t)]
    hubs = []
    for z in range(Z_size):
        zid = n * t + z
        hubs.append(zid)
        edges += [(zid, i * t + psi_map[z]) for i in range(n)]
    return _labeled(n * t + Z_size, edges, {"hub": hubs}, t=t, l=Z_size, n=n)


def gnp(n: int, p: float, rng: random.Random, connected: bool = False, tries: int = 1000) -> Graph:
    """Uniform edge-probability graph; with ``connected`` resample until connected."""
    if n < 1:
        raise GraphError("gnp needs n >= 1")
    for _ in range(tries):
        g = Graph.from_edges(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])
        if not connected or len(components(g)) == 1:
            return g
    raise GraphError(f"no connected G({n}, {p}) sample in {tries} tries")
