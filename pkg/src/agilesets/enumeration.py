"""Exhaustive enumeration of connected graphs up to isomorphism.

Every connected graph on n vertices arises from a connected graph on n-1
vertices by adding a vertex joined to a nonempty subset (delete a non-cut
vertex to see this). Candidates are bucketed by Weisfeiler-Lehman hash and
deduplicated with an exact isomorphism test.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from .graph import Graph


def _canonical_order(graphs: list[Graph]) -> list[Graph]:
    return sorted(graphs, key=lambda g: (g.num_edges, g.edge_list()))


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    if n < 1:
        return ()
    if n == 1:
        return (Graph(1, frozenset()),)
    buckets: dict[str, list[tuple[Graph, nx.Graph]]] = {}
    out: list[Graph] = []
    for base in connected_graphs(n - 1):
        for r in range(1, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                g = Graph(n, base.edges | {(v, n - 1) for v in nbrs})
                ng = g.to_networkx()
                key = nx.weisfeiler_lehman_graph_hash(ng, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(ng, other) for _, other in bucket):
                    continue
                bucket.append((g, ng))
                out.append(g)
    return tuple(_canonical_order(out))


def connected_graphs_upto(n: int) -> list[Graph]:
    out: list[Graph] = []
    for k in range(1, n + 1):
        out.extend(connected_graphs(k))
    return out
