"""
Agile sets on small graphs
==========================

A vertex set X is agile when every bipartition of X can be covered by two
disjoint connected subgraphs. This walk-through checks a few small examples
and looks at the certificates the library returns.
"""

from __future__ import annotations

from agilesets import (
    Graph,
    complete_bipartite,
    find_agile_subset,
    find_disjoint_connected_covers,
    is_agile,
    is_dexterous,
    is_m_connected,
)

# The 4-cycle: the two diagonals {0, 2} and {1, 3} cannot both be connected
# without sharing a vertex, so the whole cycle is not agile.
c4 = Graph.cycle(4)
print(find_disjoint_connected_covers(c4, [[0, 2], [1, 3]]))
verdict = is_agile(c4, range(4))
print(verdict.result, verdict.failing)

# K2,3: the two hubs together with any leaf form an agile set.
k23 = complete_bipartite(2, 3)
X = sorted(k23["hubs"]) + [2]
verdict = is_agile(k23.graph, X)
print(verdict.result, "bipartitions checked:", verdict.checked)

# Each witness is a bipartition with its two covers.
for (X1, X2), (C1, C2) in verdict.witnesses[:3]:
    print(sorted(X1), sorted(X2), "->", sorted(C1), sorted(C2))

# Agility implies linkedness: every pair of equal halves is joined by disjoint paths.
print("2-connected set:", is_m_connected(k23.graph, X, 2)[0])

# Dexterity asks for every number of parts at once; with three vertices that is 2-agility.
print("dexterous:", bool(is_dexterous(k23.graph, X)))

# The search helper finds the first agile set of a given size, or None.
print(find_agile_subset(Graph.complete(5), 5))
print(find_agile_subset(Graph.path(6), 3))
