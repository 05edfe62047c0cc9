"""
Cutting a graph along its 2-separations
=======================================

When the order-2 separations of a 2-connected graph are pairwise nested they
form a tree-decomposition whose torsos are 3-connected, cycles, or tiny.
When two of them cross, the library reports the crossing pair instead.
"""

from __future__ import annotations

import json

from agilesets import (
    Graph,
    Separation,
    complete_bipartite,
    decompose_along_order2,
    order2_separations,
    torsos,
    tree_decomposition_from_nested,
)
from agilesets.decomposition import torso_3connectivity_report

# K2,3 has three 2-separations (six oriented), all with separator {0, 1}.
g = complete_bipartite(2, 3).graph
for s in order2_separations(g):
    print(sorted(s.A), sorted(s.B))

td = decompose_along_order2(g)
print("bags:", [sorted(b) for b in td.bags])
print("tree edges:", td.tree.edge_list())
for report in torso_3connectivity_report(g, td):
    print(report)

# Two nested separations with the non-edge {0, 2} as separator: every torso gains the edge 0-2.
h = Graph.from_edges(6, [(0, 1), (1, 2), (0, 3), (3, 2), (2, 4), (4, 5), (5, 0)])
s = Separation.of({0, 1, 2}, {0, 2, 3, 4, 5})
t = Separation.of({0, 1, 2, 3}, {0, 2, 4, 5})
td = tree_decomposition_from_nested(h, [s, s.inverse, t, t.inverse])
for bag, torso in zip(td.bags, torsos(h, td)):
    print(sorted(bag), torso.edge_list())

# On the 4-cycle the two diagonal separations cross.
report = decompose_along_order2(Graph.cycle(4))
print(json.dumps(report.to_dict()))
