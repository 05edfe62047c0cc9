"""
A large agile set without a K2,5 minor
======================================

The counterexample graph on 2n vertices carries a red set of n + 1 vertices
that is agile, yet the graph has no K2,5 minor. We verify both facts exactly
and save the certificates.
"""

from __future__ import annotations

import json

from agilesets import counterexample_graph, has_k2k_minor, is_agile, validate_minor_model
from agilesets.covers import covers_violation
from agilesets.minors import crossing_pairs, regular_strip_from_crossings
from agilesets.strips import counterexample_strip_spec

lg = counterexample_graph(9)
g = lg.graph
red = sorted(lg["red"])
print(g, "red:", red)

# All 512 unordered bipartitions of the red set, each with checked covers.
verdict = is_agile(g, red)
bad = [w for w in verdict.witnesses if covers_violation(g, *w) is not None]
print(verdict.result, verdict.checked, "invalid witnesses:", len(bad))

# The minor search is exact: K2,4 is found and validated, K2,5 is absent.
model = has_k2k_minor(g, 4)
print("K2,4:", validate_minor_model(g, model)[0], json.dumps(model.to_dict()))
print("K2,5:", has_k2k_minor(g, 5))

# The same graph read as a strip contains long regular strips as minors.
spec = counterexample_strip_spec(9)
print("crossing pairs:", len(crossing_pairs(spec)))
strip_model = regular_strip_from_crossings(spec, 5)
print("regular strip of length 5:", validate_minor_model(g, strip_model))
