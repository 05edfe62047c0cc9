"""Minor models (branch-set witnesses) and their validation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping

from ._bits import is_connected_mask, mask_of
from .graph import Graph


@dataclass(frozen=True)
class MinorModel:
    pattern: Graph
    branch: Mapping[int, frozenset[int]]

    @classmethod
    def of(cls, pattern: Graph, branch: Mapping[int, Any]) -> "MinorModel":
        return cls(pattern, {int(h): frozenset(vs) for h, vs in branch.items()})

    def to_dict(self) -> dict[str, Any]:
        return {"branch": {str(h): sorted(self.branch[h]) for h in sorted(self.branch)}}

    @classmethod
    def from_dict(cls, pattern: Graph, d: Mapping[str, Any]) -> "MinorModel":
        return cls.of(pattern, {int(h): vs for h, vs in d["branch"].items()})

    def host_vertices(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for vs in self.branch.values():
            out |= vs
        return out


def minor_model_violation(host: Graph, model: MinorModel) -> str | None:
    """Name of the first violated clause, or ``None`` if the model is valid."""
    pattern = model.pattern
    if set(model.branch) != set(pattern.vertices):
        return "coverage"  # every pattern vertex needs a branch set
    seen = 0
    masks = {}
    for h in pattern.vertices:
        vs = model.branch[h]
        if not vs:
            return "nonempty"
        if any(not 0 <= v < host.n for v in vs):
            return "range"
        m = mask_of(vs)
        if m & seen:
            return "disjointness"
        seen |= m
        masks[h] = m
    for h, m in masks.items():
        if not is_connected_mask(host.adj, m):
            return "connectivity"
    for a, b in pattern.edge_list():
        mb = masks[b]
        if not any(host.adj[v] & mb for v in model.branch[a]):
            return "edge"
    return None


def validate_minor_model(host: Graph, model: MinorModel) -> tuple[bool, str | None]:
    bad = minor_model_violation(host, model)
    return bad is None, bad


def minor_from_operations(host: Graph, ops: Iterable[tuple[str, Any]]) -> tuple[Graph, MinorModel]:
    """Apply ("delete-edge", (u, v)), ("contract", (u, v)) or ("delete-vertex", v) in turn.

    Ids in each operation refer to the current minor. Returns the minor and
    its model in ``host``.
    """
    g = host
    branch: list[frozenset[int]] = [frozenset((v,)) for v in host.vertices]
    for kind, where in ops:
        if kind == "delete-edge":
            g = g.delete_edge(*where)
        elif kind == "contract":
            g, mp = g.contract_edge(*where)
            merged: list[frozenset[int]] = [frozenset()] * g.n
            for old, new in enumerate(mp):
                merged[new] = merged[new] | branch[old]
            branch = merged
        elif kind == "delete-vertex":
            g, mp = g.delete_vertices([where])
            branch = [branch[old] for old in sorted(mp, key=mp.get)]
        else:
            raise ValueError(f"unknown minor operation {kind!r}")
    return g, MinorModel(g, dict(enumerate(branch)))
