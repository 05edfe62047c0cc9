"""Oriented separations, nestedness and torsos."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from ._bits import bits, component_masks, mask_of
from .graph import Graph, GraphError, cut_vertices, is_connected


@dataclass(frozen=True)
class Separation:
    A: frozenset[int]
    B: frozenset[int]

    @classmethod
    def of(cls, A: Iterable[int], B: Iterable[int]) -> "Separation":
        return cls(frozenset(A), frozenset(B))

    @property
    def separator(self) -> frozenset[int]:
        return self.A & self.B

    @property
    def order(self) -> int:
        return len(self.A & self.B)

    @property
    def inverse(self) -> "Separation":
        return Separation(self.B, self.A)

    def __le__(self, other: "Separation") -> bool:
        return self.A <= other.A and self.B >= other.B

    def __lt__(self, other: "Separation") -> bool:
        return self != other and self <= other

    def is_regular(self) -> bool:
        """Both sides contain a vertex outside the separator."""
        return bool(self.A - self.B) and bool(self.B - self.A)

    def is_valid_for(self, g: Graph) -> bool:
        if self.A | self.B != frozenset(g.vertices):
            return False
        a_only = mask_of(self.A - self.B)
        b_only = mask_of(self.B - self.A)
        return not any(g.adj[v] & b_only for v in bits(a_only))

    def __repr__(self) -> str:
        return f"Separation({sorted(self.A)}, {sorted(self.B)})"


def nested(s: Separation, t: Separation) -> bool:
    return s <= t or s <= t.inverse or s.inverse <= t or s.inverse <= t.inverse


def separations_with_separator(g: Graph, sep: Iterable[int]) -> list[Separation]:
    """All regular separations with separator exactly ``sep``, both orientations."""
    sep = frozenset(sep)
    rest = g.full_mask & ~mask_of(sep)
    comps = component_masks(g.adj, rest)
    if len(comps) < 2:
        return []
    out = []
    everything = frozenset(g.vertices)
    # subsets containing comps[0] give one orientation, complements the other
    for r in range(0, len(comps) - 1):
        for extra in itertools.combinations(range(1, len(comps)), r):
            side = comps[0]
            for i in extra:
                side |= comps[i]
            A = sep | frozenset(bits(side))
            B = sep | (everything - A)
            out.append(Separation(A, B))
            out.append(Separation(B, A))
    return out


def separations_of_order(g: Graph, k: int) -> list[Separation]:
    """Every regular separation of order exactly ``k``, both orientations, canonical order."""
    out = []
    for sep in itertools.combinations(range(g.n), k):
        out.extend(separations_with_separator(g, sep))
    return sorted(out, key=_sep_key)


def _sep_key(s: Separation) -> tuple:
    return (sorted(s.separator), sorted(s.A), sorted(s.B))


def order2_separations(g: Graph) -> list[Separation]:
    """All regular order-2 separations of a 2-connected graph, closed under involution."""
    if g.n < 3 or not is_connected(g):
        raise GraphError("order2_separations needs a 2-connected graph (input is disconnected or too small)")
    cuts = cut_vertices(g)
    if cuts:
        raise GraphError(f"order2_separations needs a 2-connected graph; {min(cuts)} is a cut vertex")
    return separations_of_order(g, 2)


def torso(g: Graph, part: Iterable[int], interface: Iterable[int]) -> tuple[Graph, list[int]]:
    """``g[part]`` with ``interface`` made complete; returns the graph and new id -> old id."""
    part = frozenset(part)
    interface = frozenset(interface)
    if not interface <= part:
        raise GraphError("torso interface must lie inside the part")
    if not part <= frozenset(g.vertices):
        raise GraphError("torso part must be a set of vertices of the graph")
    sub, keep = g.induced_subgraph(part)
    index = {v: i for i, v in enumerate(keep)}
    clique = [(index[u], index[v]) for u, v in itertools.combinations(sorted(interface), 2)]
    return sub.add_edges(clique), keep
