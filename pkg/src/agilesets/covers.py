"""Exact search for pairwise disjoint connected vertex sets covering given blocks.

This is the Disjoint Connected Subgraphs problem, which is NP-hard; the goal
here is exactness with a certificate at desk scale.

Search state per block ``i``: the vertices committed to it (``assigned[i]``)
and the vertices it may still use (``allowed[i]``). A branching step picks a
block whose committed set is not yet connected, takes the component ``K`` of
its committed set around its lowest terminal and branches on which frontier
vertex of ``K`` joins the block next. Frontier vertices tried earlier are
excluded from the block in later branches, so branches are disjoint and the
search is complete. Pruning: every block's committed vertices must stay inside
one component of ``G[allowed[i]]``; cut vertices of that component which
separate committed vertices are forced into the block.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ._bits import bits, is_connected_mask, lowest, mask_of, reach
from .budget import Budget
from .graph import Graph


def _separating_cuts(adj: Sequence[int], region: int, terms: int) -> int:
    """Vertices of ``region`` whose removal splits ``terms`` within ``G[region]``.

    Terminals themselves are never reported. Iterative lowpoint DFS rooted at a
    terminal, counting terminals per subtree.
    """
    root = lowest(terms)
    disc: dict[int, int] = {root: 0}
    low: dict[int, int] = {root: 0}
    below: dict[int, int] = {root: 1}
    total = bin(terms).count("1")
    out = 0
    counter = 1
    stack = [(root, -1, adj[root] & region)]
    while stack:
        v, parent, todo = stack[-1]
        if todo:
            lb = todo & -todo
            w = lb.bit_length() - 1
            stack[-1] = (v, parent, todo ^ lb)
            if w in disc:
                if w != parent and disc[w] < low[v]:
                    low[v] = disc[w]
                continue
            disc[w] = low[w] = counter
            below[w] = terms >> w & 1
            counter += 1
            stack.append((w, v, adj[w] & region))
            continue
        stack.pop()
        if parent < 0:
            continue
        if low[v] < low[parent]:
            low[parent] = low[v]
        below[parent] += below[v]
        # parent separates v's subtree from the rest (root: from other subtrees)
        if low[v] >= disc[parent] and below[v] and below[v] < total:
            out |= 1 << parent
    return out & ~terms


class _Search:
    def __init__(self, adj: Sequence[int], terms: list[int], full: int, budget: Budget | None) -> None:
        self.adj = adj
        self.terms = terms
        self.k = len(terms)
        self.budget = budget
        union = 0
        for t in terms:
            union |= t
        self.full = full
        self.active = [i for i, t in enumerate(terms) if t & (t - 1)]
        self.init_allowed = [full & ~(union & ~t) for t in terms]

    def propagate(self, assigned: list[int], allowed: list[int]) -> bool:
        adj = self.adj
        changed = True
        while changed:
            changed = False
            for i in self.active:
                a = assigned[i]
                region = reach(adj, allowed[i], a & -a)
                if a & ~region:
                    return False
                if region != allowed[i]:
                    allowed[i] = region
                if is_connected_mask(adj, a):
                    continue
                forced = _separating_cuts(adj, region, a) & ~a
                if forced:
                    assigned[i] = a | forced
                    for j in range(self.k):
                        if j != i:
                            if assigned[j] & forced:
                                return False
                            allowed[j] &= ~forced
                    changed = True
        return True

    def run(self) -> list[int] | None:
        assigned = list(self.terms)
        allowed = list(self.init_allowed)
        if not self.propagate(assigned, allowed):
            return None
        return self.search(assigned, allowed)

    def search(self, assigned: list[int], allowed: list[int]) -> list[int] | None:
        if self.budget is not None:
            self.budget.tick()
        adj = self.adj
        best = None
        for i in self.active:
            a = assigned[i]
            if is_connected_mask(adj, a):
                continue
            comp = reach(adj, a, a & -a)
            nb = 0
            m = comp
            while m:
                lb = m & -m
                nb |= adj[lb.bit_length() - 1]
                m ^= lb
            frontier = nb & allowed[i] & ~a
            if not frontier:
                return None
            size = bin(frontier).count("1")
            if best is None or size < best[0]:
                best = (size, i, comp, frontier)
        if best is None:
            return assigned
        _, i, comp, frontier = best
        # propagation below may force frontier vertices in or out of block i
        for u in self._order(i, assigned[i] & ~comp, allowed[i], frontier):
            bit = 1 << u
            if not allowed[i] & bit:
                continue
            a2 = list(assigned)
            al2 = list(allowed)
            a2[i] |= bit
            for j in range(self.k):
                if j != i:
                    al2[j] &= ~bit
            if self.propagate(a2, al2):
                found = self.search(a2, al2)
                if found is not None:
                    return found
            if assigned[i] & bit:
                return None
            allowed[i] &= ~bit
            if not self.propagate(assigned, allowed):
                return None
        return None

    def _order(self, i: int, targets: int, allowed: int, frontier: int) -> list[int]:
        """Frontier vertices by BFS distance (inside ``allowed``) to the other committed parts."""
        adj = self.adj
        dist_rank = []
        seen = targets
        layer = targets
        remaining = frontier
        while layer and remaining:
            hit = layer & remaining
            if hit:
                dist_rank.extend(bits(hit))
                remaining &= ~hit
            nxt = 0
            m = layer
            while m:
                lb = m & -m
                nxt |= adj[lb.bit_length() - 1]
                m ^= lb
            layer = nxt & allowed & ~seen
            seen |= layer
        dist_rank.extend(bits(remaining))
        return dist_rank


def _minimise(adj: Sequence[int], cover: int, terms: int) -> int:
    for v in bits(cover & ~terms):
        trial = cover & ~(1 << v)
        if is_connected_mask(adj, trial):
            cover = trial
    return cover


def solve_covers(
    g: Graph, blocks: Sequence[Iterable[int]], budget: Budget | None = None, minimise: bool = True
) -> list[frozenset[int]] | None:
    """Disjoint connected vertex sets ``covers[i] ⊇ blocks[i]``, or ``None`` if none exist."""
    terms = [mask_of(b) for b in blocks]
    seen = 0
    for t in terms:
        if t & seen:
            raise ValueError("blocks must be pairwise disjoint")
        if t >> g.n:
            raise ValueError("block vertex outside the graph")
        seen |= t
    if budget is not None:
        budget.check()
    found = _Search(g.adj, terms, g.full_mask, budget).run()
    if found is None:
        return None
    out = []
    for i, t in enumerate(terms):
        cover = found[i]
        if minimise and t & (t - 1):
            cover = _minimise(g.adj, cover, t)
        out.append(frozenset(bits(cover)))
    return out


def covers_violation(g: Graph, blocks: Sequence[Iterable[int]], covers: Sequence[Iterable[int]]) -> str | None:
    """First broken clause of a cover witness, or ``None`` if it is valid."""
    if len(blocks) != len(covers):
        return "arity"
    seen = 0
    for b, c in zip(blocks, covers):
        cm = mask_of(c)
        if mask_of(b) & ~cm:
            return "covering"
        if cm & seen:
            return "disjointness"
        seen |= cm
        if not is_connected_mask(g.adj, cm):
            return "connectivity"
    return None
