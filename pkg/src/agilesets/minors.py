"""Exact minor containment with witness models.

``has_minor`` is a generic branch-and-bound over growing branch sets.
``has_k2k_minor`` exploits a normal form: a K_{2,k} minor exists iff there are
two disjoint connected hub sets and k further vertices, each adjacent to both
hubs (any longer leaf branch set can be absorbed into a hub, keeping a single
vertex next to the other hub).

All searches accept a ``Budget`` and raise ``BudgetExceeded`` when it runs
out; a ``None`` answer is always certified by an exhausted search.
"""

from __future__ import annotations

from ._bits import bits, popcount, reach
from .budget import Budget
from .generators import complete_bipartite, regular_strip
from .graph import Graph
from .models import MinorModel, validate_minor_model
from .strips import StripError, StripSpec


def _nb(adj, mask: int) -> int:
    out = 0
    while mask:
        lb = mask & -mask
        out |= adj[lb.bit_length() - 1]
        mask ^= lb
    return out


def _above(v: int, full: int) -> int:
    return full & ~((1 << (v + 1)) - 1)


# -- generic search --------------------------------------------------------------


class _MinorSearch:
    """Branch sets grow one vertex at a time until every pattern edge is realised.

    For an unrealised pattern edge hk, any completion either adds a frontier
    vertex of B[h] to h or a frontier vertex of B[k] to k (or, if k is not yet
    started, a neighbour of B[h] to k). Options tried earlier are excluded
    from later branches. The first pattern vertex of each component is seeded
    at the minimum of its branch set.
    """

    def __init__(self, g: Graph, h: Graph, budget: Budget | None) -> None:
        self.adj = g.adj
        self.full = g.full_mask
        self.h = h
        self.p = h.n
        self.pedges = h.edge_list()
        self.budget = budget
        self.pdeg = [h.degree(v) for v in range(h.n)]

    def run(self) -> list[int] | None:
        return self.search([0] * self.p, [self.full] * self.p)

    def _feasible(self, B: list[int], dom: list[int], used: int) -> bool:
        adj = self.adj
        free = self.full & ~used
        if popcount(free) < sum(1 for b in B if not b):
            return False
        region = [0] * self.p
        nbr = [0] * self.p
        for x in range(self.p):
            if B[x]:
                region[x] = reach(adj, (dom[x] & free) | B[x], B[x] & -B[x])
                nbr[x] = _nb(adj, region[x])
        for x, y in self.pedges:
            if B[x] and B[y]:
                if not nbr[x] & region[y]:
                    return False
            elif B[x]:
                if not nbr[x] & dom[y] & free:
                    return False
            elif B[y]:
                if not nbr[y] & dom[x] & free:
                    return False
        return True

    def search(self, B: list[int], dom: list[int]) -> list[int] | None:
        if self.budget is not None:
            self.budget.tick()
        adj = self.adj
        used = 0
        for b in B:
            used |= b
        if not self._feasible(B, dom, used):
            return None
        free = self.full & ~used
        best = None
        for x, y in self.pedges:
            bx, by = B[x], B[y]
            if bx and by:
                if _nb(adj, bx) & by:
                    continue
                opts = [(f, x) for f in bits(_nb(adj, bx) & free & dom[x])]
                opts += [(f, y) for f in bits(_nb(adj, by) & free & dom[y])]
            elif bx or by:
                s, u = (x, y) if bx else (y, x)
                fr = _nb(adj, B[s]) & free
                opts = [(f, u) for f in bits(fr & dom[u])] + [(f, s) for f in bits(fr & dom[s])]
            else:
                continue
            if best is None or len(opts) < len(best):
                best = opts
                if not opts:
                    return None
        if best is None:
            fresh = [x for x in range(self.p) if not B[x]]
            if not fresh:
                return B
            root = max(fresh, key=lambda x: (self.pdeg[x], -x))
            # high-degree seeds first: positives surface sooner
            for v in sorted(bits(dom[root] & free), key=lambda u: -popcount(adj[u])):
                B2 = list(B)
                B2[root] = 1 << v
                dom2 = list(dom)
                dom2[root] = _above(v, self.full)
                found = self.search(B2, dom2)
                if found is not None:
                    return found
            return None
        dom = list(dom)
        for f, x in best:
            bit = 1 << f
            if not dom[x] & bit:
                continue
            B2 = list(B)
            B2[x] |= bit
            found = self.search(B2, list(dom))
            if found is not None:
                return found
            dom[x] &= ~bit
        return None


def _model(h: Graph, B: list[int]) -> MinorModel:
    return MinorModel(h, {x: frozenset(bits(B[x])) for x in range(h.n)})


def has_minor(g: Graph, h: Graph, budget: Budget | None = None) -> MinorModel | None:
    """A model of ``h`` in ``g``, or ``None`` if ``g`` has no ``h`` minor."""
    if h.n == 0:
        return MinorModel(h, {})
    if h.n > g.n or h.num_edges > g.num_edges:
        return None
    if budget is not None:
        budget.check()
    B = _MinorSearch(g, h, budget).run()
    if B is None:
        return None
    model = _model(h, B)
    ok, clause = validate_minor_model(g, model)
    assert ok, f"minor search produced an invalid model ({clause})"
    return model


# -- K_{2,k} ------------------------------------------------------------------------


class _K2kSearch:
    """Enumerate connected H1 (minimum s1) then connected H2 (minimum s2 > s1).

    Each connected set is produced once: frontier vertices tried earlier are
    excluded from later extensions. Bounds: every leaf is adjacent to the
    final hub, which lies inside the hub's reachable region.
    """

    def __init__(self, g: Graph, k: int, budget: Budget | None) -> None:
        self.adj = g.adj
        self.full = g.full_mask
        self.n = g.n
        self.k = k
        self.budget = budget

    def _tick(self) -> None:
        if self.budget is not None:
            self.budget.tick()

    def run(self) -> tuple[int, int, int] | None:
        for s1 in range(self.n):
            if popcount(self.adj[s1]) == 0 and self.k > 0:
                continue
            found = self.grow1(1 << s1, _above(s1, self.full), s1)
            if found is not None:
                return found
        return None

    def grow1(self, H1: int, allowed: int, s1: int) -> tuple[int, int, int] | None:
        self._tick()
        adj, k = self.adj, self.k
        R1 = reach(adj, allowed | H1, H1 & -H1)
        if popcount(_nb(adj, R1) & ~H1) < k + 1:
            # leaves plus at least one vertex of H2, all outside H1
            return None
        C = _nb(adj, H1) & ~H1
        if popcount(C) >= k:
            found = self.close1(H1, C, s1)
            if found is not None:
                return found
        frontier = C & allowed
        for f in bits(frontier):
            bit = 1 << f
            found = self.grow1(H1 | bit, allowed & ~bit, s1)
            if found is not None:
                return found
            allowed &= ~bit
        return None

    def close1(self, H1: int, C: int, s1: int) -> tuple[int, int, int] | None:
        adj = self.adj
        rest = _above(s1, self.full) & ~H1
        for s2 in bits(rest):
            allowed = _above(s2, self.full) & ~H1
            K = reach(adj, allowed | (1 << s2), 1 << s2)
            if popcount(_nb(adj, K) & C & ~(1 << s2)) < self.k:
                continue
            found = self.grow2(1 << s2, allowed, C)
            if found is not None:
                return H1, found[0], found[1]
        return None

    def grow2(self, H2: int, allowed: int, C: int) -> tuple[int, int] | None:
        self._tick()
        adj, k = self.adj, self.k
        touch = _nb(adj, H2) & C & ~H2
        if popcount(touch) >= k:
            return H2, touch
        R2 = reach(adj, allowed | H2, H2 & -H2)
        if popcount(_nb(adj, R2) & C & ~H2) < k:
            return None
        for f in bits(_nb(adj, H2) & allowed & ~H2):
            bit = 1 << f
            found = self.grow2(H2 | bit, allowed & ~bit, C)
            if found is not None:
                return found
            allowed &= ~bit
        return None


def has_k2k_minor(g: Graph, k: int, budget: Budget | None = None) -> MinorModel | None:
    """A K_{2,k} model with single-vertex leaf branch sets, or ``None``.

    Pattern ids follow ``complete_bipartite(2, k)``: hubs 0 and 1, leaves 2..k+1.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    pattern = complete_bipartite(2, k).graph
    if g.n < k + 2:
        return None
    if budget is not None:
        budget.check()
    found = _K2kSearch(g, k, budget).run()
    if found is None:
        return None
    H1, H2, touch = found
    leaves = bits(touch)[:k]
    branch = {0: frozenset(bits(H1)), 1: frozenset(bits(H2))}
    for i, v in enumerate(leaves):
        branch[2 + i] = frozenset((v,))
    model = MinorModel(pattern, branch)
    ok, clause = validate_minor_model(g, model)
    assert ok, f"K2k search produced an invalid model ({clause})"
    return model


def has_regular_strip_minor(g: Graph, k: int, budget: Budget | None = None) -> MinorModel | None:
    if k < 2:
        raise ValueError("regular strips have length >= 2")
    return has_minor(g, regular_strip(k).graph, budget)


def is_outerplanar(g: Graph, budget: Budget | None = None) -> bool:
    """No K4 and no K_{2,3} minor."""
    return (
        has_minor(g, Graph.complete(4), budget) is None
        and has_minor(g, complete_bipartite(2, 3).graph, budget) is None
    )


# -- strips ---------------------------------------------------------------------


def crossing_pairs(spec: StripSpec) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """All crossing chord pairs, each chord written (end on P1, end on P2)."""
    return spec.crossing_pairs()


def regular_strip_from_crossings(spec: StripSpec, k: int) -> MinorModel:
    """Model of ``regular_strip(k)`` in ``spec.graph`` built from k-1 crossing pairs.

    Each crossing pair is a braced rung: chords (x, y+1) and (x+1, y) in path
    positions. Ordered along P1, consecutive rungs are separated by path
    segments, and each segment becomes one branch set. Pattern ids follow
    ``regular_strip``: v_i -> i, w_i -> k + i.
    """
    if k < 2:
        raise StripError("regular strips have length >= 2")
    pairs = spec.crossing_pairs()
    if len(pairs) < k - 1:
        raise StripError(f"need {k - 1} crossing pairs for length {k}, strip has {len(pairs)}")
    P1, P2 = spec.paths
    pos = spec.side
    rungs = []
    for c1, c2 in pairs:
        (x1, y1), (x2, y2) = c1, c2
        a, b = pos[x1][1], pos[x2][1]
        ya, yb = pos[y1][1], pos[y2][1]
        if a > b:
            a, b, ya, yb = b, a, yb, ya
        # a joins ya (upper), b = a+1 joins yb = ya-1 (lower)
        rungs.append((a, b, yb, ya))
    rungs.sort()
    rungs = rungs[: k - 1]
    x = [[P1[rungs[0][0]]]]
    for i in range(1, k - 1):
        x.append([P1[j] for j in range(rungs[i - 1][1], rungs[i][1])])
    x.append([P1[rungs[-1][1]]])
    y = [[P2[j] for j in range(rungs[0][2], rungs[0][3])]]
    for i in range(1, k - 1):
        y.append([P2[j] for j in range(rungs[i - 1][3], rungs[i][3])])
    y.append([P2[rungs[-1][3]]])
    pattern = regular_strip(k).graph
    branch = {i: frozenset(x[i]) for i in range(k)}
    branch.update({k + i: frozenset(y[i]) for i in range(k)})
    model = MinorModel(pattern, branch)
    ok, clause = validate_minor_model(spec.graph, model)
    if not ok:
        raise StripError(f"extracted model fails validation ({clause})")
    return model


def j_bound(k: int) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    return 22 * (k - 1) + 4 * k + 1


def max_fans_and_strips(m: int) -> int:
    """Fans and strips added to a base graph on m vertices: each uses two non-center corners."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return m // 2
