"""Exact checks for independent pairs, agile, m-agile and dexterous sets, and m-connectedness.

A set X is m-agile if for every partition of X into at most m classes there
are pairwise disjoint connected subgraphs, one containing each class. Agile
means 2-agile. Connected vertex sets stand in for trees throughout; any
spanning tree of a connected cover is a tree cover.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, NamedTuple, Sequence

from .budget import Budget, BudgetExceeded
from .covers import covers_violation, solve_covers
from .flow import max_disjoint_paths
from .graph import Graph, GraphError, components, cut_vertices, is_connected
from .models import MinorModel

Partition = tuple[frozenset[int], ...]
Covers = list[frozenset[int]]

AGILE = "agile"
NOT_AGILE = "not-agile"
UNKNOWN = "unknown(budget)"


@dataclass
class AgilityVerdict:
    result: str
    X: frozenset[int]
    m: int
    witnesses: list[tuple[Partition, Covers]] = field(default_factory=list)
    failing: Partition | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.result == AGILE

    @property
    def known(self) -> bool:
        return self.result != UNKNOWN

    def to_dict(self) -> dict:
        d: dict = {"result": self.result, "X": sorted(self.X), "m": self.m, "partitions_checked": self.checked}
        if self.failing is not None:
            d["failing_partition"] = [sorted(b) for b in self.failing]
        if self.witnesses:
            d["witnesses"] = [
                {"partition": [sorted(b) for b in p], "covers": [sorted(c) for c in cov]}
                for p, cov in self.witnesses
            ]
        return d


def find_disjoint_connected_covers(
    g: Graph, blocks: Sequence[Iterable[int]], budget: Budget | None = None
) -> Covers | None:
    """Pairwise disjoint connected sets ``covers[i] ⊇ blocks[i]``, or ``None`` if impossible.

    Empty blocks get empty covers. Returned covers are inclusion-minimal among
    connected supersets reachable by deleting single non-block vertices.
    Raises ``BudgetExceeded`` if the budget runs out.
    """
    blocks = [frozenset(b) for b in blocks]
    covers = solve_covers(g, blocks, budget)
    if covers is not None:
        bad = covers_violation(g, blocks, covers)
        assert bad is None, f"solver produced an invalid witness ({bad})"
    return covers


def is_independent(
    g: Graph, X1: Iterable[int], X2: Iterable[int], budget: Budget | None = None
) -> Covers | None:
    X1, X2 = frozenset(X1), frozenset(X2)
    if X1 & X2:
        raise ValueError(f"X1 and X2 overlap in {sorted(X1 & X2)}")
    return find_disjoint_connected_covers(g, [X1, X2], budget)


def set_partitions(X: Iterable[int], m: int) -> Iterator[Partition]:
    """Partitions of sorted ``X`` into exactly ``m`` labelled-up-to-order classes, empty ones allowed.

    Canonical order: restricted growth strings in lexicographic order, so the
    smallest element always sits in the first class. For m=2 these are the
    2^(|X|-1) unordered bipartitions.
    """
    xs = sorted(X)
    if not xs:
        yield tuple(frozenset() for _ in range(max(m, 1)))
        return
    labels = [0] * len(xs)

    def rec(i: int, top: int) -> Iterator[Partition]:
        if i == len(xs):
            classes: list[set[int]] = [set() for _ in range(m)]
            for x, lab in zip(xs, labels):
                classes[lab].add(x)
            yield tuple(frozenset(c) for c in classes)
            return
        for lab in range(min(top + 2, m)):
            labels[i] = lab
            yield from rec(i + 1, max(top, lab))

    labels[0] = 0
    yield from rec(1, 0)


def is_m_agile(
    g: Graph, X: Iterable[int], m: int, budget: Budget | None = None, keep_witnesses: bool = True
) -> AgilityVerdict:
    if m < 1:
        raise ValueError("m must be at least 1")
    X = frozenset(X)
    verdict = AgilityVerdict(AGILE, X, m)
    try:
        for part in set_partitions(X, m):
            verdict.checked += 1
            covers = find_disjoint_connected_covers(g, part, budget)
            if covers is None:
                verdict.result = NOT_AGILE
                verdict.failing = part
                verdict.witnesses = []
                return verdict
            if keep_witnesses:
                verdict.witnesses.append((part, covers))
    except BudgetExceeded:
        verdict.result = UNKNOWN
        verdict.witnesses = []
    return verdict


def is_agile(
    g: Graph, X: Iterable[int], budget: Budget | None = None, keep_witnesses: bool = True
) -> AgilityVerdict:
    return is_m_agile(g, X, 2, budget, keep_witnesses)


def dexterity_order(X: Iterable[int]) -> int:
    return max(1, math.ceil(len(frozenset(X)) / 2))


def is_dexterous(
    g: Graph, X: Iterable[int], budget: Budget | None = None, keep_witnesses: bool = True
) -> AgilityVerdict:
    """m-agile for every m; equivalently ceil(|X|/2)-agile.

    Beyond ceil(|X|/2) classes a partition has two singleton classes, and
    merging them into one class gives a partition whose covers restrict back.
    """
    return is_m_agile(g, X, dexterity_order(X), budget, keep_witnesses)


def is_m_connected(
    g: Graph, X: Iterable[int], m: int
) -> tuple[bool, tuple[frozenset[int], frozenset[int]] | None]:
    """Any X1, X2 ⊆ X with |X1| = |X2| <= m are joined by |X1| disjoint paths.

    Returns the verdict and the first failing pair (canonical order) if any.
    Shared vertices of X1 and X2 count as paths of length zero.
    """
    xs = sorted(frozenset(X))
    if len(xs) < m:
        raise ValueError(f"|X| = {len(xs)} < m = {m}; m-connectedness needs |X| >= m")
    for s in range(1, m + 1):
        subsets = list(itertools.combinations(xs, s))
        for i, X1 in enumerate(subsets):
            for X2 in subsets[i:]:
                if max_disjoint_paths(g, X1, X2) < s:
                    return False, (frozenset(X1), frozenset(X2))
    return True, None


# -- search -------------------------------------------------------------------


def _checker(g: Graph, m: int, budget: Budget | None) -> Callable[[tuple[int, ...]], bool]:
    def check(S: tuple[int, ...]) -> bool:
        v = is_m_agile(g, S, m, budget, keep_witnesses=False)
        if v.result == UNKNOWN:
            raise BudgetExceeded("budget exhausted during subset search")
        return bool(v)

    return check


def find_agile_subset(
    g: Graph, size: int, m: int = 2, budget: Budget | None = None, start: Iterable[int] | None = None
) -> frozenset[int] | None:
    """Lexicographically first ``size``-set that is m-agile (agile for m=2), or ``None``.

    Subsets of m-agile sets are m-agile, so a candidate is only checked once
    all its one-smaller subsets have passed. ``start`` is tried first as a
    fast path. Raises ``BudgetExceeded`` when the budget runs out.
    """
    if size < 1:
        raise ValueError("size must be positive")
    if size > g.n:
        return None
    check = _checker(g, m, budget)
    if start is not None:
        first = tuple(sorted(start))
        if len(first) == size and check(first):
            return frozenset(first)
    memo: dict[tuple[int, ...], bool] = {}

    def ok(S: tuple[int, ...]) -> bool:
        hit = memo.get(S)
        if hit is not None:
            return hit
        if len(S) <= 1:
            res = True
        elif not all(ok(S[:i] + S[i + 1:]) for i in range(len(S))):
            res = False
        else:
            res = check(S)
        memo[S] = res
        return res

    def extend(S: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(S) == size:
            return S
        lo = S[-1] + 1 if S else 0
        for v in range(lo, g.n - (size - len(S)) + 1):
            T = S + (v,)
            if ok(T):
                found = extend(T)
                if found is not None:
                    return found
        return None

    found = extend(())
    return None if found is None else frozenset(found)


# -- reductions ------------------------------------------------------------------


class Restricted(NamedTuple):
    graph: Graph
    agile: frozenset[int]
    origin: list[int]  # new id -> id in the input graph


def reduce_to_2connected(g: Graph, X: Iterable[int]) -> Restricted:
    """Shrink to a 2-connected subgraph carrying an agile set of the same size.

    At a cut vertex x, all but at most one vertex of X lie in one component C
    of g - x (otherwise X is not agile); keep g[C + x] and replace the lost
    vertex of X, if any, by x. Repeats until no cut vertex is left.
    """
    X = frozenset(X)
    if len(X) < 4:
        raise ValueError("reduce_to_2connected needs |X| >= 4")
    if not is_connected(g):
        raise GraphError("reduce_to_2connected needs a connected graph")
    origin = list(range(g.n))
    while True:
        cuts = cut_vertices(g)
        if not cuts:
            return Restricted(g, X, origin)
        x = min(cuts)
        comps = components(g, within=[v for v in g.vertices if v != x])
        home = None
        for comp in comps:
            if len(X - comp) <= 1:
                home = comp
                break
        if home is None:
            raise ValueError(
                f"cut vertex {origin[x]} splits X across components; X is not agile"
            )
        lost = X - home
        keep = home | {x}
        new_X = (X - lost) | {x} if lost else X
        g, kept = g.induced_subgraph(keep)
        index = {v: i for i, v in enumerate(kept)}
        X = frozenset(index[v] for v in new_X)
        origin = [origin[v] for v in kept]


class MinimalMinor(NamedTuple):
    graph: Graph
    agile: frozenset[int]


def _still_agile(h: Graph, image: frozenset[int], n: int, budget: Budget | None) -> frozenset[int] | None:
    if len(image) == n:
        v = is_agile(h, image, budget, keep_witnesses=False)
        if v.result == UNKNOWN:
            raise BudgetExceeded("budget exhausted during reduction")
        if v:
            return image
    return find_agile_subset(h, n, budget=budget)


def single_move_minors(g: Graph) -> Iterator[tuple[str, tuple[int, int] | int, Graph, list[int]]]:
    """Every single-step proper minor: isolated-vertex deletions, then edge deletions, then contractions.

    Yields (kind, where, minor, old id -> new id with -1 for deleted vertices).
    """
    for v in g.vertices:
        if g.degree(v) == 0:
            h, mp = g.delete_vertices([v])
            yield "delete-vertex", v, h, [mp.get(u, -1) for u in g.vertices]
    ident = list(g.vertices)
    for e in g.edge_list():
        yield "delete-edge", e, g.delete_edge(*e), ident
    for e in g.edge_list():
        h, mp = g.contract_edge(*e)
        yield "contract", e, h, mp


def minor_minimal_reduction(g: Graph, n: int, budget: Budget | None = None) -> MinimalMinor:
    """Greedy single-move reduction to a minor-minimal graph still carrying an agile n-set.

    Moves are tried in canonical order (isolated vertices, edge deletions,
    contractions); the first move that keeps an agile n-set is taken and the
    scan restarts. Since carrying an agile n-set is closed upwards under
    minors, no single move succeeding means no proper minor succeeds.
    """
    X = find_agile_subset(g, n, budget=budget)
    if X is None:
        raise ValueError(f"graph has no agile set of size {n}")
    current = g
    while True:
        for _kind, _where, h, mp in single_move_minors(current):
            image = frozenset(mp[x] for x in X if mp[x] >= 0)
            Y = _still_agile(h, image, n, budget)
            if Y is not None:
                current, X = h, Y
                break
        else:
            return MinimalMinor(current, X)


def lift_through_minor(model: MinorModel, X_pattern: Iterable[int]) -> frozenset[int]:
    """One host vertex (the smallest) from the branch set of each pattern vertex in X."""
    return frozenset(min(model.branch[h]) for h in X_pattern)
