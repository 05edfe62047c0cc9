"""Vertex-disjoint path counting by unit-capacity max-flow on the split graph."""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .graph import Graph


def max_disjoint_paths(g: Graph, sources: Iterable[int], targets: Iterable[int]) -> int:
    """Maximum number of vertex-disjoint S-T paths (Menger).

    A vertex in both S and T counts as a path of length zero. Every vertex has
    capacity one, so the answer equals the size of a smallest S-T separator.
    """
    S = set(sources)
    T = set(targets)
    n = g.n
    # v_in = 2v, v_out = 2v+1, source = 2n, sink = 2n+1
    src, snk = 2 * n, 2 * n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n + 2)]

    def arc(u: int, v: int, c: int) -> None:
        if (u, v) not in cap:
            out[u].append(v)
            out[v].append(u)
            cap[(v, u)] = cap.get((v, u), 0)
        cap[(u, v)] = cap.get((u, v), 0) + c

    for v in range(n):
        arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, 1)
        arc(2 * v + 1, 2 * u, 1)
    for s in S:
        arc(src, 2 * s, 1)
    for t in T:
        arc(2 * t + 1, snk, 1)

    flow = 0
    while True:
        prev = {src: src}
        q = deque([src])
        while q and snk not in prev:
            u = q.popleft()
            for v in out[u]:
                if v not in prev and cap[(u, v)] > 0:
                    prev[v] = u
                    q.append(v)
        if snk not in prev:
            return flow
        v = snk
        while v != src:
            u = prev[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u
        flow += 1
