"""Strips: a cycle with two distinguished disjoint edges and chords between the two arcs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .graph import Graph


class StripError(ValueError):
    pass


Chord = tuple[int, int]


@dataclass(frozen=True)
class StripSpec:
    """Vertex ids are the entries of ``cycle`` in cyclic order.

    ``ab`` and ``cd`` are the two distinguished cycle edges. ``P1`` is the arc
    of ``C - {ab, cd}`` starting at ``a``, ``P2`` the arc starting at ``b``.
    Chords may be given in either orientation.
    """

    cycle: tuple[int, ...]
    ab: tuple[int, int]
    cd: tuple[int, int]
    chords: tuple[Chord, ...] = ()
    delete_ab: bool = False
    delete_cd: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "cycle", tuple(self.cycle))
        object.__setattr__(self, "chords", tuple(tuple(c) for c in self.chords))
        self.validate()

    # -- geometry ------------------------------------------------------------

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.cycle)}

    def is_cycle_edge(self, u: int, v: int) -> bool:
        L = len(self.cycle)
        d = (self.position[u] - self.position[v]) % L
        return d in (1, L - 1)

    @cached_property
    def paths(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        a, b = self.ab
        L = len(self.cycle)
        pa, pb = self.position[a], self.position[b]
        step = 1 if (pa - pb) % L == 1 else -1  # walk from a away from b
        cd = set(self.cd)

        def walk(start: int, direction: int) -> tuple[int, ...]:
            out = [self.cycle[start]]
            i = start
            while out[-1] not in cd:
                i = (i + direction) % L
                out.append(self.cycle[i])
            return tuple(out)

        return walk(pa, step), walk(pb, -step)

    @cached_property
    def side(self) -> dict[int, tuple[int, int]]:
        """Vertex -> (path index 0/1, position along that path)."""
        out = {}
        for p, path in enumerate(self.paths):
            for i, v in enumerate(path):
                out[v] = (p, i)
        return out

    def oriented(self, chord: Chord) -> Chord:
        """The chord as (endpoint on P1, endpoint on P2)."""
        x, y = chord
        return (x, y) if self.side[x][0] == 0 else (y, x)

    def cross(self, c1: Chord, c2: Chord) -> bool:
        """Chords cross iff their four ends are distinct and interleave along the cycle."""
        f1, f2 = c1
        f3, f4 = c2
        if len({f1, f2, f3, f4}) < 4:
            return False
        p = self.position
        lo, hi = sorted((p[f1], p[f2]))
        inside3 = lo < p[f3] < hi
        inside4 = lo < p[f4] < hi
        return inside3 != inside4

    def braced(self, c1: Chord, c2: Chord) -> bool:
        f1, f2 = c1
        f3, f4 = c2
        e = self.is_cycle_edge
        return (e(f1, f3) and e(f2, f4)) or (e(f1, f4) and e(f2, f3))

    # -- validation ------------------------------------------------------------

    def validate(self) -> None:
        L = len(self.cycle)
        if L < 4 or sorted(self.cycle) != list(range(L)):
            raise StripError("cycle must list the vertices 0..L-1 once each, L >= 4")
        for name, (u, v) in (("ab", self.ab), ("cd", self.cd)):
            if u not in self.position or v not in self.position or not self.is_cycle_edge(u, v):
                raise StripError(f"{name}={u, v} is not an edge of the cycle")
        if set(self.ab) & set(self.cd):
            raise StripError(f"ab={self.ab} and cd={self.cd} are not disjoint")
        side = self.side
        seen = set()
        for ch in self.chords:
            x, y = ch
            if x not in side or y not in side or x == y:
                raise StripError(f"chord {ch} has an invalid endpoint")
            if side[x][0] == side[y][0]:
                raise StripError(f"chord {ch} does not join the two paths")
            if self.is_cycle_edge(x, y):
                raise StripError(f"chord {ch} duplicates a cycle edge")
            key = frozenset(ch)
            if key in seen:
                raise StripError(f"chord {ch} listed twice")
            seen.add(key)
        counts = [0] * len(self.chords)
        for i, j in itertools.combinations(range(len(self.chords)), 2):
            c1, c2 = self.chords[i], self.chords[j]
            if self.cross(c1, c2):
                counts[i] += 1
                counts[j] += 1
                if counts[i] > 1 or counts[j] > 1:
                    worst = c1 if counts[i] > 1 else c2
                    raise StripError(f"chord {worst} is crossed by more than one chord (e.g. {c1} x {c2})")
                if not self.braced(c1, c2):
                    raise StripError(f"crossing chords {c1} and {c2} are not braced by cycle edges")
        if self.delete_ab or self.delete_cd:
            g = self.graph
            for v in g.vertices:
                if g.degree(v) < 2:
                    raise StripError(f"vertex {v} has degree {g.degree(v)} < 2 after deleting corner edges")

    # -- derived ------------------------------------------------------------

    @cached_property
    def graph(self) -> Graph:
        L = len(self.cycle)
        edges = {tuple(sorted((self.cycle[i], self.cycle[(i + 1) % L]))) for i in range(L)}
        if self.delete_ab:
            edges.discard(tuple(sorted(self.ab)))
        if self.delete_cd:
            edges.discard(tuple(sorted(self.cd)))
        edges |= {tuple(sorted(c)) for c in self.chords}
        return Graph(L, frozenset(edges))

    @property
    def corners(self) -> frozenset[int]:
        return frozenset(self.ab) | frozenset(self.cd)

    def crossing_pairs(self) -> list[tuple[Chord, Chord]]:
        out = []
        for c1, c2 in itertools.combinations(self.chords, 2):
            if self.cross(c1, c2):
                out.append((self.oriented(c1), self.oriented(c2)))
        return out

    @cached_property
    def length(self) -> int:
        """Largest set of pairwise non-crossing chords with pairwise disjoint ends.

        Such chords have strictly increasing positions along both paths, so this
        is a longest-chain computation.
        """
        pts = sorted((self.side[x][1], self.side[y][1]) for x, y in map(self.oriented, self.chords))
        best = [1] * len(pts)
        for j in range(len(pts)):
            for i in range(j):
                if pts[i][0] < pts[j][0] and pts[i][1] < pts[j][1]:
                    best[j] = max(best[j], best[i] + 1)
        return max(best, default=0)


def regular_strip_spec(k: int) -> StripSpec:
    """The length-k regular strip as a strip, using the ids of ``generators.regular_strip``."""
    if k < 2:
        raise StripError("regular strips have length >= 2")
    v = list(range(k))
    w = list(range(k, 2 * k))
    chords = []
    for i in range(k - 1):
        chords.append((v[i], w[i + 1]))
        chords.append((w[i], v[i + 1]))
    return StripSpec(
        cycle=tuple(v + w[::-1]),
        ab=(v[0], w[0]),
        cd=(v[-1], w[-1]),
        chords=tuple(chords),
        delete_ab=True,
        delete_cd=True,
    )


def counterexample_strip_spec(n: int) -> StripSpec:
    """The counterexample graph on r_0..r_n, w_1..w_{n-1} as a strip (ids as in the generator).

    The cycle runs r_0 .. r_n, w_{n-1} .. w_1; the distinguished edges are
    r_0 w_1 and r_n w_{n-1}; every other diagonal is a chord.
    """
    if n < 3:
        raise StripError("counterexample needs n >= 3")
    r = list(range(n + 1))
    w = {i: n + i for i in range(1, n)}
    cycle = r + [w[i] for i in range(n - 1, 0, -1)]
    chords = []
    for i in range(1, n):
        # w_i r_{i+1} and w_i r_{i-1}, skipping the two distinguished edges
        if i != n - 1:
            chords.append((w[i], r[i + 1]))
        if i - 1 != 0:
            chords.append((w[i], r[i - 1]))
    return StripSpec(cycle=tuple(cycle), ab=(r[0], w[1]), cd=(r[n], w[n - 1]), chords=tuple(chords))
