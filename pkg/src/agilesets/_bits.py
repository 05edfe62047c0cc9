"""Small helpers for vertex sets encoded as int bitmasks."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def neighbourhood(adj: Sequence[int], mask: int) -> int:
    """Union of the neighbourhoods of the vertices in ``mask`` (may meet ``mask``)."""
    out = 0
    while mask:
        low = mask & -mask
        out |= adj[low.bit_length() - 1]
        mask ^= low
    return out


def reach(adj: Sequence[int], allowed: int, start: int) -> int:
    """Vertices of ``allowed`` reachable from ``start`` inside ``allowed``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    return reach(adj, mask, mask & -mask) == mask


def component_masks(adj: Sequence[int], mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        comp = reach(adj, rest, rest & -rest)
        out.append(comp)
        rest &= ~comp
    return out
