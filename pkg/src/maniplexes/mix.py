"""Mix (parallel product) of maniplexes and covering maps between them.

The mix of two maniplexes of equal rank is the component of a chosen base
flag pair in the direct product of their coloured graphs: colour ``c`` moves
both coordinates at once.  Either factor is recovered from the mix by a
covering (a colour-preserving surjection).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import OutOfRange, RankMismatch
from .graphs import build_graph
from .maniplex import Maniplex


@dataclass(frozen=True)
class CoveringMap:
    """A colour-preserving surjection ``map[flag of M] = flag of N``."""

    map: tuple[int, ...]


def mix_with_projections(
    m: Maniplex, n: Maniplex, base_m: int = 0, base_n: int = 0
) -> tuple[Maniplex, tuple[int, ...], tuple[int, ...]]:
    """The mix through ``(base_m, base_n)`` plus both projection maps.

    Flags of the mix are numbered in breadth-first discovery order from the
    base pair, exploring colours in ascending order, so the result is
    deterministic.  Raises :class:`RankMismatch` for unequal ranks.
    """
    if m.rank != n.rank:
        raise RankMismatch(f"cannot mix ranks {m.rank} and {n.rank}")
    if not 0 <= base_m < m.size:
        raise OutOfRange(f"base flag {base_m} not in 0..{m.size - 1}")
    if not 0 <= base_n < n.size:
        raise OutOfRange(f"base flag {base_n} not in 0..{n.size - 1}")
    start = (base_m, base_n)
    index: dict[tuple[int, int], int] = {start: 0}
    order = [start]
    for a, b in order:
        for c in range(m.rank):
            pair = (m.graph.matchings[c][a], n.graph.matchings[c][b])
            if pair not in index:
                index[pair] = len(index)
                order.append(pair)
    rows = [
        [
            index[(m.graph.matchings[c][a], n.graph.matchings[c][b])]
            for a, b in order
        ]
        for c in range(m.rank)
    ]
    mixed = Maniplex(build_graph(m.rank, rows))
    proj_m = tuple(a for a, _ in order)
    proj_n = tuple(b for _, b in order)
    return mixed, proj_m, proj_n


def mix(m: Maniplex, n: Maniplex, base_m: int = 0, base_n: int = 0) -> Maniplex:
    """The parallel product of two maniplexes through a base flag pair."""
    return mix_with_projections(m, n, base_m, base_n)[0]


def is_covering(m: Maniplex, n: Maniplex, phi: tuple[int, ...]) -> bool:
    """Whether ``phi`` is a colour-preserving surjection from M onto N."""
    if m.rank != n.rank or len(phi) != m.size:
        return False
    if any(not 0 <= t < n.size for t in phi):
        return False
    for c in range(m.rank):
        mm, nn = m.graph.matchings[c], n.graph.matchings[c]
        if any(phi[mm[v]] != nn[phi[v]] for v in range(m.size)):
            return False
    return len(set(phi)) == n.size


def find_covering(m: Maniplex, n: Maniplex) -> Optional[CoveringMap]:
    """The first covering of N by M in anchor order, or ``None``.

    Tries each flag of N as the image of flag 0 of M and propagates along
    colours; connectivity makes the extension unique, and a consistent
    image is automatically all of N.
    """
    if m.rank != n.rank:
        return None
    for anchor in range(n.size):
        phi = [-1] * m.size
        phi[0] = anchor
        stack = [0]
        ok = True
        while stack and ok:
            v = stack.pop()
            for c in range(m.rank):
                u = m.graph.matchings[c][v]
                img = n.graph.matchings[c][phi[v]]
                if phi[u] == -1:
                    phi[u] = img
                    stack.append(u)
                elif phi[u] != img:
                    ok = False
                    break
        if ok:
            out = tuple(phi)
            assert is_covering(m, n, out)
            return CoveringMap(out)
    return None
