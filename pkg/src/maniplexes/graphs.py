"""Properly edge-coloured graphs on dense integer flag sets.

A graph of rank ``n`` on ``F`` flags is ``n`` perfect matchings: for each
colour ``c`` in ``range(n)`` an array ``m[c]`` with ``m[c][v]`` the unique
``c``-neighbour of ``v``.  Proper colouring means the matchings are
fixed-point-free involutions and no two colours agree at any flag.

This module knows nothing about maniplexes; it provides the graph container,
component partitions, partition meets and colour-preserving isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    DisconnectedInput,
    FixedPoint,
    MultiEdge,
    NotInvolution,
    OutOfRange,
    SizeMismatch,
)

#: Hard ceiling on the number of colours; keeps colour masks in one machine word.
MAX_RANK = 64


@dataclass(frozen=True)
class ColouredGraph:
    """An immutable properly ``rank``-edge-coloured graph.

    ``matchings[c][v]`` is the ``c``-neighbour of flag ``v``.  Instances are
    only built through :func:`build_graph`, which validates the colouring.
    """

    rank: int
    size: int
    matchings: tuple[tuple[int, ...], ...]

    def neighbour(self, colour: int, flag: int) -> int:
        """The flag reached from ``flag`` along the ``colour`` edge."""
        if not 0 <= colour < self.rank:
            raise OutOfRange(f"colour {colour} not in range 0..{self.rank - 1}")
        return self.matchings[colour][flag]

    def flags(self) -> range:
        return range(self.size)

    def colours(self) -> range:
        return range(self.rank)


def build_graph(rank: int, matchings: Sequence[Sequence[int]]) -> ColouredGraph:
    """Validate and freeze a properly coloured graph.

    Raises, in canonical scan order (colour, then flag):
    :class:`OutOfRange` for bad rank/size/entries, :class:`SizeMismatch` for
    ragged rows, :class:`FixedPoint` / :class:`NotInvolution` for defective
    matchings and :class:`MultiEdge` when two colours agree at a flag.
    """
    if not 1 <= rank <= MAX_RANK:
        raise OutOfRange(f"rank {rank} not in range 1..{MAX_RANK}")
    if len(matchings) != rank:
        raise SizeMismatch(
            f"expected {rank} matchings, got {len(matchings)}"
        )
    size = len(matchings[0])
    if size <= 0:
        raise OutOfRange("graph needs at least one flag")
    frozen: list[tuple[int, ...]] = []
    for c, row in enumerate(matchings):
        if len(row) != size:
            raise SizeMismatch(
                f"colour {c} has {len(row)} entries, expected {size}"
            )
        row = tuple(row)
        for v in range(size):
            w = row[v]
            if not 0 <= w < size:
                raise OutOfRange(
                    f"colour {c} maps flag {v} to {w}, outside 0..{size - 1}"
                )
            if w == v:
                raise FixedPoint(c, v)
            if row[w] != v:
                raise NotInvolution(c, v)
        frozen.append(row)
    for c in range(rank):
        for d in range(c + 1, rank):
            for v in range(size):
                if frozen[c][v] == frozen[d][v]:
                    raise MultiEdge(c, d, v)
    return ColouredGraph(rank=rank, size=size, matchings=tuple(frozen))


class Partition:
    """A partition of ``range(size)`` with canonical block ids.

    Block ids are assigned by first appearance, so two partitions are equal
    iff their id arrays are equal; no normalisation pass is ever needed.
    """

    __slots__ = ("size", "ids", "_blocks")

    def __init__(self, ids: Sequence[int], *, _canonical: bool = False):
        if _canonical:
            self.ids = tuple(ids)
        else:
            relabel: dict[int, int] = {}
            out = []
            for x in ids:
                if x not in relabel:
                    relabel[x] = len(relabel)
                out.append(relabel[x])
            self.ids = tuple(out)
        self.size = len(self.ids)
        self._blocks: Optional[tuple[tuple[int, ...], ...]] = None

    def block_count(self) -> int:
        return max(self.ids) + 1 if self.ids else 0

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        """Blocks as ascending tuples, ordered by their smallest element."""
        if self._blocks is None:
            acc: list[list[int]] = [[] for _ in range(self.block_count())]
            for v, b in enumerate(self.ids):
                acc[b].append(v)
            self._blocks = tuple(tuple(b) for b in acc)
        return self._blocks

    def block_of(self, flag: int) -> tuple[int, ...]:
        return self.blocks()[self.ids[flag]]

    def same_block(self, a: int, b: int) -> bool:
        return self.ids[a] == self.ids[b]

    def is_discrete(self) -> bool:
        return self.block_count() == self.size

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Partition) and self.ids == other.ids

    def __hash__(self) -> int:
        return hash(self.ids)

    def __repr__(self) -> str:
        return f"Partition({self.block_count()} blocks on {self.size} flags)"


def components(graph: ColouredGraph, colours: Iterable[int]) -> Partition:
    """Connected components of the subgraph using only ``colours`` edges."""
    cols = sorted(set(colours))
    for c in cols:
        if not 0 <= c < graph.rank:
            raise OutOfRange(f"colour {c} not in range 0..{graph.rank - 1}")
    parent = list(range(graph.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in cols:
        row = graph.matchings[c]
        for v in range(graph.size):
            a, b = find(v), find(row[v])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return Partition([find(v) for v in range(graph.size)])


def partition_meet(p: Partition, q: Partition) -> Partition:
    """Common refinement: blocks are the non-empty intersections of blocks."""
    if p.size != q.size:
        raise SizeMismatch(
            f"partitions on {p.size} and {q.size} flags cannot meet"
        )
    seen: dict[tuple[int, int], int] = {}
    ids = []
    for a, b in zip(p.ids, q.ids):
        key = (a, b)
        if key not in seen:
            seen[key] = len(seen)
        ids.append(seen[key])
    return Partition(ids, _canonical=True)


def meet_all(parts: Iterable[Partition]) -> Partition:
    """Meet of a non-empty iterable of partitions."""
    it = iter(parts)
    try:
        acc = next(it)
    except StopIteration:
        raise OutOfRange("meet_all needs at least one partition") from None
    for p in it:
        acc = partition_meet(acc, p)
    return acc


def is_connected(graph: ColouredGraph) -> bool:
    return components(graph, graph.colours()).block_count() == 1


def are_isomorphic(
    g: ColouredGraph, h: ColouredGraph
) -> Optional[tuple[int, ...]]:
    """A colour-preserving isomorphism ``g -> h`` as a flag map, or None.

    Both graphs must be connected (an isomorphism is determined by the image
    of one flag, so we try every anchor in ``h`` for flag 0 of ``g``).
    """
    if g.rank != h.rank:
        return None
    if g.size != h.size:
        return None
    if not is_connected(g) or not is_connected(h):
        raise DisconnectedInput("isomorphism search requires connected graphs")
    for anchor in range(h.size):
        phi = _propagate(g, h, anchor)
        if phi is not None:
            return phi
    return None


def _propagate(
    g: ColouredGraph, h: ColouredGraph, anchor: int
) -> Optional[tuple[int, ...]]:
    """Extend ``0 -> anchor`` along edges; None on any conflict."""
    phi = [-1] * g.size
    phi[0] = anchor
    stack = [0]
    while stack:
        v = stack.pop()
        for c in range(g.rank):
            w = g.matchings[c][v]
            img = h.matchings[c][phi[v]]
            if phi[w] == -1:
                phi[w] = img
                stack.append(w)
            elif phi[w] != img:
                return None
    if -1 in phi or len(set(phi)) != g.size:
        return None
    return tuple(phi)
