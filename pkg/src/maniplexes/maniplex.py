"""Maniplexes: connected properly coloured graphs whose distant colours commute.

A maniplex of rank ``n`` is a connected :class:`~maniplexes.graphs.ColouredGraph`
in which every pair of colours ``i, j`` with ``|i - j| > 1`` commutes pointwise
(equivalently, their 2-factors are 4-cycles).  This module provides the
validated wrapper, faces (components with one colour removed), the
low/high factorisation of middle-rank faces, and rewriting of coloured paths
into colour-window-ordered segments.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadTwoFactor,
    Disconnected,
    OutOfRange,
    PathUsesPivotColour,
    RankOutOfRange,
)
from .graphs import ColouredGraph, Partition, build_graph, components


@dataclass(frozen=True)
class Face:
    """A rank-``i`` face: one component of the graph with colour ``i`` removed.

    ``index`` is the face's position in the canonical component order
    (ascending smallest flag); ``rep`` is that smallest flag.
    """

    rank: int
    index: int
    rep: int
    flags: frozenset[int]

    def __repr__(self) -> str:
        return f"Face(rank={self.rank}, index={self.index}, size={len(self.flags)})"


@dataclass(frozen=True)
class FaceFactors:
    """Low/high factorisation data of a middle-rank face.

    ``below`` is the component through the face's representative using only
    colours under the face rank, ``above`` the one using only colours over it.
    The coordinate map ``below x above -> face`` is always a covering of
    constant degree ``covering_degree``; the face is their cartesian product
    exactly when ``is_product`` (degree 1, coordinates unique).
    """

    face: Face
    below: tuple[int, ...]
    above: tuple[int, ...]
    covering_degree: int
    is_product: bool


@dataclass(frozen=True)
class ColouredPath:
    """A walk recorded as its start flag and the colour of each step."""

    start: int
    colours: tuple[int, ...]
    end: int


class Maniplex:
    """A validated maniplex over a properly coloured graph.

    Raises :class:`Disconnected` or :class:`BadTwoFactor` (first offending
    colour pair and flag in scan order) when the axioms fail.  Component
    partitions are cached per colour subset.
    """

    def __init__(self, graph: ColouredGraph):
        self.graph = graph
        self.rank = graph.rank
        self.size = graph.size
        self._parts: dict[int, Partition] = {}
        self._faces: dict[int, tuple[Face, ...]] = {}
        self._validate()

    def _validate(self) -> None:
        g = self.graph
        full = components(g, g.colours())
        if full.block_count() > 1:
            other = next(v for v in g.flags() if not full.same_block(0, v))
            raise Disconnected(0, other)
        for i in range(g.rank):
            for j in range(i + 2, g.rank):
                mi, mj = g.matchings[i], g.matchings[j]
                for v in g.flags():
                    if mi[mj[v]] != mj[mi[v]]:
                        raise BadTwoFactor(i, j, v)

    # -- components and faces -------------------------------------------------

    def components_of(self, colours: Iterable[int]) -> Partition:
        """Cached component partition of the subgraph on ``colours``."""
        mask = 0
        for c in colours:
            if not 0 <= c < self.rank:
                raise OutOfRange(
                    f"colour {c} not in range 0..{self.rank - 1}"
                )
            mask |= 1 << c
        part = self._parts.get(mask)
        if part is None:
            cols = [c for c in range(self.rank) if mask >> c & 1]
            part = components(self.graph, cols)
            self._parts[mask] = part
        return part

    def faces(self, i: int) -> tuple[Face, ...]:
        """All rank-``i`` faces in canonical order (by smallest flag)."""
        if not 0 <= i < self.rank:
            raise RankOutOfRange(
                f"face rank {i} not in range 0..{self.rank - 1}"
            )
        cached = self._faces.get(i)
        if cached is None:
            part = self.components_of(c for c in range(self.rank) if c != i)
            cached = tuple(
                Face(rank=i, index=k, rep=block[0], flags=frozenset(block))
                for k, block in enumerate(part.blocks())
            )
            self._faces[i] = cached
        return cached

    def face_of(self, i: int, flag: int) -> Face:
        """The rank-``i`` face containing ``flag``."""
        part = self.components_of(c for c in range(self.rank) if c != i)
        return self.faces(i)[part.ids[flag]]

    def neighbour(self, colour: int, flag: int) -> int:
        return self.graph.neighbour(colour, flag)

    # -- face factorisation ---------------------------------------------------

    def face_factors(self, face: Face) -> FaceFactors:
        """Split a middle-rank face into its low-colour and high-colour parts.

        Only defined for ``1 <= face.rank <= rank - 2``; the extreme ranks
        have an empty colour side and raise :class:`RankOutOfRange`.
        """
        i = face.rank
        if not 1 <= i <= self.rank - 2:
            raise RankOutOfRange(
                f"face rank {i} has no two-sided factorisation in rank "
                f"{self.rank}"
            )
        low = self.components_of(range(i))
        high = self.components_of(range(i + 1, self.rank))
        below = low.block_of(face.rep)
        above = high.block_of(face.rep)
        size = len(face.flags)
        degree, rem = divmod(len(below) * len(above), size)
        assert rem == 0, "low/high coordinate map must have constant degree"
        unique = degree == 1
        if unique:
            # Coordinates are unique iff each high-component meets `below`
            # once and each low-component meets `above` once, within the face.
            below_set, above_set = set(below), set(above)
            for v in face.flags:
                if len(above_set & set(low.block_of(v))) != 1:
                    unique = False
                    break
                if len(below_set & set(high.block_of(v))) != 1:
                    unique = False
                    break
        return FaceFactors(
            face=face,
            below=below,
            above=above,
            covering_degree=degree,
            is_product=unique,
        )

    def face_as_maniplex(self, face: Face) -> "Maniplex":
        """A bottom or top face re-indexed as a maniplex of rank ``n - 1``.

        Rank-0 faces keep colours ``1..n-1`` shifted down by one; rank-``n-1``
        faces keep colours ``0..n-2``.  Middle ranks have a colour gap and are
        rejected.
        """
        n = self.rank
        if n < 2:
            raise RankOutOfRange("no proper face is a maniplex below rank 2")
        if face.rank == 0:
            colours = range(1, n)
        elif face.rank == n - 1:
            colours = range(n - 1)
        else:
            raise RankOutOfRange(
                f"face rank {face.rank} keeps a colour gap; only ranks 0 and "
                f"{n - 1} re-index to maniplexes"
            )
        flags = sorted(face.flags)
        local = {v: k for k, v in enumerate(flags)}
        rows = [
            [local[self.graph.matchings[c][v]] for v in flags] for c in colours
        ]
        return Maniplex(build_graph(n - 1, rows))


def validate(graph: ColouredGraph) -> Maniplex:
    """Check the maniplex axioms and wrap the graph."""
    return Maniplex(graph)


def walk(m: Maniplex, start: int, colours: Iterable[int]) -> int:
    """The flag reached from ``start`` applying matchings in order."""
    v = start
    for c in colours:
        v = m.graph.neighbour(c, v)
    return v


def make_path(m: Maniplex, start: int, colours: Iterable[int]) -> ColouredPath:
    cols = tuple(colours)
    return ColouredPath(start=start, colours=cols, end=walk(m, start, cols))


def normalize_path(
    m: Maniplex, path: ColouredPath, pivots: Sequence[int]
) -> list[ColouredPath]:
    """Rewrite ``path`` into segments filling the windows between ``pivots``.

    ``pivots`` is a strictly increasing colour list ``i_1 < ... < i_k`` that
    the path avoids.  The word is rewritten by cancelling equal adjacent
    steps and swapping adjacent steps whose colours differ by more than one
    (sound because such colours commute pointwise), until the sequence of
    window indices is non-decreasing.  The result is ``k + 1`` paths, the
    ``j``-th using only colours strictly between ``i_j`` and ``i_{j+1}``
    (with sentinels ``i_0 = -1`` and ``i_{k+1} = rank``), whose concatenation
    joins ``path.start`` to ``path.end``.  Rewriting never lengthens the word.
    """
    piv = list(pivots)
    if piv != sorted(set(piv)):
        raise OutOfRange("pivots must be strictly increasing")
    for c in piv:
        if not 0 <= c < m.rank:
            raise OutOfRange(f"pivot {c} not in range 0..{m.rank - 1}")
    for c in path.colours:
        if c in piv:
            raise PathUsesPivotColour(f"path step uses pivot colour {c}")

    cols = list(path.colours)
    # Each pass applies the first applicable rule; (length, inversions)
    # drops lexicographically, so this terminates.
    k = 0
    while k < len(cols) - 1:
        a, b = cols[k], cols[k + 1]
        if a == b:
            del cols[k : k + 2]
            k = max(k - 1, 0)
        elif a > b + 1:
            cols[k], cols[k + 1] = b, a
            k = max(k - 1, 0)
        else:
            k += 1

    segments: list[ColouredPath] = []
    at = path.start
    pos = 0
    for window in range(len(piv) + 1):
        seg: list[int] = []
        while pos < len(cols) and bisect_left(piv, cols[pos]) == window:
            seg.append(cols[pos])
            pos += 1
        nxt = walk(m, at, seg)
        segments.append(ColouredPath(start=at, colours=tuple(seg), end=nxt))
        at = nxt
    assert pos == len(cols), "rewriting left an out-of-window colour"
    assert at == path.end, "rewriting changed the path endpoint"
    return segments
