"""Posets induced by maniplexes.

The elements of rank ``i`` are the rank-``i`` faces (components with colour
``i`` removed), ordered by rank together with nonempty flag-set intersection,
plus a bottom and a top face.  Elements are addressed as ``(rank, index)``
pairs; rank ``-1`` and rank ``n`` with index 0 denote the bottom and top.

This module also hosts the shared :class:`CheckResult` verdict type and the
poset-side polytope checks: uniform chain length, the diamond condition,
strong flag connectivity, and faithfulness of the flag-to-chain map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import NotAChain, NotComparable, OutOfRange
from .graphs import Partition, meet_all
from .maniplex import Maniplex

Ref = tuple[int, int]


@dataclass(frozen=True)
class CheckResult:
    """A verdict with a deterministic first witness when it fails."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class MaximalChain:
    """One face per rank from ``-1`` to ``n``, as ``(rank, index)`` refs."""

    faces: tuple[Ref, ...]

    @property
    def proper(self) -> tuple[Ref, ...]:
        return self.faces[1:-1]


@dataclass(frozen=True)
class PosetReport:
    """The poset-side polytopality breakdown."""

    is_ranked_bounded: bool
    uniform_chain_length: CheckResult
    diamond: CheckResult
    strong_flag_connected: CheckResult
    faithful: Optional[CheckResult]
    chain_count: int
    is_polytope: bool


class InducedPoset:
    """A ranked bounded poset whose proper elements carry flag sets.

    ``level_flags[r][k]`` is the flag set of element ``(r, k)``; ``universe``
    is the flag set of both improper elements.  Comparability of proper
    elements is rank inequality plus nonempty flag-set intersection, so
    sections of a poset reuse the ambient flag sets unchanged.
    """

    def __init__(
        self,
        n: int,
        level_flags: Iterable[Iterable[frozenset[int]]],
        universe: frozenset[int],
        source: Optional[Maniplex] = None,
    ):
        self.n = n
        self.level_flags = tuple(tuple(level) for level in level_flags)
        self.universe = frozenset(universe)
        self.source = source
        self._adj: Optional[tuple[tuple[tuple[int, ...], ...], ...]] = None
        self._chains: Optional[tuple[tuple[int, ...], ...]] = None
        self._report: Optional[PosetReport] = None

    # -- basic structure ------------------------------------------------------

    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.level_flags)

    def refs(self, include_improper: bool = False) -> Iterator[Ref]:
        if include_improper:
            yield (-1, 0)
        for r, level in enumerate(self.level_flags):
            for k in range(len(level)):
                yield (r, k)
        if include_improper:
            yield (self.n, 0)

    def _check_ref(self, ref: Ref) -> None:
        r, k = ref
        if r == -1 or r == self.n:
            if k != 0:
                raise OutOfRange(f"improper rank {r} has a single face, not {k}")
            return
        if not 0 <= r < self.n:
            raise OutOfRange(f"rank {r} not in range -1..{self.n}")
        if not 0 <= k < len(self.level_flags[r]):
            raise OutOfRange(f"rank {r} has no face {k}")

    def flags_of(self, ref: Ref) -> frozenset[int]:
        self._check_ref(ref)
        r, k = ref
        if r == -1 or r == self.n:
            return self.universe
        return self.level_flags[r][k]

    def leq(self, a: Ref, b: Ref) -> bool:
        """Order relation: equal, or lower rank with intersecting flag sets."""
        self._check_ref(a)
        self._check_ref(b)
        if a == b:
            return True
        if a[0] >= b[0]:
            return False
        return bool(self.flags_of(a) & self.flags_of(b))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InducedPoset):
            return NotImplemented
        return (
            self.n == other.n
            and self.level_flags == other.level_flags
            and self.universe == other.universe
        )

    def __hash__(self) -> int:
        return hash((self.n, self.level_flags, self.universe))

    # -- chains ---------------------------------------------------------------

    def _consecutive_adj(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """``adj[r][k]``: indices at rank ``r + 1`` incident to ``(r, k)``."""
        if self._adj is None:
            adj = []
            for r in range(self.n - 1):
                lo, hi = self.level_flags[r], self.level_flags[r + 1]
                adj.append(
                    tuple(
                        tuple(k2 for k2, f2 in enumerate(hi) if f1 & f2)
                        for f1 in lo
                    )
                )
            self._adj = tuple(adj)
        return self._adj

    def _chain_tuples(self) -> tuple[tuple[int, ...], ...]:
        """All maximal chains as per-rank face indices, in lex order."""
        if self._chains is None:
            if self.n <= 0:
                self._chains = ((),)
            else:
                adj = self._consecutive_adj()
                out: list[tuple[int, ...]] = []
                prefix: list[int] = []

                def rec(r: int, k: int) -> None:
                    prefix.append(k)
                    if r == self.n - 1:
                        out.append(tuple(prefix))
                    else:
                        for k2 in adj[r][k]:
                            rec(r + 1, k2)
                    prefix.pop()

                for k0 in range(len(self.level_flags[0])):
                    rec(0, k0)
                self._chains = tuple(out)
        return self._chains

    def maximal_chains(self) -> tuple[MaximalChain, ...]:
        return tuple(
            MaximalChain(
                ((-1, 0),)
                + tuple((r, k) for r, k in enumerate(ct))
                + ((self.n, 0),)
            )
            for ct in self._chain_tuples()
        )

    def report(self) -> PosetReport:
        if self._report is None:
            self._report = _build_report(self)
        return self._report


def induced_poset(m: Maniplex) -> InducedPoset:
    """The face poset of a maniplex, with one level per colour."""
    return InducedPoset(
        n=m.rank,
        level_flags=(
            tuple(f.flags for f in m.faces(i)) for i in range(m.rank)
        ),
        universe=frozenset(range(m.size)),
        source=m,
    )


def maximal_chains(p: InducedPoset) -> tuple[MaximalChain, ...]:
    return p.maximal_chains()


def chain_intersection(
    p: "InducedPoset | Maniplex", faces: Iterable[object]
) -> frozenset[int]:
    """Common flags of a chain (pairwise comparable faces).

    The first argument may be an :class:`InducedPoset` or a
    :class:`~maniplexes.maniplex.Maniplex` (whose induced poset is built on
    the fly).  Faces may be ``(rank, index)`` pairs or
    :class:`~maniplexes.maniplex.Face` objects.  Improper refs are allowed
    and contribute the full flag universe.  Two distinct proper faces of
    equal rank, or an incomparable pair, raise :class:`NotAChain`.  The
    result is never empty for a valid chain.
    """
    if isinstance(p, Maniplex):
        p = induced_poset(p)
    refs = sorted(
        {
            (f.rank, f.index) if hasattr(f, "rank") and hasattr(f, "index") else tuple(f)
            for f in faces
        }
    )
    for ref in refs:
        p._check_ref(ref)
    proper = [ref for ref in refs if 0 <= ref[0] < p.n]
    for i, a in enumerate(proper):
        for b in proper[i + 1 :]:
            if a[0] == b[0]:
                raise NotAChain(f"faces {a} and {b} share rank {a[0]}")
            if not p.leq(a, b):
                raise NotAChain(f"faces {a} and {b} are incomparable")
    inter = p.universe
    for ref in proper:
        inter = inter & p.flags_of(ref)
    assert inter, "a chain of faces must share at least one flag"
    return inter


def all_chains(p: InducedPoset) -> Iterator[tuple[Ref, ...]]:
    """Every nonempty chain of proper faces, in lexicographic DFS order."""
    chosen: list[Ref] = []

    def rec(next_rank: int) -> Iterator[tuple[Ref, ...]]:
        for r in range(next_rank, p.n):
            for k in range(len(p.level_flags[r])):
                ref = (r, k)
                if all(p.leq(prev, ref) for prev in chosen):
                    chosen.append(ref)
                    yield tuple(chosen)
                    yield from rec(r + 1)
                    chosen.pop()

    yield from rec(0)


def section(p: InducedPoset, a: Ref, b: Ref) -> InducedPoset:
    """The interval ``{h : a <= h <= b}`` re-ranked with ``a, b`` improper."""
    p._check_ref(a)
    p._check_ref(b)
    if not p.leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    levels = []
    for r in range(a[0] + 1, b[0]):
        levels.append(
            tuple(
                fl
                for k, fl in enumerate(p.level_flags[r])
                if p.leq(a, (r, k)) and p.leq((r, k), b)
            )
        )
    return InducedPoset(
        n=b[0] - a[0] - 1,
        level_flags=levels,
        universe=p.flags_of(a) & p.flags_of(b),
        source=None,
    )


# -- faithfulness -------------------------------------------------------------


def _face_index(m: Maniplex, i: int, flag: int) -> int:
    part = m.components_of(c for c in range(m.rank) if c != i)
    return part.ids[flag]


def chain_of_flag(m: Maniplex, flag: int) -> MaximalChain:
    """The faces through one flag, one per rank, with the improper ends."""
    return MaximalChain(
        ((-1, 0),)
        + tuple((i, _face_index(m, i, flag)) for i in range(m.rank))
        + ((m.rank, 0),)
    )


def is_faithful(m: Maniplex, p: Optional[InducedPoset] = None) -> CheckResult:
    """Whether distinct flags always lie on distinct maximal chains.

    Checked as discreteness of the meet of the single-colour-removed
    component partitions.  A failure witness is ``(chain, (flag_a, flag_b))``:
    two flags sharing every face.
    """
    parts = [
        m.components_of(c for c in range(m.rank) if c != i)
        for i in range(m.rank)
    ]
    met = meet_all(parts)
    if met.is_discrete():
        return CheckResult(True)
    block = next(b for b in met.blocks() if len(b) > 1)
    return CheckResult(False, (chain_of_flag(m, block[0]), (block[0], block[1])))


def faithful_by_chain_count(m: Maniplex, p: InducedPoset) -> CheckResult:
    """Faithfulness via ``#maximal chains == #flags`` (the map is onto)."""
    chains = len(p._chain_tuples())
    if chains == m.size:
        return CheckResult(True)
    return CheckResult(False, (chains, m.size))


def faithful_by_enumeration(m: Maniplex, p: InducedPoset) -> CheckResult:
    """Faithfulness via every maximal chain meeting in exactly one flag."""
    for ct in p._chain_tuples():
        refs = tuple((r, k) for r, k in enumerate(ct))
        inter = chain_intersection(p, refs)
        if len(inter) > 1:
            flags = sorted(inter)
            return CheckResult(
                False,
                (
                    MaximalChain(((-1, 0),) + refs + ((p.n, 0),)),
                    (flags[0], flags[1]),
                ),
            )
    return CheckResult(True)


# -- polytope conditions ------------------------------------------------------


def uniform_chain_length(p: InducedPoset) -> CheckResult:
    """Whether every maximal chain of the order has one face per rank.

    Equivalent local form: every strict pair with a rank gap admits an
    intermediate element one rank above the lower face.
    """
    refs = list(p.refs(include_improper=True))
    for a in refs:
        for b in refs:
            if b[0] - a[0] < 2 or not p.leq(a, b):
                continue
            r = a[0] + 1
            mids = (
                range(1)
                if r == -1 or r == p.n
                else range(len(p.level_flags[r]))
            )
            if not any(
                p.leq(a, (r, k)) and p.leq((r, k), b) for k in mids
            ):
                return CheckResult(False, (a, b))
    return CheckResult(True)


def diamond(p: InducedPoset) -> CheckResult:
    """Whether each rank gap of two is filled by exactly two middle faces.

    For every ``i`` in ``0..n-1`` and incident faces ``E`` of rank ``i - 1``
    and ``F`` of rank ``i + 1`` there must be exactly two rank-``i`` faces
    between them.  The witness is the first ``(E, F, count)`` violation.
    """

    def level(r: int) -> list[Ref]:
        if r == -1 or r == p.n:
            return [(r, 0)]
        return [(r, k) for k in range(len(p.level_flags[r]))]

    for i in range(p.n):
        for e in level(i - 1):
            for f in level(i + 1):
                if not p.leq(e, f):
                    continue
                count = sum(
                    1
                    for g in level(i)
                    if p.leq(e, g) and p.leq(g, f)
                )
                if count != 2:
                    return CheckResult(False, (e, f, count))
    return CheckResult(True)


def strong_flag_connectivity(p: InducedPoset) -> CheckResult:
    """Whether any two maximal chains are joined by single-face steps
    through chains containing their common faces.

    For each subset of ranks, chains are grouped by their projection to
    those ranks and the groups' one-face-step components are computed once;
    a pair of chains is then judged in the group of the ranks where they
    agree.  The witness is the first failing chain pair in lex order.
    """
    chains = p._chain_tuples()
    c = len(chains)
    n = p.n
    if c <= 1 or n <= 0:
        return CheckResult(True)

    # roots[mask][t]: component label of chain t among the chains that share
    # its projection to the ranks in `mask`, under moves changing one face.
    roots: list[dict[int, int]] = []
    any_split = False
    for mask in range(1 << n):
        shared = [r for r in range(n) if mask >> r & 1]
        free = [r for r in range(n) if not mask >> r & 1]
        parent = list(range(c))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        groups: dict[tuple[int, ...], list[int]] = {}
        for t, ch in enumerate(chains):
            groups.setdefault(tuple(ch[r] for r in shared), []).append(t)
        for members in groups.values():
            for r in free:
                buckets: dict[tuple[int, ...], int] = {}
                for t in members:
                    ch = chains[t]
                    key = ch[:r] + ch[r + 1 :]
                    first = buckets.setdefault(key, t)
                    if first != t:
                        ra, rb = find(first), find(t)
                        if ra != rb:
                            parent[rb] = ra
        root_of = {t: find(t) for t in range(c)}
        for members in groups.values():
            if len({root_of[t] for t in members}) > 1:
                any_split = True
        roots.append(root_of)

    if not any_split:
        return CheckResult(True)

    for t1 in range(c):
        ch1 = chains[t1]
        for t2 in range(t1 + 1, c):
            ch2 = chains[t2]
            mask = 0
            for r in range(n):
                if ch1[r] == ch2[r]:
                    mask |= 1 << r
            root_of = roots[mask]
            if root_of[t1] != root_of[t2]:
                wrap = lambda ct: MaximalChain(
                    ((-1, 0),)
                    + tuple((r, k) for r, k in enumerate(ct))
                    + ((n, 0),)
                )
                return CheckResult(False, (wrap(ch1), wrap(ch2)))
    return CheckResult(True)


def _build_report(p: InducedPoset) -> PosetReport:
    uniform = uniform_chain_length(p)
    dia = diamond(p)
    sfc = strong_flag_connectivity(p)
    faithful = is_faithful(p.source, p) if p.source is not None else None
    return PosetReport(
        is_ranked_bounded=True,
        uniform_chain_length=uniform,
        diamond=dia,
        strong_flag_connected=sfc,
        faithful=faithful,
        chain_count=len(p._chain_tuples()),
        is_polytope=uniform.holds and dia.holds and sfc.holds,
    )


def is_polytope(p: InducedPoset) -> PosetReport:
    """Ranked + uniform chains + diamond + strong flag connectivity."""
    return p.report()


def poset_isomorphic(
    p: InducedPoset, q: InducedPoset
) -> Optional[dict[Ref, Ref]]:
    """An order isomorphism matching ranks, or ``None``.

    Backtracking over proper elements rank by rank, pruned by up/down degree
    profiles; improper elements are mapped to each other implicitly.
    """
    if p.n != q.n or p.counts() != q.counts():
        return None

    def profile(s: InducedPoset, ref: Ref) -> tuple[int, ...]:
        down = sum(
            1
            for k in range(len(s.level_flags[ref[0] - 1]))
            if s.leq((ref[0] - 1, k), ref)
        ) if ref[0] > 0 else 0
        up = sum(
            1
            for k in range(len(s.level_flags[ref[0] + 1]))
            if s.leq(ref, (ref[0] + 1, k))
        ) if ref[0] < s.n - 1 else 0
        return (down, up)

    p_refs = [(r, k) for r in range(p.n) for k in range(len(p.level_flags[r]))]
    q_prof = {ref: profile(q, ref) for ref in q.refs()}
    p_prof = {ref: profile(p, ref) for ref in p_refs}
    if sorted(p_prof.values()) != sorted(q_prof.values()):
        return None

    mapping: dict[Ref, Ref] = {}
    used: set[Ref] = set()

    def rec(pos: int) -> bool:
        if pos == len(p_refs):
            return True
        a = p_refs[pos]
        for k in range(len(q.level_flags[a[0]])):
            b = (a[0], k)
            if b in used or q_prof[b] != p_prof[a]:
                continue
            ok = True
            for a2, b2 in mapping.items():
                if p.leq(a2, a) != q.leq(b2, b) or p.leq(a, a2) != q.leq(
                    b, b2
                ):
                    ok = False
                    break
            if ok:
                mapping[a] = b
                used.add(b)
                if rec(pos + 1):
                    return True
                del mapping[a]
                used.remove(b)
        return False

    if rec(0):
        out = dict(mapping)
        out[(-1, 0)] = (-1, 0)
        out[(p.n, 0)] = (q.n, 0)
        return out
    return None
