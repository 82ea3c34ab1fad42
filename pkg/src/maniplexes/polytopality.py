"""Equivalent polytopality criteria for maniplexes.

A maniplex is polytopal when its induced poset is a polytope (ranked with
uniform chain length, diamond condition, strong flag connectivity) and the
maniplex is then isomorphic to the flag graph of that poset.  This is
equivalent to three partition-intersection properties, checked here
independently and cross-compared:

* the full property over every nonempty colour subset (``check_cip``),
* the window property over colour intervals (``check_wpip``),
* the symmetric property over arbitrary colour-subset pairs (``check_spip``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import (
    InconsistentVerdicts,
    ManiplexError,
    NotAPolytope,
    RankTooLargeForExhaustive,
)
from .graphs import (
    Partition,
    are_isomorphic,
    build_graph,
    meet_all,
    partition_meet,
)
from .maniplex import Maniplex
from .posets import (
    CheckResult,
    InducedPoset,
    MaximalChain,
    PosetReport,
    all_chains,
    chain_of_flag,
    induced_poset,
    is_polytope,
)


@dataclass(frozen=True)
class CipWitness:
    """A colour subset whose joint components are too coarse, shown by two
    flags sharing every single-colour-removed component but not the joint
    one."""

    colours: tuple[int, ...]
    flag_a: int
    flag_b: int


@dataclass(frozen=True)
class WindowWitness:
    """A colour window ``(low, high)`` violating the interval property."""

    low: int
    high: int
    flag_a: int
    flag_b: int


@dataclass(frozen=True)
class SpipWitness:
    """A pair of colour subsets violating the symmetric property."""

    colours_a: tuple[int, ...]
    colours_b: tuple[int, ...]
    flag_a: int
    flag_b: int


@dataclass(frozen=True)
class WpipResult:
    """Window-property verdict with every failing ``(low, high)`` pair."""

    holds: bool
    witness: Optional[WindowWitness]
    failures: tuple[tuple[int, int], ...]

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class PolytopalityReport:
    """All criteria, their agreement, and the flag-graph witness."""

    cip: CheckResult
    wpip: WpipResult
    spip: CheckResult
    poset: PosetReport
    verdicts_consistent: bool
    polytopal: bool
    flag_graph_isomorphism: Optional[tuple[int, ...]]


def _split_pair(coarse: Partition, fine: Partition) -> tuple[int, int]:
    """First flag pair (canonical block order) joined by ``coarse`` but
    separated by ``fine``."""
    for block in coarse.blocks():
        tid = fine.ids[block[0]]
        for f in block[1:]:
            if fine.ids[f] != tid:
                return block[0], f
    raise AssertionError("partitions compared unequal but nothing splits")


def check_cip(m: Maniplex) -> CheckResult:
    """Intersection property over every nonempty colour subset.

    For each subset ``S`` (ascending size, then lexicographic), the meet of
    the single-colour-removed partitions over ``S`` must equal the partition
    with all of ``S`` removed.  The witness is the first failing subset with
    the first flag pair its meet joins wrongly.
    """
    n = m.rank
    for size in range(1, n + 1):
        for sub in combinations(range(n), size):
            target = m.components_of(c for c in range(n) if c not in sub)
            met = meet_all(
                m.components_of(c for c in range(n) if c != i) for i in sub
            )
            if met != target:
                a, b = _split_pair(met, target)
                return CheckResult(False, CipWitness(sub, a, b))
    return CheckResult(True)


def check_cip_via_chains(
    m: Maniplex, p: Optional[InducedPoset] = None
) -> CheckResult:
    """Second, independent intersection oracle via chains of faces.

    For every chain, the faces' common flag set must form a single component
    of the subgraph using the colours outside the chain's ranks.  Exhaustive
    over all chains, so only suitable for small posets.
    """
    if p is None:
        p = induced_poset(m)
    for refs in all_chains(p):
        ranks = frozenset(r for r, _ in refs)
        inter = p.flags_of(refs[0])
        for ref in refs[1:]:
            inter = inter & p.flags_of(ref)
        part = m.components_of(c for c in range(m.rank) if c not in ranks)
        ids = {part.ids[f] for f in inter}
        if len(ids) != 1:
            flags = sorted(inter)
            first = part.ids[flags[0]]
            other = next(f for f in flags if part.ids[f] != first)
            return CheckResult(False, (refs, (flags[0], other)))
    return CheckResult(True)


def check_wpip(m: Maniplex) -> WpipResult:
    """Interval property: for every ``low < high``, the meet of the
    components over colours above ``low`` and below ``high`` must equal the
    components strictly between.  Collects every failing pair."""
    n = m.rank
    failures: list[tuple[int, int]] = []
    first: Optional[WindowWitness] = None
    for low in range(n):
        for high in range(low + 1, n):
            above = m.components_of(range(low + 1, n))
            below = m.components_of(range(high))
            between = m.components_of(range(low + 1, high))
            met = partition_meet(above, below)
            if met != between:
                a, b = _split_pair(met, between)
                failures.append((low, high))
                if first is None:
                    first = WindowWitness(low, high, a, b)
    return WpipResult(not failures, first, tuple(failures))


def check_spip(m: Maniplex, exhaustive: bool = False) -> CheckResult:
    """Symmetric property: for any colour subsets ``A, B``, the meet of
    their component partitions must equal the components of ``A & B``.

    Exhaustive over all subset pairs for rank at most 6 (pairs where one
    subset contains the other hold trivially and are skipped; the empty
    subset is included).  Above rank 6 the exhaustive scan is refused and
    the verdict is delegated to the interval property, whose witnesses are
    valid subset pairs here.
    """
    n = m.rank
    if n > 6:
        if exhaustive:
            raise RankTooLargeForExhaustive(
                f"rank {n} would need {4 ** n} subset pairs"
            )
        w = check_wpip(m)
        if w.holds:
            return CheckResult(True)
        ww = w.witness
        return CheckResult(
            False,
            SpipWitness(
                tuple(range(ww.low + 1, n)),
                tuple(range(ww.high)),
                ww.flag_a,
                ww.flag_b,
            ),
        )

    def bits(mask: int) -> tuple[int, ...]:
        return tuple(c for c in range(n) if mask >> c & 1)

    for am in range(1 << n):
        for bm in range(am + 1, 1 << n):
            inter = am & bm
            if inter == am or inter == bm:
                continue
            met = partition_meet(
                m.components_of(bits(am)), m.components_of(bits(bm))
            )
            target = m.components_of(bits(inter))
            if met != target:
                a, b = _split_pair(met, target)
                return CheckResult(False, SpipWitness(bits(am), bits(bm), a, b))
    return CheckResult(True)


def beta(m: Maniplex) -> tuple[MaximalChain, ...]:
    """The flag-to-chain map: position ``v`` holds the chain through ``v``."""
    return tuple(chain_of_flag(m, v) for v in range(m.size))


def flag_graph(p: InducedPoset) -> Maniplex:
    """The maniplex on the maximal chains of a polytope.

    Chains are taken in lexicographic order; colour ``r`` matches the unique
    two chains that differ exactly at rank ``r``.  Raises
    :class:`NotAPolytope` when the poset is not a polytope.
    """
    rep = is_polytope(p)
    if not rep.is_polytope:
        failed = [
            name
            for name, res in (
                ("uniform chain length", rep.uniform_chain_length),
                ("diamond", rep.diamond),
                ("strong flag connectivity", rep.strong_flag_connected),
            )
            if not res.holds
        ]
        raise NotAPolytope("the poset fails: " + ", ".join(failed))
    chains = p._chain_tuples()
    rows: list[list[int]] = []
    for r in range(p.n):
        groups: dict[tuple[int, ...], list[int]] = {}
        for t, ch in enumerate(chains):
            groups.setdefault(ch[:r] + ch[r + 1 :], []).append(t)
        row = [-1] * len(chains)
        for ts in groups.values():
            if len(ts) != 2:
                raise NotAPolytope(
                    f"{len(ts)} chains share all faces except rank {r}"
                )
            a, b = ts
            row[a], row[b] = b, a
        rows.append(row)
    try:
        return Maniplex(build_graph(p.n, rows))
    except ManiplexError as err:
        raise NotAPolytope(f"the chain graph is not a maniplex: {err}") from err


def is_polytopal(m: Maniplex) -> PolytopalityReport:
    """Run all criteria, insist they agree, and certify the positive case.

    A disagreement between the subset, interval, symmetric, and poset
    criteria raises :class:`InconsistentVerdicts` (they are equivalent, so
    this signals an implementation bug).  When polytopal, the maniplex is
    matched against the flag graph of its own poset and the isomorphism is
    included in the report.
    """
    cip = check_cip(m)
    wpip = check_wpip(m)
    spip = check_spip(m)
    p = induced_poset(m)
    rep = is_polytope(p)
    verdicts = {
        "subset": cip.holds,
        "interval": wpip.holds,
        "symmetric": spip.holds,
        "poset": rep.is_polytope,
    }
    if len(set(verdicts.values())) != 1:
        raise InconsistentVerdicts(f"criteria disagree: {verdicts}")
    iso: Optional[tuple[int, ...]] = None
    if cip.holds:
        iso = are_isomorphic(m.graph, flag_graph(p).graph)
        if iso is None:
            raise InconsistentVerdicts(
                "a polytopal maniplex must match its poset's flag graph"
            )
    return PolytopalityReport(
        cip=cip,
        wpip=wpip,
        spip=spip,
        poset=rep,
        verdicts_consistent=True,
        polytopal=cip.holds,
        flag_graph_isomorphism=iso,
    )
