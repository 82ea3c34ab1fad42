"""Shared fixtures: the named maniplex corpus and the seeded random corpus.

``geometric_fixtures`` holds every generator-produced maniplex the suite
reasons about; ``all_fixtures`` adds ``oddball8``, a hand-frozen 8-flag
4-maniplex whose middle face is a degree-2 covering of its below/above
product (the witness that the product factorization is not always a
bijection).  ``corpus`` is 1000 seeded random maniplexes with their four
polytopality verdicts precomputed, shared by the equivalence suites.
"""

from __future__ import annotations

from dataclasses import dataclass

import pytest

from maniplexes import (
    InducedPoset,
    Maniplex,
    PosetReport,
    build_graph,
    check_cip,
    check_spip,
    check_wpip,
    hypercube,
    induced_poset,
    klein_44,
    polygon,
    random_maniplex,
    rectified_cubic_3torus,
    torus_44,
)

ODDBALL8_ROWS = (
    (4, 5, 6, 7, 0, 1, 2, 3),
    (6, 3, 4, 1, 2, 7, 0, 5),
    (1, 0, 3, 2, 5, 4, 7, 6),
    (7, 2, 1, 4, 3, 6, 5, 0),
)

ALT_3TORUS_BASIS = ((1, 1, 0), (1, -1, 0), (0, 0, 2))

POLYTOPAL_NAMES = frozenset(
    [f"polygon({p})" for p in range(2, 7)]
    + [f"hypercube({d})" for d in range(1, 5)]
    + ["torus44(2,0)", "torus44(2,1)", "torus44(2,2)"]
)


def oddball8() -> Maniplex:
    return Maniplex(build_graph(4, ODDBALL8_ROWS))


def build_geometric_fixtures() -> dict[str, Maniplex]:
    out: dict[str, Maniplex] = {}
    for p in range(2, 7):
        out[f"polygon({p})"] = polygon(p)
    for d in range(1, 5):
        out[f"hypercube({d})"] = hypercube(d)
    for b, c in [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]:
        out[f"torus44({b},{c})"] = torus_44(b, c)
    out["klein44"] = klein_44()
    out["rect3torus"] = rectified_cubic_3torus()
    out["rect3torus_alt"] = rectified_cubic_3torus(ALT_3TORUS_BASIS)
    return out


@pytest.fixture(scope="session")
def geometric_fixtures() -> dict[str, Maniplex]:
    return build_geometric_fixtures()


@pytest.fixture(scope="session")
def all_fixtures(geometric_fixtures) -> dict[str, Maniplex]:
    out = dict(geometric_fixtures)
    out["oddball8"] = oddball8()
    return out


@pytest.fixture(scope="session")
def all_posets(all_fixtures) -> dict[str, InducedPoset]:
    return {name: induced_poset(m) for name, m in all_fixtures.items()}


@pytest.fixture(scope="session")
def all_reports(all_posets) -> dict[str, PosetReport]:
    return {name: p.report() for name, p in all_posets.items()}


@dataclass(frozen=True)
class CorpusSample:
    seed: int
    maniplex: Maniplex
    cip: bool
    wpip: bool
    spip: bool
    poset_report: PosetReport


CORPUS_SIZE = 1000
CORPUS_BUDGET = 64


@pytest.fixture(scope="session")
def corpus() -> tuple[CorpusSample, ...]:
    from maniplexes.errors import BudgetExhausted

    samples = []
    seed = 0
    while len(samples) < CORPUS_SIZE:
        rank = 1 + seed % 4
        try:
            m = random_maniplex(rank, seed=seed, budget=CORPUS_BUDGET)
        except BudgetExhausted:
            seed += 1
            continue
        samples.append(
            CorpusSample(
                seed=seed,
                maniplex=m,
                cip=bool(check_cip(m)),
                wpip=bool(check_wpip(m).holds),
                spip=bool(check_spip(m)),
                poset_report=induced_poset(m).report(),
            )
        )
        seed += 1
    return tuple(samples)
