"""Generator families: polygons, hypercubes, the square tilings of the torus
and the Klein bottle, a rectified cubic honeycomb on a 3-torus, and seeded
random maniplexes.

All generators are deterministic: flags are indexed in a fixed enumeration
order, and the random family is driven entirely by its seed.
"""

from __future__ import annotations

import random
from itertools import permutations
from typing import Optional, Sequence

from .errors import BadParam, BudgetExhausted, DegenerateBasis, ManiplexError
from .graphs import are_isomorphic, build_graph, components
from .maniplex import Maniplex
from .posets import induced_poset, poset_isomorphic

# Fundamental translations used by the rectified cubic 3-torus by default.
DEFAULT_3TORUS_BASIS = ((0, 2, 0), (1, 0, 0), (1, 0, 2))

_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def polygon(p: int) -> Maniplex:
    """The rank-2 maniplex of a ``p``-gon (``p >= 2``), with ``2p`` flags."""
    if p < 2:
        raise BadParam(f"a polygon needs at least 2 sides, got {p}")
    f = 2 * p
    m0 = [v ^ 1 for v in range(f)]
    m1 = [(v - 1) % f if v % 2 == 0 else (v + 1) % f for v in range(f)]
    return Maniplex(build_graph(2, [m0, m1]))


def hypercube(d: int) -> Maniplex:
    """The ``d``-cube (``1 <= d <= 5``) with ``2^d * d!`` flags.

    A flag is a vertex (bit vector) plus an ordering of the axes; colour 0
    flips the first axis bit, colour ``c`` swaps axes ``c - 1`` and ``c``.
    """
    if not 1 <= d <= 5:
        raise BadParam(f"dimension must be between 1 and 5, got {d}")
    perms = sorted(permutations(range(d)))
    flags = [(x, pi) for x in range(1 << d) for pi in perms]
    idx = {fl: k for k, fl in enumerate(flags)}
    rows = [[0] * len(flags) for _ in range(d)]
    for k, (x, pi) in enumerate(flags):
        rows[0][k] = idx[(x ^ (1 << pi[0]), pi)]
        for c in range(1, d):
            q = list(pi)
            q[c - 1], q[c] = q[c], q[c - 1]
            rows[c][k] = idx[(x, tuple(q))]
    return Maniplex(build_graph(d, rows))


def torus_44(b: int, c: int) -> Maniplex:
    """The square tiling quotiented by the lattice spanned by ``(b, c)``
    and its quarter turn, with ``8 * (b^2 + c^2)`` flags.

    Flags of the tiling are ``(vertex, edge direction, side)`` triples with
    the side a quarter turn of the direction; colour 0 crosses the edge,
    colour 1 pivots at the vertex, colour 2 reflects in the edge.
    """
    if (b, c) == (0, 0):
        raise BadParam("the quotient translation must be nonzero")
    n = b * b + c * c

    def rnd(a: int) -> int:
        # round half up, stable under negative numerators
        return (2 * a + n) // (2 * n)

    def canon(z: tuple[int, int]) -> tuple[int, int]:
        x, y = z
        m1 = rnd(x * b + y * c)
        m2 = rnd(y * b - x * c)
        return (x - (b * m1 - c * m2), y - (b * m2 + c * m1))

    v0 = canon((0, 0))
    order: dict[tuple[int, int], int] = {v0: 0}
    queue = [v0]
    for z in queue:
        for dx, dy in _DIRS:
            w = canon((z[0] + dx, z[1] + dy))
            if w not in order:
                order[w] = len(order)
                queue.append(w)
    assert len(order) == n, "vertex enumeration must match the lattice index"

    def fid(z: tuple[int, int], du: int, s: int) -> int:
        return (order[z] * 4 + du) * 2 + s

    size = 8 * n
    rows = [[0] * size for _ in range(3)]
    for z, _ in order.items():
        for du in range(4):
            ux, uy = _DIRS[du]
            for s in range(2):
                k = fid(z, du, s)
                rows[0][k] = fid(
                    canon((z[0] + ux, z[1] + uy)), (du + 2) % 4, 1 - s
                )
                rows[1][k] = fid(z, (du + 1) % 4 if s == 0 else (du + 3) % 4, 1 - s)
                rows[2][k] = fid(z, du, 1 - s)
    return Maniplex(build_graph(3, rows))


def klein_44() -> Maniplex:
    """The 8-flag square tiling of the Klein bottle.

    Quotient of the square tiling by a unit horizontal translation and a
    vertical glide reflection; every flag has a unique representative at the
    origin.  The build verifies that the result shares its induced poset
    with ``torus_44(1, 0)`` while not being flag-isomorphic to it.
    """

    def qturn(v: tuple[int, int]) -> tuple[int, int]:
        return (-v[1], v[0])

    def neg(v: tuple[int, int]) -> tuple[int, int]:
        return (-v[0], -v[1])

    def flipx(v: tuple[int, int]) -> tuple[int, int]:
        return (-v[0], v[1])

    def pack(u: tuple[int, int], w: tuple[int, int]) -> int:
        du = _DIRS.index(u)
        s = 0 if w == qturn(u) else 1
        assert w == (qturn(u) if s == 0 else neg(qturn(u)))
        return du * 2 + s

    def canon(z: tuple[int, int], u, w) -> int:
        # a glide brings odd rows to the origin and mirrors the x-axis
        if z[1] % 2:
            return pack(flipx(u), flipx(w))
        return pack(u, w)

    rows = [[0] * 8 for _ in range(3)]
    for du in range(4):
        u = _DIRS[du]
        for s in range(2):
            w = qturn(u) if s == 0 else neg(qturn(u))
            k = du * 2 + s
            rows[0][k] = canon(u, neg(u), w)
            rows[1][k] = canon((0, 0), w, u)
            rows[2][k] = canon((0, 0), u, neg(w))
    m = Maniplex(build_graph(3, rows))
    t = torus_44(1, 0)
    assert are_isomorphic(m.graph, t.graph) is None, (
        "the Klein-bottle tiling must differ from the torus as a graph"
    )
    assert poset_isomorphic(induced_poset(m), induced_poset(t)) is not None, (
        "the Klein-bottle tiling must share the torus's induced poset"
    )
    return m


def _hnf_lower(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Lower-triangular row basis with positive diagonal for the row lattice.

    Raises :class:`DegenerateBasis` when the rows are linearly dependent.
    """
    m = [list(row) for row in mat]
    for col in (2, 1, 0):
        while True:
            nz = [r for r in range(col + 1) if m[r][col] != 0]
            if not nz:
                raise DegenerateBasis(
                    "the basis does not span three dimensions"
                )
            if len(nz) == 1:
                break
            nz.sort(key=lambda r: abs(m[r][col]))
            r0 = nz[0]
            for r in nz[1:]:
                q = m[r][col] // m[r0][col]
                if q:
                    m[r] = [a - q * b for a, b in zip(m[r], m[r0])]
        r = nz[0]
        if r != col:
            m[r], m[col] = m[col], m[r]
        if m[col][col] < 0:
            m[col] = [-a for a in m[col]]
    return m


def rectified_cubic_3torus(
    basis: Optional[Sequence[Sequence[int]]] = None,
) -> Maniplex:
    """The rectified cubic honeycomb quotiented by a rank-3 lattice.

    The honeycomb's vertices are the edge midpoints of the unit cubic grid;
    its cells are octahedra (one per grid vertex) and cuboctahedra (one per
    cube), with triangles and squares between them.  ``basis`` gives three
    integer translations spanning the quotient lattice (the default is a
    determinant-4 lattice); the result has ``144 * |det basis|`` flags.

    Coordinates are doubled so everything is integral: a flag stores the
    vertex, the edge's endpoint sum, the face's vertex sum, and the cell
    centre.  Raises :class:`DegenerateBasis` for a singular basis.
    """
    if basis is None:
        basis = DEFAULT_3TORUS_BASIS
    rows_in = [list(map(int, row)) for row in basis]
    if len(rows_in) != 3 or any(len(r) != 3 for r in rows_in):
        raise BadParam("the basis must be three integer 3-vectors")
    h = _hnf_lower([[2 * x for x in row] for row in rows_in])

    def canon(p: tuple[int, int, int]) -> tuple[int, int, int]:
        v = list(p)
        for k in (2, 1, 0):
            t = v[k] // h[k][k]
            if t:
                v[0] -= t * h[k][0]
                v[1] -= t * h[k][1]
                v[2] -= t * h[k][2]
        return tuple(v)

    V = tuple[int, int, int]

    def add(a: V, b: V, k: int = 1) -> V:
        return (a[0] + k * b[0], a[1] + k * b[1], a[2] + k * b[2])

    def is_tri(fs: V) -> bool:
        return fs[0] % 2 == 1  # triangle sums are all odd, square sums all even

    def canon_flag(fl: tuple[V, V, V, V]) -> tuple[V, V, V, V]:
        p, e, fs, cc = fl
        g = add(canon(p), p, -1)
        if g == (0, 0, 0):
            return fl
        k = 3 if is_tri(fs) else 4
        return (add(p, g), add(e, g, 2), add(fs, g, k), add(cc, g))

    def phi(c: int, fl: tuple[V, V, V, V]) -> tuple[V, V, V, V]:
        p, e, fs, cc = fl
        if c == 0:
            return (add(e, p, -1), e, fs, cc)
        if c == 1:
            if is_tri(fs):
                e2 = add(add(fs, e, -1), p)
            else:
                e2 = add(
                    add((2 * p[0], 2 * p[1], 2 * p[2]),
                        (fs[0] // 2, fs[1] // 2, fs[2] // 2)),
                    e,
                    -1,
                )
            return (p, e2, fs, cc)
        if c == 2:
            if cc[0] % 2:  # cuboctahedron: centres have all-odd coordinates
                d = add(e, cc, -2)
                axis = next(k for k in range(3) if abs(d[k]) == 2)
                s = d[axis] // 2
                if is_tri(fs):
                    fs2 = tuple(
                        4 * cc[k] + (4 * s if k == axis else 0)
                        for k in range(3)
                    )
                else:
                    sigma = list(d)
                    sigma[axis] = s
                    fs2 = tuple(3 * cc[k] + 2 * sigma[k] for k in range(3))
            else:  # octahedron: both faces at an edge are triangles
                fs2 = tuple(2 * (e[k] + cc[k]) - fs[k] for k in range(3))
            return (p, e, fs2, cc)
        if is_tri(fs):
            if cc[0] % 2:
                cc2 = tuple((fs[k] - cc[k]) // 2 for k in range(3))
            else:
                cc2 = tuple(fs[k] - 2 * cc[k] for k in range(3))
        else:
            cc2 = tuple(fs[k] // 2 - cc[k] for k in range(3))
        return (p, e, fs, cc2)

    seed = canon_flag(((1, 0, 0), (1, 1, 0), (4, 4, 0), (1, 1, 1)))
    index: dict[tuple[V, V, V, V], int] = {seed: 0}
    queue = [seed]
    for fl in queue:
        for c in range(4):
            nb = canon_flag(phi(c, fl))
            if nb not in index:
                index[nb] = len(index)
                queue.append(nb)
    det = h[0][0] * h[1][1] * h[2][2]  # 8 * |det basis|
    expected = 18 * det
    assert len(index) == expected, (
        f"expected {expected} flags, enumerated {len(index)}"
    )
    rows = [[0] * len(index) for _ in range(4)]
    for fl, k in index.items():
        for c in range(4):
            rows[c][k] = index[canon_flag(phi(c, fl))]
    return Maniplex(build_graph(4, rows))


# -- random maniplexes --------------------------------------------------------


def _rand_involution(rng: random.Random, size: int) -> list[int]:
    """A uniformly random fixed-point-free involution."""
    order = list(range(size))
    rng.shuffle(order)
    row = [0] * size
    for k in range(0, size, 2):
        a, b = order[k], order[k + 1]
        row[a], row[b] = b, a
    return row


def _rand_matching(
    rng: random.Random, size: int, avoid: list[set[int]]
) -> Optional[list[int]]:
    """A random fixed-point-free involution with ``row[v]`` never in
    ``avoid[v]``, or ``None`` when the greedy pairing gets stuck."""
    row = [-1] * size
    order = list(range(size))
    rng.shuffle(order)
    for v in order:
        if row[v] != -1:
            continue
        cands = [
            u for u in order if row[u] == -1 and u != v and u not in avoid[v]
        ]
        if not cands:
            return None
        u = rng.choice(cands)
        row[v], row[u] = u, v
    return row


def _lift(
    rng: random.Random,
    size: int,
    base: list[int],
    avoid: Optional[list[set[int]]],
) -> Optional[list[int]]:
    """An involution commuting with ``base`` pointwise, built by matching
    the edges of ``base`` in pairs and orienting each pair.

    Never maps a flag to itself or its ``base`` partner; ``avoid`` adds
    per-flag forbidden images.  Returns ``None`` when pairing gets stuck.
    """
    edges = [(v, base[v]) for v in range(size) if v < base[v]]
    if len(edges) % 2:
        return None

    def orientations(x: int, y: int) -> list[tuple[int, int, int, int]]:
        a, b = edges[x]
        c, d = edges[y]
        outs = []
        for p, q in ((c, d), (d, c)):
            if avoid is None or (p not in avoid[a] and q not in avoid[b]):
                outs.append((a, p, b, q))
        return outs

    row = [-1] * size
    order = list(range(len(edges)))
    rng.shuffle(order)
    done = [False] * len(edges)
    for x in order:
        if done[x]:
            continue
        cands = [
            y for y in order if not done[y] and y != x and orientations(x, y)
        ]
        if not cands:
            return None
        y = rng.choice(cands)
        a, p, b, q = rng.choice(orientations(x, y))
        row[a], row[p] = p, a
        row[b], row[q] = q, b
        done[x] = done[y] = True
    return row


def _restrict_to_component(rows: list[list[int]], flag: int) -> list[list[int]]:
    graph = build_graph(len(rows), rows)
    part = components(graph, graph.colours())
    block = part.block_of(flag)
    local = {v: k for k, v in enumerate(block)}
    return [[local[row[v]] for v in block] for row in rows]


def _try_random(
    rng: random.Random, rank: int, budget: int
) -> Optional[Maniplex]:
    if rank == 3:
        f = 4 * rng.randrange(1, budget // 4 + 1)
        r0 = _rand_involution(rng, f)
        r2 = _lift(rng, f, r0, None)
        if r2 is None:
            return None
        r1 = _rand_matching(rng, f, [{r0[v], r2[v]} for v in range(f)])
        if r1 is None:
            return None
        rows = [r0, r1, r2]
    else:
        f = 4 * rng.randrange(2, budget // 4 + 1)
        r1 = _rand_involution(rng, f)
        r3 = _lift(rng, f, r1, None)
        if r3 is None:
            return None
        r0 = _lift(rng, f, r3, [{r1[v]} for v in range(f)])
        if r0 is None:
            return None
        r2 = _lift(rng, f, r0, [{r1[v], r3[v]} for v in range(f)])
        if r2 is None:
            return None
        rows = [r0, r1, r2, r3]
    rows = _restrict_to_component(rows, 0)
    try:
        return Maniplex(build_graph(rank, rows))
    except ManiplexError:
        return None


def random_maniplex(rank: int, seed: int, budget: int = 64) -> Maniplex:
    """A seeded random maniplex with at most ``budget`` flags.

    Rank 1 has a single shape; rank 2 is a random polygon.  For ranks 3 and
    4 the matchings are sampled so the distant-colour commutations hold by
    construction (each later colour pairs up the edges of an earlier one),
    then the component of flag 0 is kept.  Raises :class:`BudgetExhausted`
    when no sample validates within the retry allowance, and
    :class:`BadParam` for an unsupported rank or an out-of-range budget.
    """
    if not 1 <= rank <= 4:
        raise BadParam(f"random generation supports ranks 1..4, got {rank}")
    if budget > 512:
        raise BadParam(f"budget {budget} exceeds the cap of 512 flags")
    minimum = {1: 2, 2: 4, 3: 4, 4: 8}[rank]
    if budget < minimum:
        raise BadParam(f"rank {rank} needs a budget of at least {minimum}")
    rng = random.Random(seed)
    if rank == 1:
        return Maniplex(build_graph(1, [[1, 0]]))
    if rank == 2:
        return polygon(rng.randrange(2, budget // 2 + 1))
    for _ in range(400):
        m = _try_random(rng, rank, budget)
        if m is not None:
            return m
    raise BudgetExhausted(
        f"no valid rank-{rank} sample within {budget} flags after 400 tries"
    )
