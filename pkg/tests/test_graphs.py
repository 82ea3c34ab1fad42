"""Coloured-graph layer: validation, partitions, meets, isomorphism."""

from __future__ import annotations

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from maniplexes import (
    Partition,
    are_isomorphic,
    build_graph,
    components,
    hypercube,
    is_connected,
    klein_44,
    meet_all,
    partition_meet,
    polygon,
    torus_44,
)
from maniplexes.errors import (
    FixedPoint,
    MultiEdge,
    NotInvolution,
    OutOfRange,
    SizeMismatch,
)


# -- build_graph validation ----------------------------------------------------


def test_build_graph_accepts_the_segment():
    g = build_graph(1, [[1, 0]])
    assert g.rank == 1 and g.size == 2
    assert g.neighbour(0, 0) == 1 and g.neighbour(0, 1) == 0


def test_build_graph_rejects_rank_zero():
    with pytest.raises(OutOfRange):
        build_graph(0, [])


def test_build_graph_rejects_rank_above_word_size():
    with pytest.raises(OutOfRange):
        build_graph(65, [[1, 0]] * 65)


def test_build_graph_rejects_ragged_rows():
    with pytest.raises(SizeMismatch):
        build_graph(2, [[1, 0], [1, 0, 2]])


def test_build_graph_rejects_fixed_point_with_witness():
    with pytest.raises(FixedPoint) as exc:
        build_graph(1, [[0, 1]])
    assert exc.value.colour == 0 and exc.value.flag == 0


def test_build_graph_rejects_non_involution_with_witness():
    with pytest.raises(NotInvolution) as exc:
        build_graph(1, [[1, 2, 0]])
    assert exc.value.colour == 0 and exc.value.flag == 0


def test_build_graph_rejects_multi_edge_with_witness():
    with pytest.raises(MultiEdge) as exc:
        build_graph(2, [[1, 0, 3, 2], [1, 0, 3, 2]])
    assert (exc.value.colour_a, exc.value.colour_b, exc.value.flag) == (0, 1, 0)


def test_build_graph_rejects_out_of_range_entry():
    with pytest.raises(OutOfRange):
        build_graph(1, [[99, 0]])


def test_error_scan_order_is_colour_major():
    # colour 0 is defective at flag 2, colour 1 already at flag 0; the
    # canonical scan visits all of colour 0 first.
    with pytest.raises(FixedPoint) as exc:
        build_graph(2, [[1, 0, 2, 3], [0, 1, 3, 2]])
    assert exc.value.colour == 0 and exc.value.flag == 2


# -- components / partitions ---------------------------------------------------


def test_torus11_two_faces_from_colours_01():
    g = torus_44(1, 1).graph
    assert components(g, [0, 1]).block_count() == 2


def test_empty_colour_set_gives_singletons():
    g = torus_44(1, 1).graph
    part = components(g, [])
    assert part.is_discrete() and part.block_count() == g.size


def test_hexagon_colour0_gives_three_edges():
    # the 2-maniplex whose graph is a hexagon = flag graph of the triangle
    g = polygon(3).graph
    assert g.size == 6
    part = components(g, [0])
    assert part.block_count() == 3
    assert all(len(b) == 2 for b in part.blocks())


def test_meet_idempotent_and_discrete_absorbing():
    g = torus_44(1, 1).graph
    p = components(g, [0, 1])
    discrete = components(g, [])
    assert partition_meet(p, p) == p
    assert partition_meet(p, discrete) == discrete


def test_torus11_meet_is_the_cip_failure_pattern():
    g = torus_44(1, 1).graph
    met = partition_meet(components(g, [0, 1]), components(g, [1, 2]))
    assert sorted(len(b) for b in met.blocks()) == [4, 4, 4, 4]
    assert components(g, [1]).block_count() == 8
    # the first meet block consists of exactly two colour-1 edges
    blk = met.blocks()[0]
    assert blk == (0, 3, 4, 7)
    edges = {tuple(sorted((v, g.neighbour(1, v)))) for v in blk}
    assert edges == {(0, 3), (4, 7)}


def test_meet_size_mismatch():
    with pytest.raises(SizeMismatch):
        partition_meet(
            components(polygon(3).graph, [0]), components(polygon(4).graph, [0])
        )


def test_is_connected():
    assert is_connected(polygon(5).graph)
    assert is_connected(hypercube(3).graph)


def test_partition_value_equality_is_canonical():
    g = polygon(4).graph
    assert components(g, [0, 1]) == components(g, [1, 0])
    assert hash(components(g, [0])) == hash(components(g, [0]))


# -- partition laws (property-based) -------------------------------------------


@st.composite
def partitions(draw, size=12):
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    n_blocks = draw(st.integers(1, size))
    ids = [rng.randrange(n_blocks) for _ in range(size)]
    return Partition(ids)


@given(partitions(), partitions())
def test_meet_commutative(p, q):
    assert partition_meet(p, q) == partition_meet(q, p)


@given(partitions(), partitions(), partitions())
def test_meet_associative(p, q, r):
    assert partition_meet(partition_meet(p, q), r) == partition_meet(
        p, partition_meet(q, r)
    )


@given(partitions())
def test_meet_idempotent(p):
    assert partition_meet(p, p) == p


@given(partitions(), partitions())
def test_meet_refines_both(p, q):
    met = partition_meet(p, q)
    for part in (p, q):
        for block in met.blocks():
            first = block[0]
            assert all(part.same_block(first, v) for v in block)


def _subsets(rank):
    return [
        [c for c in range(rank) if mask >> c & 1] for mask in range(1 << rank)
    ]


def test_monotone_colour_sets_give_nested_partitions():
    g = torus_44(1, 1).graph
    subs = _subsets(g.rank)
    for a in subs:
        for b in subs:
            if set(a) <= set(b):
                coarse = components(g, b)
                fine = components(g, a)
                for block in fine.blocks():
                    assert all(coarse.same_block(block[0], v) for v in block)


def test_intersection_refines_meet_for_all_colour_pairs():
    g = klein_44().graph
    subs = _subsets(g.rank)
    for a in subs:
        for b in subs:
            met = partition_meet(components(g, a), components(g, b))
            inter = components(g, sorted(set(a) & set(b)))
            for block in inter.blocks():
                assert all(met.same_block(block[0], v) for v in block)


def test_meet_all_matches_pairwise_meet():
    g = torus_44(2, 0).graph
    parts = [components(g, [c]) for c in range(g.rank)]
    expected = parts[0]
    for p in parts[1:]:
        expected = partition_meet(expected, p)
    assert meet_all(parts) == expected


# -- isomorphism ----------------------------------------------------------------


def test_isomorphic_to_itself_via_identity():
    g = torus_44(1, 1).graph
    phi = are_isomorphic(g, g)
    assert phi is not None and phi[0] == 0


def test_square_flag_graph_matches_2_cube():
    assert are_isomorphic(polygon(4).graph, hypercube(2).graph) is not None


def test_hexagon_vs_octagon_not_isomorphic():
    assert are_isomorphic(polygon(3).graph, polygon(4).graph) is None


def test_klein_vs_torus_not_isomorphic():
    assert are_isomorphic(klein_44().graph, torus_44(1, 0).graph) is None


def test_isomorphism_witness_is_equivariant_bijection():
    g = torus_44(2, 0).graph
    h = torus_44(0, 2).graph
    phi = are_isomorphic(g, h)
    assert phi is not None
    assert sorted(phi) == list(range(g.size))
    for v in range(g.size):
        for c in range(g.rank):
            assert phi[g.neighbour(c, v)] == h.neighbour(c, phi[v])
