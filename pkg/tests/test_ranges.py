from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from polychrome.errors import GeneralPositionError
from polychrome.geom import HalfPlane, Point, PointSet
from polychrome.ranges import (
    RangeSpace,
    arrangement_samples,
    depth,
    enumerate_hyperedges,
    halfplane_range_space,
    hyperedge_masks,
    hyperedges_of_size,
    indices_of,
    mask_of,
    realizable_subsets,
    sample_point,
)

from helpers import brute_cut_family, families, gp_point_sets, random_family, random_gp_points

TRIANGLE = PointSet([(0, 0), (4, 0), (0, 4)])


def _family(space: RangeSpace) -> set[frozenset]:
    return {frozenset(e.indices) for e in space.edges}


def test_triangle_has_all_subsets():
    assert len(enumerate_hyperedges(TRIANGLE).edges) == 8


def test_triangle_sizes():
    assert sorted(e.indices for e in hyperedges_of_size(TRIANGLE, 2)) == [(0, 1), (0, 2), (1, 2)]
    assert [e.indices for e in hyperedges_of_size(TRIANGLE, 3)] == [(0, 1, 2)]


def test_point_inside_triangle():
    P = PointSet([(0, 0), (6, 0), (0, 6), (1, 1)])
    fam = _family(enumerate_hyperedges(P))
    assert len(fam) == 14
    assert frozenset({3}) not in fam and frozenset({0, 1, 2}) not in fam


@pytest.mark.parametrize("n", [3, 5, 8, 11])
def test_convex_position_count(n):
    # points on a parabola are in convex position
    P = PointSet([(i, i * i) for i in range(n)])
    assert len(enumerate_hyperedges(P).edges) == n * (n - 1) + 2


def test_rejects_collinear():
    with pytest.raises(GeneralPositionError):
        enumerate_hyperedges([(0, 0), (1, 1), (2, 2)])


@settings(max_examples=40, deadline=None)
@given(gp_point_sets(max_size=12))
def test_sweep_matches_pair_cuts(P):
    assert _family(enumerate_hyperedges(P)) == brute_cut_family(P)


@settings(max_examples=40, deadline=None)
@given(gp_point_sets(max_size=14))
def test_witnesses_reproduce_edges(P):
    for e in enumerate_hyperedges(P).edges:
        assert tuple(i for i, p in enumerate(P) if e.witness.contains(p)) == e.indices


@settings(max_examples=30, deadline=None)
@given(gp_point_sets(min_size=2, max_size=12))
def test_every_edge_shrinks_one_point_at_a_time(P):
    fam = _family(enumerate_hyperedges(P))
    for e in fam:
        if e:
            assert any(e - {i} in fam for i in e)


@settings(max_examples=30, deadline=None)
@given(gp_point_sets(max_size=12))
def test_size_filter_and_generic_enumerator_agree(P):
    full = set(hyperedge_masks(P))
    assert realizable_subsets(P) == full
    for t in range(len(P) + 1):
        assert {e.mask for e in hyperedges_of_size(P, t)} == {m for m in full if m.bit_count() == t}


def test_realizable_subsets_on_collinear_points():
    P = PointSet([(i, 0) for i in range(4)])
    fam = realizable_subsets(P)
    intervals = {mask_of(range(s)) for s in range(5)} | {mask_of(range(s, 4)) for s in range(5)}
    assert fam == intervals


def test_mask_helpers():
    assert indices_of(mask_of([5, 0, 3])) == (0, 3, 5)
    assert indices_of(0) == ()


def test_restrict_renumbers():
    space = enumerate_hyperedges(TRIANGLE)
    sub = space.restrict([2, 0])
    assert {e.indices for e in sub.edges} == {(), (0,), (1,), (0, 1)}
    assert list(sub.ground) == [TRIANGLE[2], TRIANGLE[0]]


# depth and the dual space

def test_depth_examples():
    assert depth([], Point(0, 0)) == 0
    H = [HalfPlane(1, 0, -k) for k in range(5)]
    assert depth(H, Point(0, 0)) == 5
    assert depth(H, Point(-3, 0)) == 2


@settings(max_examples=40, deadline=None)
@given(families(max_size=8))
def test_samples_reproduce_their_masks(H):
    for s in arrangement_samples(H):
        p = sample_point(H, s)
        assert mask_of(i for i, h in enumerate(H) if h.contains(p)) == s.mask


def _simple_family(rng, n):
    while True:
        H = random_family(rng, n, coef=30, offset=200)
        ok = all(g.a * h.b != g.b * h.a for g, h in combinations(H, 2))
        if not ok:
            continue
        verts = []
        for g, h in combinations(H, 2):
            D = g.a * h.b - h.a * g.b
            verts.append((Fraction(g.c * h.b - h.c * g.b, D), Fraction(g.a * h.c - h.a * g.c, D)))
        if len(set(verts)) == len(verts):
            return H


@pytest.mark.parametrize("seed", range(8))
def test_simple_arrangement_face_count(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 9)
    H = _simple_family(rng, n)
    # cells of a simple arrangement are distinguished by their containment pattern
    cells = {s.mask for s in arrangement_samples(H) if s.side != 0 and s.line is not None}
    assert len(cells) == 1 + n + comb(n, 2)


def test_halfplane_range_space_witnesses():
    H = random_family(random.Random(3), 6)
    space = halfplane_range_space(H)
    masks = [e.mask for e in space.edges]
    assert len(set(masks)) == len(masks)
    for e in space.edges:
        assert tuple(i for i, h in enumerate(H) if h.contains(e.witness)) == e.indices


def test_large_sweep_is_fast():
    P = random_gp_points(random.Random(9), 150)
    t = time.perf_counter()
    masks = hyperedge_masks(P)
    assert time.perf_counter() - t < 10
    assert len(masks) > 150 * 149 // 2
