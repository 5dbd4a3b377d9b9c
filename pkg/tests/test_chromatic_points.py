from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from polychrome.chromatic_points import Coloring, color_points, minimal_hitting_set, threshold_for
from polychrome.errors import GeneralPositionError
from polychrome.geom import PointSet, convex_hull
from polychrome.oracle import verify_point_coloring
from polychrome.ranges import hyperedge_masks, mask_of

from helpers import gp_point_sets, random_gp_points


@pytest.mark.parametrize("k, t", [(1, 1), (2, 3), (3, 5), (5, 9)])
def test_threshold_for(k, t):
    assert threshold_for(k) == t


def test_threshold_rejects_zero():
    with pytest.raises(ValueError):
        threshold_for(0)


def test_coloring_validates_labels():
    with pytest.raises(ValueError):
        Coloring((1, 3), 2)
    chi = Coloring((2, 2, 1), 3)
    assert chi.empty_classes == (3,)
    assert chi.smallest_class() == ()
    assert chi.class_masks() == [0b100, 0b011, 0]


def test_triangle_hitting_set_is_one_vertex():
    N = minimal_hitting_set(PointSet([(0, 0), (5, 0), (1, 4)]), 3)
    assert len(N.indices) == 1


def test_hitting_set_empty_when_t_too_large():
    N = minimal_hitting_set(PointSet([(0, 0), (5, 0), (1, 4), (2, 1)]), 5)
    assert N.indices == ()


def test_hitting_set_rejects_small_t_and_collinear():
    with pytest.raises(ValueError):
        minimal_hitting_set(PointSet([(0, 0), (5, 0), (1, 4)]), 2)
    with pytest.raises(GeneralPositionError):
        minimal_hitting_set(PointSet([(0, 0), (1, 1), (2, 2), (0, 3)]), 3)


def _check_hitting_set(P, t, N):
    edges = hyperedge_masks(P, size=t)
    chosen = mask_of(N)
    hull = set(convex_hull(P))
    assert set(N) <= hull
    for e in edges:
        assert 1 <= (e & chosen).bit_count() <= 2
    for v in N:
        trial = chosen & ~(1 << v)
        assert any(not (e & trial) for e in edges), "hitting set is not minimal"


def test_fifteen_points_t5():
    P = random_gp_points(random.Random(15), 15)
    N = minimal_hitting_set(P, 5)
    assert N.t == 5
    _check_hitting_set(P, 5, N.indices)


@settings(max_examples=40, deadline=None)
@given(gp_point_sets(min_size=3, max_size=16), st.integers(3, 9))
def test_hitting_set_sandwich(P, t):
    _check_hitting_set(P, t, minimal_hitting_set(P, t).indices)


def test_k1_is_all_ones():
    P = random_gp_points(random.Random(1), 7)
    assert color_points(P, 1).colors == (1,) * 7


def test_thirty_points_k4():
    P = random_gp_points(random.Random(30), 30)
    chi = color_points(P, 4)
    assert verify_point_coloring(P, chi, 7) is None


@settings(max_examples=40, deadline=None)
@given(gp_point_sets(min_size=1, max_size=18), st.integers(1, 5))
def test_color_points_is_polychromatic(P, k):
    chi = color_points(P, k)
    assert len(chi.colors) == len(P)
    assert verify_point_coloring(P, chi, 2 * k - 1) is None


@settings(max_examples=25, deadline=None)
@given(gp_point_sets(min_size=5, max_size=16), st.integers(2, 4))
def test_levels_follow_the_residual_hull(P, k):
    chi = color_points(P, k)
    residual = list(range(len(P)))
    for level, hs in zip(range(k, 1, -1), chi.levels):
        assert hs.t == 2 * level - 1
        sub = P.subset(residual)
        hull = {residual[i] for i in convex_hull(sub)}
        assert set(hs.indices) <= hull
        assert all(chi.colors[i] == level for i in hs.indices)
        residual = [i for i in residual if i not in set(hs.indices)]


@settings(max_examples=20, deadline=None)
@given(gp_point_sets(min_size=5, max_size=14), st.integers(2, 4))
def test_residual_edges_keep_a_smaller_edge(P, k):
    # after removing N, each (2k-1)-edge still holds a (2k-3)-edge of the rest
    t = 2 * k - 1
    N = set(minimal_hitting_set(P, t).indices)
    if not N:
        return
    rest = [i for i in range(len(P)) if i not in N]
    sub_edges = {sum(1 << rest[j] for j in range(len(rest)) if m >> j & 1)
                 for m in hyperedge_masks(P.subset(rest), size=t - 2)}
    for e in hyperedge_masks(P, size=t):
        assert any(s & e == s for s in sub_edges)


@settings(max_examples=20, deadline=None)
@given(gp_point_sets(min_size=3, max_size=14), st.integers(2, 4))
def test_merging_two_smallest_classes(P, k):
    chi = color_points(P, k)
    order = sorted(range(1, k + 1), key=lambda c: len(chi.color_class(c)))
    a, b = sorted(order[:2])
    relabel = {}
    nxt = 1
    for c in range(1, k + 1):
        if c == b:
            continue
        relabel[c] = nxt
        nxt += 1
    relabel[b] = relabel[a]
    merged = Coloring(tuple(relabel[c] for c in chi.colors), k - 1)
    assert verify_point_coloring(P, merged, 2 * k - 1) is None


def test_empty_levels_are_flagged():
    # four points, k=3: no 5-point edges exist, so everything keeps color 1
    P = PointSet([(0, 0), (5, 0), (1, 4), (2, 1)])
    chi = color_points(P, 3)
    assert chi.colors == (1, 1, 1, 1)
    assert chi.empty_classes == (2, 3)
    assert verify_point_coloring(P, chi, 5) is None


def test_large_instance():
    P = random_gp_points(random.Random(200), 120)
    chi = color_points(P, 10)
    assert verify_point_coloring(P, chi, 19) is None
