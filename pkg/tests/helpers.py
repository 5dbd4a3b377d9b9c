"""Shared generators and independent brute-force checks for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from hypothesis import strategies as st

from polychrome.geom import HalfPlane, Point, PointSet


def orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def no_three_collinear(pts) -> bool:
    return all(orient(a, b, c) != 0 for a, b, c in combinations(pts, 3))


def random_gp_points(rng: random.Random, n: int, lo=-1000, hi=1000) -> PointSet:
    pts: list[tuple[int, int]] = []
    while len(pts) < n:
        cand = (rng.randint(lo, hi), rng.randint(lo, hi))
        if cand in pts:
            continue
        if all(orient(a, b, cand) != 0 for a, b in combinations(pts, 2)):
            pts.append(cand)
    return PointSet(pts)


def random_family(rng: random.Random, n: int, coef=6, offset=12) -> list[HalfPlane]:
    out, lines = [], set()
    while len(out) < n:
        a, b = rng.randint(-coef, coef), rng.randint(-coef, coef)
        if a == 0 and b == 0:
            continue
        h = HalfPlane(a, b, rng.randint(-offset, offset))
        if h.boundary not in lines:
            lines.add(h.boundary)
            out.append(h)
    return out


def random_non_covering(rng: random.Random, n: int, coef=6, offset=12) -> list[HalfPlane]:
    """Half-planes all missing the origin (c > 0)."""
    out, lines = [], set()
    while len(out) < n:
        a, b = rng.randint(-coef, coef), rng.randint(-coef, coef)
        if a == 0 and b == 0:
            continue
        h = HalfPlane(a, b, rng.randint(1, offset))
        if h.boundary not in lines:
            lines.add(h.boundary)
            out.append(h)
    return out


def in_hull_small(p, pts) -> bool:
    """Containment in the hull of at most three points, by orientations only."""
    pts = list(pts)
    if len(pts) == 1:
        return tuple(p) == tuple(pts[0])
    if len(pts) == 2:
        a, b = pts
        if orient(a, b, p) != 0:
            return False
        return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    a, b, c = pts
    s = [orient(a, b, p), orient(b, c, p), orient(c, a, p)]
    return not (any(x > 0 for x in s) and any(x < 0 for x in s))


def brute_cut_family(P) -> set[frozenset]:
    """Every cut by a line through two points with all four boundary choices."""
    pts = [(p.x, p.y) for p in P]
    n = len(pts)
    out = {frozenset(), frozenset(range(n))}
    for i, j in combinations(range(n), 2):
        left = frozenset(r for r in range(n) if orient(pts[i], pts[j], pts[r]) > 0)
        right = frozenset(r for r in range(n) if orient(pts[i], pts[j], pts[r]) < 0)
        for side in (left, right):
            for extra in ((), (i,), (j,), (i, j)):
                out.add(side | frozenset(extra))
    return out


coords = st.integers(min_value=-50, max_value=50)
points = st.builds(Point, coords, coords)


@st.composite
def gp_point_sets(draw, min_size=1, max_size=12, bound=60):
    n = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_gp_points(random.Random(seed), n, -bound, bound)


@st.composite
def halfplanes(draw, coef=6, offset=12):
    a = draw(st.integers(-coef, coef))
    b = draw(st.integers(-coef, coef).filter(lambda v: v != 0 or a != 0))
    c = draw(st.integers(-offset, offset))
    return HalfPlane(a, b, c)


@st.composite
def families(draw, min_size=0, max_size=10):
    n = draw(st.integers(min_size, max_size))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    return random_family(random.Random(seed), n)


def frac(s: str) -> Fraction:
    return Fraction(s)
