"""Exact planar primitives.

Everything here works on :class:`fractions.Fraction` coordinates; no
predicate ever touches a float.  Half-planes are closed sets
``a*x + b*y >= c`` stored as a primitive integer triple, so two
``HalfPlane`` values compare equal exactly when they denote the same set.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import GeneralPositionError, PerturbationError


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, bool):
        raise TypeError("booleans are not coordinates")
    return Fraction(v)


def _primitive(values: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to coprime integers."""
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    ints = [int(v * den) for v in values]
    g = 0
    for i in ints:
        g = math.gcd(g, i)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", as_fraction(self.x))
        object.__setattr__(self, "y", as_fraction(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scaled(self, s) -> Point:
        return Point(self.x * s, self.y * s)

    def __str__(self):
        return f"({self.x}, {self.y})"


ORIGIN = Point(0, 0)


@dataclass(frozen=True)
class Line:
    """The line ``a*x + b*y = c``, canonical up to a nonzero scale."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = (as_fraction(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise ValueError("degenerate line: a = b = 0")
        a, b, c = _primitive((a, b, c))
        if a < 0 or (a == 0 and b < 0):
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    @property
    def is_vertical(self) -> bool:
        return self.b == 0


@dataclass(frozen=True)
class HalfPlane:
    """Closed half-plane ``a*x + b*y >= c``.

    The triple is reduced to coprime integers by a positive factor, which
    keeps the inequality's direction and makes the representation unique.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = (as_fraction(v) for v in (self.a, self.b, self.c))
        if a == 0 and b == 0:
            raise ValueError("degenerate half-plane: a = b = 0")
        a, b, c = _primitive((a, b, c))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def contains(self, p: Point) -> bool:
        return self.a * p.x + self.b * p.y >= self.c

    def slack(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    @property
    def boundary(self) -> Line:
        return Line(self.a, self.b, self.c)

    @property
    def is_positive(self) -> bool:
        """True for upper half-planes (region above a non-vertical line)."""
        return self.b > 0

    @property
    def is_negative(self) -> bool:
        return self.b < 0

    def complement_closure(self) -> HalfPlane:
        return HalfPlane(-self.a, -self.b, -self.c)

    def translated(self, v: Point) -> HalfPlane:
        """The image of this half-plane under ``p -> p + v``."""
        return HalfPlane(self.a, self.b, self.c + self.a * v.x + self.b * v.y)

    def __str__(self):
        return f"{self.a}x + {self.b}y >= {self.c}"


class PointSet(Sequence[Point]):
    """An ordered, duplicate-free list of points; the index is the identity."""

    def __init__(self, points: Iterable):
        pts = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points in point set")
        self.points = pts

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet({list(self.points)!r})"

    def subset(self, indices: Iterable[int]) -> PointSet:
        return PointSet(self.points[i] for i in indices)

    @cached_property
    def integer_coords(self) -> tuple[tuple[int, ...], tuple[int, ...], int]:
        """``(xs, ys, scale)`` with ``xs[i] == scale * x_i`` all integers."""
        den = 1
        for p in self.points:
            for v in (p.x, p.y):
                den = den * v.denominator // math.gcd(den, v.denominator)
        xs = tuple(int(p.x * den) for p in self.points)
        ys = tuple(int(p.y * den) for p in self.points)
        return xs, ys, den


def as_point_set(P) -> PointSet:
    return P if isinstance(P, PointSet) else PointSet(P)


@dataclass(frozen=True)
class RadonPartition:
    part1: tuple[int, ...]
    part2: tuple[int, ...]
    witness: Point


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 if ``r`` is left of the directed line ``p -> q``, -1 if right, 0 if on it."""
    return _sign((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x))


def halfplane_contains(h: HalfPlane, p: Point) -> bool:
    return h.contains(p)


def convex_hull(P) -> list[int]:
    """Indices of the hull vertices of ``P`` in counter-clockwise order.

    Points in the relative interior of a hull edge are not vertices and are
    left out.  The walk starts at the lexicographically smallest point.  For
    a collinear input only the two endpoints are returned.
    """
    P = as_point_set(P)
    xs, ys, _ = P.integer_coords
    idx = sorted(range(len(P)), key=lambda i: (xs[i], ys[i]))
    if len(idx) <= 2:
        return idx

    def cross(o, a, b):
        return (xs[a] - xs[o]) * (ys[b] - ys[o]) - (ys[a] - ys[o]) * (xs[b] - xs[o])

    lower: list[int] = []
    for i in idx:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper: list[int] = []
    for i in reversed(idx):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def _primitive_direction(dx: int, dy: int) -> tuple[int, int]:
    g = math.gcd(dx, dy)
    dx, dy = dx // g, dy // g
    if dx < 0 or (dx == 0 and dy < 0):
        dx, dy = -dx, -dy
    return dx, dy


def in_general_position(P) -> bool:
    """True iff no three points of ``P`` are collinear."""
    P = as_point_set(P)
    xs, ys, _ = P.integer_coords
    n = len(P)
    for i in range(n):
        seen = set()
        for j in range(n):
            if j == i:
                continue
            d = _primitive_direction(xs[j] - xs[i], ys[j] - ys[i])
            if d in seen:
                return False
            seen.add(d)
    return True


def require_general_position(P) -> PointSet:
    P = as_point_set(P)
    if not in_general_position(P):
        raise GeneralPositionError("three or more points are collinear")
    return P


def _perturbation_scale(P: PointSet) -> Fraction:
    # L1 norms bound the Euclidean norm from above, so these are lower
    # bounds on the true point-line and point-point distances.
    xs, ys, den = P.integer_coords
    n = len(P)
    best = None
    for i in range(n):
        for j in range(i + 1, n):
            dx, dy = xs[j] - xs[i], ys[j] - ys[i]
            norm = abs(dx) + abs(dy)
            gap = Fraction(norm, 2)
            best = gap if best is None else min(best, gap)
            for r in range(n):
                o = dx * (ys[r] - ys[i]) - dy * (xs[r] - xs[i])
                if o:
                    g = Fraction(abs(o), norm)
                    best = min(best, g)
    if best is None:
        return Fraction(1)
    return best / den


def perturb_to_general_position(P, seed: int = 0, max_tries: int = 40) -> PointSet:
    """Move each point by a tiny rational offset so no three are collinear.

    Every subset cut out by a half-plane on ``P`` is still cut out by some
    half-plane on the result, so a polychromatic coloring of the output is
    valid for ``P`` under the same indices.  General-position input is
    returned unchanged.  The offsets are drawn from ``random.Random(seed)``.
    """
    from .ranges import hyperedge_masks, realizable_subsets

    P = as_point_set(P)
    if in_general_position(P):
        return P
    target = realizable_subsets(P)
    rng = random.Random(seed)
    mag = _perturbation_scale(P) / 4
    K = 10**6
    for _ in range(max_tries):
        pts = [
            Point(p.x + mag * Fraction(rng.randint(-K, K), K),
                  p.y + mag * Fraction(rng.randint(-K, K), K))
            for p in P
        ]
        if len(set(pts)) == len(pts):
            Q = PointSet(pts)
            if in_general_position(Q) and target <= set(hyperedge_masks(Q)):
                return Q
        mag /= 2
    raise PerturbationError(f"no valid perturbation after {max_tries} attempts")


def _affine_dependence(pts: Sequence[Point]) -> list[Fraction]:
    """Nonzero ``lam`` with ``sum lam_i p_i = 0`` and ``sum lam_i = 0``."""
    m = len(pts)
    rows = [[p.x for p in pts], [p.y for p in pts], [Fraction(1)] * m]
    pivots = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, 3) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(3):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == 3:
            break
    free = next(c for c in range(m) if c not in pivots)
    lam = [Fraction(0)] * m
    lam[free] = Fraction(1)
    for i, col in enumerate(pivots):
        lam[col] = -rows[i][free]
    return lam


def radon_partition(P) -> RadonPartition:
    """Split ``P`` into two parts whose convex hulls meet.

    Only the first four points take part in the construction; any further
    points are appended to the second part, which can only enlarge its hull.
    The returned witness lies in both hulls.  ``part1`` is the smaller part
    of the four-point split (ties go to the part holding the lowest index).
    """
    P = as_point_set(P)
    if len(P) < 4:
        raise ValueError("a planar Radon partition needs at least 4 points")
    lam = _affine_dependence(P.points[:4])
    pos = [i for i in range(4) if lam[i] > 0]
    rest = [i for i in range(4) if lam[i] <= 0]
    total = sum(lam[i] for i in pos)
    witness = Point(sum(lam[i] * P[i].x for i in pos) / total,
                    sum(lam[i] * P[i].y for i in pos) / total)
    if (len(rest), rest[0]) < (len(pos), pos[0]):
        pos, rest = rest, pos
    return RadonPartition(tuple(pos), tuple(sorted(rest + list(range(4, len(P))))), witness)


def in_convex_hull(p: Point, pts: Sequence[Point]) -> bool:
    """Exact closed convex-hull membership for a small point list."""
    pts = list(dict.fromkeys(pts))
    if not pts:
        return False
    if len(pts) == 1:
        return p == pts[0]
    hull = [pts[i] for i in convex_hull(PointSet(pts))]
    if len(hull) == 2:
        a, b = hull
        return (orientation(a, b, p) == 0
                and min(a.x, b.x) <= p.x <= max(a.x, b.x)
                and min(a.y, b.y) <= p.y <= max(a.y, b.y))
    return all(orientation(hull[i], hull[(i + 1) % len(hull)], p) >= 0
               for i in range(len(hull)))


# Polar duality: point (a, b) <-> line a*x + b*y = 1.

def polar_dual_point(line: Line) -> Point:
    if line.c == 0:
        raise ValueError("polar duality is undefined for lines through the origin")
    return Point(Fraction(line.a, line.c), Fraction(line.b, line.c))


def polar_dual_line(p: Point) -> Line:
    if p.x == 0 and p.y == 0:
        raise ValueError("the origin has no polar dual line")
    return Line(p.x, p.y, 1)


def segment_meets_line(p: Point, q: Point, line: Line) -> bool:
    """Closed segment ``pq`` intersects ``line``."""
    return _sign(line.value(p)) * _sign(line.value(q)) <= 0


# Standard duality: line y = m*x + q <-> point (m, -q); point (a, b) <-> line y = a*x - b.
# A point p lies above/on/below l exactly when l* lies above/on/below p*.

def standard_dual_point(line: Line) -> Point:
    if line.is_vertical:
        raise ValueError("standard duality needs a non-vertical line")
    slope = Fraction(-line.a, line.b)
    intercept = Fraction(line.c, line.b)
    return Point(slope, -intercept)


def standard_dual_line(p: Point) -> Line:
    return Line(-p.x, 1, -p.y)


def side_of(p: Point, line: Line) -> int:
    """+1 if ``p`` is above the non-vertical ``line``, 0 on it, -1 below."""
    if line.is_vertical:
        raise ValueError("above/below is undefined for vertical lines")
    return _sign(line.value(p)) * _sign(line.b)
