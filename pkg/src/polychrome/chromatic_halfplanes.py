"""Coloring finite families of half-planes with respect to points.

``color_halfplanes_3k2`` peels off small sub-families that already cover the
plane, one color each, and hands the remainder to the point colorer through
polar duality around an uncovered point.  ``color_halfplanes_4k3`` is the
simpler reduction that splits upper and lower half-planes and dualizes each
side with the standard point-line duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .chromatic_points import Coloring, color_points
from .errors import GeneralPositionError, InvariantError
from .geom import (
    HalfPlane,
    Point,
    PointSet,
    in_general_position,
    perturb_to_general_position,
    polar_dual_point,
    standard_dual_point,
)


@dataclass(frozen=True)
class CoverCertificate:
    """Either an uncovered point or a sub-family of at most 3 that covers."""

    witness_point: Point | None = None
    cover_subset: tuple[int, ...] | None = None

    @property
    def covers(self) -> bool:
        return self.cover_subset is not None


@dataclass(frozen=True)
class PeelingTrace:
    layers: tuple[tuple[int, ...], ...]
    residual: tuple[int, ...]
    witness: Point | None = None

    @property
    def i(self) -> int:
        return len(self.layers)


def _descent_direction(hs: Sequence[HalfPlane]) -> tuple[int, int] | None:
    """A direction ``d`` with ``n.d < 0`` for every inward normal ``n``, if any."""
    normals = [(h.a, h.b) for h in hs]

    def ok(dx, dy):
        return all(a * dx + b * dy < 0 for a, b in normals)

    for a, b in normals:
        if ok(-a, -b):
            return (-a, -b)
    for (a1, b1), (a2, b2) in combinations(normals, 2):
        for s1 in (1, -1):
            for s2 in (1, -1):
                dx = s1 * -b1 + s2 * -b2
                dy = s1 * a1 + s2 * a2
                if (dx or dy) and ok(dx, dy):
                    return (dx, dy)
    return None


def uncovered_point(hs: Sequence[HalfPlane]) -> Point | None:
    """A point outside every half-plane of ``hs``, or ``None`` if they cover the plane.

    Maximizes ``s`` subject to ``a_i x + b_i y + s <= c_i`` exactly: the
    unbounded case is recognized by a common descent direction, and a
    bounded optimum is found among the basic solutions of constraint
    triples.  The family covers exactly when the optimum is ``<= 0``.
    """
    hs = list(hs)
    if not hs:
        return Point(0, 0)
    d = _descent_direction(hs)
    if d is not None:
        dx, dy = d
        t = max([Fraction(0)] + [Fraction(h.c, h.a * dx + h.b * dy) for h in hs]) + 1
        return Point(t * dx, t * dy)
    a0, b0 = hs[0].a, hs[0].b
    if all(h.a * b0 - h.b * a0 == 0 for h in hs):
        # All boundaries parallel: along the common normal each half-plane is a ray.
        n2 = a0 * a0 + b0 * b0
        lo, hi = None, None
        for h in hs:
            lam = Fraction(h.a * a0 + h.b * b0, n2)
            bound = Fraction(h.c) / lam
            if lam > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo < hi:
            tau = (lo + hi) / 2
            return Point(tau * a0 / n2, tau * b0 / n2)
        return None
    for h1, h2, h3 in combinations(hs, 3):
        D = (h1.a * (h2.b - h3.b) - h1.b * (h2.a - h3.a) + (h2.a * h3.b - h3.a * h2.b))
        if D == 0:
            continue
        Dx = (h1.c * (h2.b - h3.b) - h1.b * (h2.c - h3.c) + (h2.c * h3.b - h3.c * h2.b))
        Dy = (h1.a * (h2.c - h3.c) - h1.c * (h2.a - h3.a) + (h2.a * h3.c - h3.a * h2.c))
        Ds = (h1.a * (h2.b * h3.c - h3.b * h2.c) - h1.b * (h2.a * h3.c - h3.a * h2.c)
              + h1.c * (h2.a * h3.b - h3.a * h2.b))
        if D < 0:
            D, Dx, Dy, Ds = -D, -Dx, -Dy, -Ds
        if Ds <= 0:
            continue
        if all(h.c * D - h.a * Dx - h.b * Dy >= Ds for h in hs):
            return Point(Fraction(Dx, D), Fraction(Dy, D))
    return None


def find_cover_subset(H: Sequence[HalfPlane]) -> tuple[int, ...]:
    """Lexicographically first covering pair, else first covering triple."""
    H = list(H)
    for r in (2, 3):
        for idx in combinations(range(len(H)), r):
            if uncovered_point([H[i] for i in idx]) is None:
                return idx
    raise ValueError("the half-planes do not cover the plane")


def covers_plane(H: Sequence[HalfPlane]) -> CoverCertificate:
    H = list(H)
    q = uncovered_point(H)
    if q is not None:
        return CoverCertificate(witness_point=q)
    return CoverCertificate(cover_subset=find_cover_subset(H))


def _require_distinct_lines(H: Sequence[HalfPlane]):
    lines = [h.boundary for h in H]
    if len(set(lines)) != len(lines):
        raise GeneralPositionError("boundary lines must be pairwise distinct")


def _color_dual_points(points: list[Point], k: int, seed: int) -> Coloring:
    P = PointSet(points)
    if not in_general_position(P):
        P = perturb_to_general_position(P, seed=seed)
    return color_points(P, k)


def peel_covers(H: Sequence[HalfPlane], k: int) -> PeelingTrace:
    """Remove covering sub-families one at a time, stopping after ``k`` of them."""
    remaining = list(range(len(H)))
    layers = []
    while len(layers) < k:
        q = uncovered_point([H[i] for i in remaining])
        if q is not None:
            return PeelingTrace(tuple(layers), tuple(remaining), q)
        sub = find_cover_subset([H[i] for i in remaining])
        layer = tuple(remaining[j] for j in sub)
        layers.append(layer)
        remaining = [i for i in remaining if i not in layer]
    return PeelingTrace(tuple(layers), tuple(remaining), None)


def color_halfplanes_3k2(H: Sequence[HalfPlane], k: int, seed: int = 0) -> Coloring:
    """Every point lying in ``3k - 2`` half-planes of ``H`` lies in one of each color."""
    if k < 1:
        raise ValueError("k must be at least 1")
    H = list(H)
    _require_distinct_lines(H)
    colors = [1] * len(H)
    if k == 1:
        return Coloring(tuple(colors), 1)
    trace = peel_covers(H, k)
    for j, layer in enumerate(trace.layers, start=1):
        for i in layer:
            colors[i] = j
    i = trace.i
    if i < k and trace.residual:
        q = trace.witness
        shifted = [H[r].translated(Point(-q.x, -q.y)) for r in trace.residual]
        if any(h.c <= 0 for h in shifted):
            raise InvariantError("residual half-plane contains the uncovered point")
        dual = [polar_dual_point(h.boundary) for h in shifted]
        sub = _color_dual_points(dual, k - i, seed)
        for r, c in zip(trace.residual, sub.colors):
            colors[r] = c + i
    return Coloring(tuple(colors), k, trace=trace)


_SHEARS = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3)]


def _shear_for(H: Sequence[HalfPlane]) -> Fraction | None:
    if all(h.b != 0 for h in H):
        return None
    for s in _SHEARS + [Fraction(m) for m in range(4, 4 + 2 * len(H) + 2)]:
        if all(h.b - h.a * s != 0 for h in H):
            return s
    raise AssertionError("unreachable: finitely many bad shears")


def color_halfplanes_4k3(H: Sequence[HalfPlane], k: int, seed: int = 0) -> Coloring:
    """Every point lying in ``4k - 3`` half-planes of ``H`` lies in one of each color.

    Vertical boundaries are handled by first applying the shear
    ``(x, y) -> (x + s*y, y)``, which maps each half-plane to a non-vertical
    one and preserves containment, so the coloring carries over unchanged.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    H = list(H)
    _require_distinct_lines(H)
    s = _shear_for(H)
    if s is not None:
        H = [HalfPlane(h.a, h.b - h.a * s, h.c) for h in H]
    colors = [1] * len(H)
    if k == 1:
        return Coloring(tuple(colors), 1)
    for side in (True, False):
        idx = [i for i, h in enumerate(H) if h.is_positive == side]
        if not idx:
            continue
        dual = [standard_dual_point(H[i].boundary) for i in idx]
        sub = _color_dual_points(dual, k, seed)
        for i, c in zip(idx, sub.colors):
            colors[i] = c
    return Coloring(tuple(colors), k)
