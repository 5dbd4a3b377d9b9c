"""Instances on which ``2k - 2`` points per half-plane are not enough.

``2k - 1`` points sit on the parabola ``y = x**2``.  Just above the tangent
at each of them lies a half-plane holding every other parabola point and
nothing else; all remaining points are placed deep below every tangent.
Whatever the coloring, some color shows up at most once on the parabola,
and the half-plane that skips that one point misses the color while holding
``2k - 2`` points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .chromatic_points import Coloring
from .errors import BudgetExceeded, InvariantError
from .geom import HalfPlane, Point, PointSet, in_general_position
from .oracle import DEFAULT_BUDGET, _primal_edges, find_bad_coloring

# Gap between each tangent and the boundary of its half-plane.  Every other
# parabola point is at least 1 above the tangent, so 1/2 keeps them inside.
_LIFT = Fraction(1, 2)


@dataclass(frozen=True)
class LowerBoundInstance:
    points: PointSet
    curve_indices: tuple[int, ...]
    k: int
    halfplanes: tuple[HalfPlane, ...]

    @property
    def threshold(self) -> int:
        """Edges of this size need not be polychromatic."""
        return 2 * self.k - 2


def _separator(x: int) -> HalfPlane:
    # y >= 2*x*X - x**2 + 1/2, written as -2x*X + Y >= -x**2 + 1/2
    return HalfPlane(-2 * x, 1, -x * x + _LIFT)


def _check_instance(inst: LowerBoundInstance):
    P = inst.points
    curve = set(inst.curve_indices)
    if not in_general_position(P):
        raise InvariantError("lower-bound instance is not in general position")
    for i, h in zip(inst.curve_indices, inst.halfplanes):
        inside = {j for j, p in enumerate(P) if h.contains(p)}
        if inside != curve - {i}:
            raise InvariantError(f"separator of curve point {i} cuts the wrong set")


def gen_lower_bound(n: int, k: int) -> LowerBoundInstance:
    """``n`` points, ``2k - 1`` of them on a parabola, with no good ``2k - 2`` coloring."""
    if k < 1:
        raise ValueError("k must be at least 1")
    t = 2 * k - 1
    if n < t:
        raise ValueError(f"n must be at least 2k - 1 = {t}")
    xs = [i - k for i in range(1, t + 1)]
    curve = [Point(x, x * x) for x in xs]
    extra_n = n - t
    # Below every tangent at x = j needs M > (j - x_i)**2 - 2*j**2 - 1/2.
    M = max([(j - x) ** 2 for j in range(extra_n) for x in xs], default=0) + 1
    while True:
        extras = [Point(j, -M - j * j) for j in range(extra_n)]
        P = PointSet(curve + extras)
        if in_general_position(P):
            break
        M += 1
    inst = LowerBoundInstance(P, tuple(range(t)), k, tuple(_separator(x) for x in xs))
    _check_instance(inst)
    return inst


def _curve_counterexample(inst: LowerBoundInstance) -> tuple[int, ...] | None:
    """A curve coloring under which every separator sees all colors, if one exists."""
    k = inst.k
    t = len(inst.curve_indices)
    for colors in product(range(1, k + 1), repeat=t):
        if all(len(set(colors[:i] + colors[i + 1:])) == k for i in range(t)):
            return colors
    return None


def certify_lower_bound(inst: LowerBoundInstance, method: str = "auto",
                        budget: int | None = None) -> Coloring | None:
    """``None`` if every ``k``-coloring leaves some ``(2k - 2)``-point half-plane non-polychromatic.

    ``method="exhaustive"`` checks all colorings of all points against all
    hyperedges.  ``method="curve"`` checks the ``k**(2k-1)`` colorings of the
    parabola points against the separators, which suffices because no other
    point lies in any separator.  ``"auto"`` picks exhaustive when affordable.
    Otherwise a coloring that escapes the bound is returned.
    """
    k = inst.k
    if k == 1:
        return None
    n = len(inst.points)
    budget = DEFAULT_BUDGET if budget is None else budget
    if method == "auto":
        method = "exhaustive" if k ** n <= budget else "curve"
    if method == "exhaustive":
        edges = list(_primal_edges(inst.points))
        bad = find_bad_coloring(edges, n, k, inst.threshold, budget)
        return None if bad is None else Coloring(bad, k)
    if method == "curve":
        if k ** len(inst.curve_indices) > budget:
            raise BudgetExceeded("curve colorings exceed the budget")
        _check_instance(inst)
        bad = _curve_counterexample(inst)
        if bad is None:
            return None
        colors = [1] * n
        for i, c in zip(inst.curve_indices, bad):
            colors[i] = c
        return Coloring(tuple(colors), k)
    raise ValueError(f"unknown method {method!r}")


def random_general_position(n: int, lo: int = -1000, hi: int = 1000,
                            rng: random.Random | None = None) -> PointSet:
    """``n`` distinct integer points with no three collinear."""
    rng = rng or random.Random()
    pts: list[Point] = []
    while len(pts) < n:
        cand = Point(rng.randint(lo, hi), rng.randint(lo, hi))
        if cand in pts:
            continue
        if in_general_position(PointSet(pts + [cand])):
            pts.append(cand)
    return PointSet(pts)


def random_halfplanes(n: int, coef: int = 10, offset: int = 20,
                      rng: random.Random | None = None) -> list[HalfPlane]:
    """``n`` integer half-planes with pairwise distinct boundary lines."""
    rng = rng or random.Random()
    out: list[HalfPlane] = []
    lines = set()
    while len(out) < n:
        a, b = rng.randint(-coef, coef), rng.randint(-coef, coef)
        if a == 0 and b == 0:
            continue
        h = HalfPlane(a, b, rng.randint(-offset, offset))
        if h.boundary in lines:
            continue
        lines.add(h.boundary)
        out.append(h)
    return out
