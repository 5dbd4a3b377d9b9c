"""Epsilon-nets from polychromatic colorings.

If every range holding at least ``c*k - (c - 1)`` elements sees all ``k``
colors, then each color class hits every such range, and the smallest class
has at most ``n / k`` elements.  Choosing ``k`` as large as the heavy ranges
allow turns this into a net of size below ``c / eps``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .chromatic_halfplanes import _require_distinct_lines, find_cover_subset, uncovered_point
from .chromatic_points import Coloring, color_points
from .geom import HalfPlane, Point, PointSet, as_point_set, in_general_position, \
    perturb_to_general_position, polar_dual_point
from .ranges import RangeSpace

Colorer = Callable[[Sequence, int], Coloring]


@dataclass(frozen=True)
class EpsNet:
    """Indices into the ground sequence forming an ``epsilon``-net.

    ``k`` is the number of colors used (0 for the covering branch) and
    ``dropped`` the index left out of the coloring when ``eps * n`` was an
    exact multiple of ``c``.  ``size_bound`` is the promised upper bound on
    the net size, exclusive when ``strict`` is set.
    """

    indices: tuple[int, ...]
    epsilon: Fraction
    k: int = 0
    dropped: int | None = None
    branch: str = "coloring"
    size_bound: Fraction | None = None
    strict: bool = True
    bound_guaranteed: bool = True

    def __len__(self):
        return len(self.indices)


def _check_eps(eps) -> Fraction:
    eps = Fraction(eps)
    if not 0 < eps <= 1:
        raise ValueError("eps must lie in (0, 1]")
    return eps


def colors_for(n: int, eps, c: int) -> int:
    """Largest ``k`` with ``c*k - (c - 1) <= ceil(eps * n)``."""
    m = math.ceil(Fraction(eps) * n)
    return max(1, -(-m // c))


def epsnet_generic(space: RangeSpace, c: int, colorer: Colorer, eps) -> EpsNet:
    """Smallest color class of a coloring polychromatic at threshold ``c*k - (c - 1)``.

    ``colorer(ground, k)`` must return such a coloring of ``ground``.  The
    result hits every range of ``space`` holding at least ``eps * n``
    elements and has fewer than ``c / eps`` of them.
    """
    if c < 2:
        raise ValueError("c must be at least 2")
    eps = _check_eps(eps)
    ground = space.ground
    n = len(ground)
    bound = c / eps
    if n == 0:
        return EpsNet((), eps, 0, size_bound=bound)
    k = colors_for(n, eps, c)
    keep = list(range(n))
    dropped = None
    if c * k == eps * n:
        # The smallest class could reach exactly n/k = c/eps; without one
        # element every heavy range still has at least c*k - 1 >= c*k - (c-1).
        dropped = keep.pop()
    sub = space.restrict(keep).ground if dropped is not None else ground
    chi = colorer(sub, k)
    smallest = chi.smallest_class()
    if len(smallest) > len(keep) // k:
        raise AssertionError("smallest color class exceeds n/k")
    return EpsNet(tuple(keep[i] for i in smallest), eps, k, dropped, size_bound=bound)


def _point_colorer(ground, k: int) -> Coloring:
    return color_points(ground, k)


def _dual_point_colorer(seed: int) -> Colorer:
    def colorer(ground, k):
        P = PointSet(ground)
        if not in_general_position(P):
            P = perturb_to_general_position(P, seed=seed)
        return color_points(P, k)
    return colorer


def epsnet_points(P, eps) -> EpsNet:
    """A net for ``P`` w.r.t. half-planes: every half-plane with ``eps*n`` points meets it."""
    P = as_point_set(P)
    return epsnet_generic(RangeSpace(P, ()), 2, _point_colorer, eps)


def epsnet_halfplanes(H: Sequence[HalfPlane], eps, seed: int = 0) -> EpsNet:
    """A net for ``H`` w.r.t. points: every point in ``eps*|H|`` half-planes is in one of them.

    If ``H`` leaves some point ``q`` uncovered, the half-planes are dualized
    around ``q`` and the point net is used.  Otherwise at most three members
    of ``H`` already cover the plane and form the net; its size is within
    ``2/eps`` only for ``eps <= 2/3``.
    """
    eps = _check_eps(eps)
    H = list(H)
    _require_distinct_lines(H)
    q = uncovered_point(H)
    if q is None:
        cover = find_cover_subset(H)
        return EpsNet(cover, eps, 0, branch="cover", size_bound=Fraction(3), strict=False,
                      bound_guaranteed=eps <= Fraction(2, 3))
    dual = [polar_dual_point(h.translated(Point(-q.x, -q.y)).boundary) for h in H]
    net = epsnet_generic(RangeSpace(dual, ()), 2, _dual_point_colorer(seed), eps)
    return EpsNet(net.indices, eps, net.k, net.dropped, branch="dual-points",
                  size_bound=net.size_bound)
