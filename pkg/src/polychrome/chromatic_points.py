"""Polychromatic k-colorings of points with respect to half-planes.

Each round peels off a containment-minimal hitting set of the hull vertices
for the half-planes holding exactly ``2k - 1`` points, gives it color ``k``
and recurses on the rest with ``k - 1`` colors.  Every half-plane with at
least ``2k - 1`` points ends up containing all ``k`` colors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import InvariantError
from .geom import PointSet, as_point_set, convex_hull, require_general_position
from .ranges import _Sweep, indices_of, mask_of, sweep_for


@dataclass(frozen=True)
class HittingSet:
    indices: tuple[int, ...]
    t: int


@dataclass(frozen=True)
class Coloring:
    """Colors ``1..k``, one per ground index.

    ``levels`` holds the hitting set used for each color ``k, k-1, ...``
    when the coloring came from :func:`color_points`; ``trace`` holds the
    peeling record of the half-plane colorers.
    """

    colors: tuple[int, ...]
    k: int
    levels: tuple[HittingSet, ...] = ()
    trace: object = field(default=None, compare=False)

    def __post_init__(self):
        if any(not 1 <= c <= self.k for c in self.colors):
            raise ValueError(f"colors must lie in 1..{self.k}")

    def __len__(self):
        return len(self.colors)

    def color_class(self, c: int) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.colors) if x == c)

    def class_masks(self) -> list[int]:
        masks = [0] * (self.k + 1)
        for i, c in enumerate(self.colors):
            masks[c] |= 1 << i
        return masks[1:]

    @property
    def empty_classes(self) -> tuple[int, ...]:
        used = set(self.colors)
        return tuple(c for c in range(1, self.k + 1) if c not in used)

    def smallest_class(self) -> tuple[int, ...]:
        """The smallest color class; ties go to the lowest color."""
        return min((self.color_class(c) for c in range(1, self.k + 1)), key=len)


def threshold_for(k: int) -> int:
    if k < 1:
        raise ValueError("k must be at least 1")
    return 2 * k - 1


def _minimal_hitting_set(sw: _Sweep, members: Sequence[int], t: int) -> tuple[int, ...]:
    edges = list(sw.masks(members=members, size=t))
    if not edges:
        return ()
    sub = PointSet(_member_coords(sw, members))
    hull = [members[i] for i in convex_hull(sub)]
    chosen = mask_of(hull)
    for e in edges:
        if not e & chosen:
            raise InvariantError("hull vertices miss a hyperedge")
    # A vertex that cannot be dropped now can never be dropped later, so one
    # counter-clockwise pass already reaches a containment-minimal set.
    for v in hull:
        trial = chosen & ~(1 << v)
        if all(e & trial for e in edges):
            chosen = trial
    for e in edges:
        if (e & chosen).bit_count() > 2:
            raise InvariantError(f"hitting set meets a {t}-edge in more than two points")
    return indices_of(chosen)


def _member_coords(sw: _Sweep, members: Sequence[int]):
    return [(sw.xs[i], sw.ys[i]) for i in members]


def minimal_hitting_set(P, t: int) -> HittingSet:
    """A containment-minimal set of hull vertices meeting every ``t``-point half-plane.

    It meets each such half-plane in one or two points; both bounds are
    checked before returning.  Empty if no half-plane holds exactly ``t``
    points.
    """
    if t < 3:
        raise ValueError("t must be at least 3")
    P = require_general_position(P)
    sw = sweep_for(P)
    return HittingSet(_minimal_hitting_set(sw, list(range(len(P))), t), t)


def color_points(P, k: int) -> Coloring:
    """Color ``P`` with ``k`` colors so every half-plane with ``2k - 1`` points sees all of them.

    ``P`` must be in general position; run
    :func:`~polychrome.geom.perturb_to_general_position` first otherwise and
    reuse the coloring by index.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    P = require_general_position(as_point_set(P))
    n = len(P)
    colors = [1] * n
    residual = list(range(n))
    levels = []
    if k > 1 and n:
        sw = sweep_for(P)
        for level in range(k, 1, -1):
            t = 2 * level - 1
            if len(residual) < t:
                break
            N = _minimal_hitting_set(sw, residual, t)
            for i in N:
                colors[i] = level
            levels.append(HittingSet(N, t))
            drop = set(N)
            residual = [i for i in residual if i not in drop]
    return Coloring(tuple(colors), k, tuple(levels))
