"""Brute-force checks for colorings and epsilon-nets.

Nothing here trusts the constructions it checks.  The primal verifier walks
every hyperedge of the point set; the dual verifier walks a representative
of every face of the line arrangement; ``pair_hyperedges`` is a second,
independent enumeration of the primal hypergraph used to cross-check the
sweep.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .chromatic_points import Coloring
from .errors import BudgetExceeded
from .geom import HalfPlane, Point, PointSet, as_point_set, in_general_position
from .ranges import (
    Hyperedge,
    arrangement_samples,
    hyperedge_masks,
    indices_of,
    realizable_subsets,
    sample_point,
    sweep_for,
)

DEFAULT_BUDGET = int(os.environ.get("POLYCHROME_BUDGET", 20_000_000))


@dataclass(frozen=True)
class Violation:
    kind: str  # missing-color-edge | missing-color-point | unhit-edge | uncovered-depth-point
    witness: Union[Hyperedge, Point]
    missing: int | None = None


def _primal_edges(P: PointSet) -> dict[int, object]:
    if in_general_position(P):
        return sweep_for(P).masks()
    return dict.fromkeys(sorted(realizable_subsets(P)))


def _edge(P: PointSet, mask: int, gen) -> Hyperedge:
    witness = sweep_for(P).witness(gen) if gen is not None else None
    return Hyperedge(indices_of(mask), witness)


def verify_point_coloring(P, chi: Coloring, m: int) -> Violation | None:
    """``None`` if every hyperedge with at least ``m`` points sees all colors."""
    P = as_point_set(P)
    if len(chi.colors) != len(P):
        raise ValueError("coloring does not match the point set")
    classes = chi.class_masks()
    for mask, gen in _primal_edges(P).items():
        if mask.bit_count() < m:
            continue
        for c, cm in enumerate(classes, start=1):
            if not mask & cm:
                return Violation("missing-color-edge", _edge(P, mask, gen), c)
    return None


def verify_halfplane_coloring(H: Sequence[HalfPlane], chi: Coloring, m: int) -> Violation | None:
    """``None`` if every point covered ``m`` times is covered by every color."""
    H = list(H)
    if len(chi.colors) != len(H):
        raise ValueError("coloring does not match the half-plane family")
    classes = chi.class_masks()
    for s in arrangement_samples(H):
        if s.mask.bit_count() < m:
            continue
        for c, cm in enumerate(classes, start=1):
            if not s.mask & cm:
                return Violation("missing-color-point", sample_point(H, s), c)
    return None


def pair_hyperedges(P) -> set[int]:
    """Hyperedges via the lines through point pairs.

    For each pair ``(i, j)`` and each side of their line, the points strictly
    on that side together with any subset of ``{i, j}``; plus the empty and
    full sets.  Complete for point sets in general position.
    """
    P = as_point_set(P)
    n = len(P)
    out = {0, (1 << n) - 1}
    pts = list(P)
    for i in range(n):
        for j in range(i + 1, n):
            p, q = pts[i], pts[j]
            left = right = 0
            for r in range(n):
                if r == i or r == j:
                    continue
                o = (q.x - p.x) * (pts[r].y - p.y) - (q.y - p.y) * (pts[r].x - p.x)
                if o > 0:
                    left |= 1 << r
                elif o < 0:
                    right |= 1 << r
            for side in (left, right):
                for extra in (0, 1 << i, 1 << j, (1 << i) | (1 << j)):
                    out.add(side | extra)
    return out


def _best_thresholds(edges: list[int], n: int, k: int, colorings: np.ndarray) -> np.ndarray:
    """For each coloring row, the least ``m`` making every ``m``-heavy edge polychromatic."""
    E = np.zeros((len(edges), n), dtype=np.float32)
    for r, mask in enumerate(edges):
        for i in indices_of(mask):
            E[r, i] = 1
    sizes = E.sum(axis=1)
    poly = np.ones((colorings.shape[0], len(edges)), dtype=bool)
    for c in range(k):
        poly &= ((colorings == c).astype(np.float32) @ E.T) > 0
    bad_sizes = np.where(poly, -1, sizes[None, :])
    return bad_sizes.max(axis=1).astype(np.int64) + 1


def _colorings(n: int, k: int, start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop`` of all colorings with point 0 fixed to color 0."""
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((len(codes), n), dtype=np.int8)
    for i in range(n - 1, 0, -1):
        out[:, i] = codes % k
        codes //= k
    return out


def exhaustive_best_threshold(P, k: int, budget: int | None = None) -> int:
    """Least ``m`` for which some ``k``-coloring makes every ``m``-point half-plane polychromatic.

    Tries all ``k**n`` colorings (up to a permutation of colors).
    """
    P = as_point_set(P)
    n = len(P)
    budget = DEFAULT_BUDGET if budget is None else budget
    if k ** n > budget:
        raise BudgetExceeded(f"{k}**{n} colorings exceed the budget of {budget}")
    if n == 0:
        return 1
    edges = list(_primal_edges(P))
    total = k ** (n - 1)
    best = n + 1
    chunk = 4096
    for start in range(0, total, chunk):
        cols = _colorings(n, k, start, min(total, start + chunk))
        best = min(best, int(_best_thresholds(edges, n, k, cols).min()))
    return best


def find_bad_coloring(edges: list[int], n: int, k: int, m: int,
                      budget: int | None = None) -> tuple[int, ...] | None:
    """A ``k``-coloring under which every ``m``-heavy edge is polychromatic, if one exists."""
    budget = DEFAULT_BUDGET if budget is None else budget
    if k ** n > budget:
        raise BudgetExceeded(f"{k}**{n} colorings exceed the budget of {budget}")
    if n == 0:
        return ()
    total = k ** (n - 1)
    chunk = 4096
    for start in range(0, total, chunk):
        cols = _colorings(n, k, start, min(total, start + chunk))
        thr = _best_thresholds(edges, n, k, cols)
        hit = np.nonzero(thr <= m)[0]
        if len(hit):
            return tuple(int(c) + 1 for c in cols[hit[0]])
    return None


def verify_epsnet(instance, net) -> Violation | None:
    """Check an epsilon-net against a point set or a half-plane family.

    ``instance`` is a point set (primal: every half-plane holding at least
    ``eps * n`` points must meet the net) or a list of ``HalfPlane``
    (dual: every point covered at least ``eps * n`` times must be covered
    by a net member).
    """
    chosen = 0
    for i in net.indices:
        chosen |= 1 << i
    eps = Fraction(net.epsilon)
    items = list(instance)
    if items and isinstance(items[0], HalfPlane):
        need = eps * len(items)
        for s in arrangement_samples(items):
            if s.mask.bit_count() >= need and not s.mask & chosen:
                return Violation("uncovered-depth-point", sample_point(items, s))
        return None
    P = as_point_set(instance)
    need = eps * len(P)
    for mask, gen in _primal_edges(P).items():
        if mask.bit_count() >= need and not mask & chosen:
            return Violation("unhit-edge", _edge(P, mask, gen))
    return None


def hyperedge_families_agree(P) -> bool:
    """Sweep enumeration and pair-based enumeration give the same family."""
    return set(hyperedge_masks(P)) == pair_hyperedges(P)
