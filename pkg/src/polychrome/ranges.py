"""The half-plane hypergraph of a point set, and its dual on half-planes.

Subsets are handled internally as integer bitmasks over point indices;
:class:`Hyperedge` exposes them as sorted index tuples together with a
half-plane (or, for the dual space, a point) that realizes them.

The primal enumeration is a rotational sweep.  A direction ``u`` orders
the points by decreasing projection; every prefix of that order is cut out
by a half-plane.  As ``u`` turns through a full circle the order only
changes when ``u`` becomes perpendicular to a pair ``(a, b)``, and then
``a`` and ``b`` are adjacent and trade places.  Each swap changes exactly
one prefix, so walking the ``n(n-1)`` swap events in angular order visits
every prefix of every direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Iterable, Sequence, Union

from .errors import GeneralPositionError, InvariantError
from .geom import HalfPlane, Point, PointSet, as_point_set, in_general_position

_TWO_PI = 2 * math.pi


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def indices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class Hyperedge:
    indices: tuple[int, ...]
    witness: Union[HalfPlane, Point, None] = None

    @property
    def mask(self) -> int:
        return mask_of(self.indices)

    def __len__(self):
        return len(self.indices)


@dataclass(frozen=True)
class RangeSpace:
    """A ground sequence (points or half-planes) and its distinct hyperedges."""

    ground: Sequence
    edges: tuple[Hyperedge, ...]

    def masks(self) -> list[int]:
        return [e.mask for e in self.edges]

    def restrict(self, keep: Sequence[int]) -> RangeSpace:
        """Induced sub-space on ``keep``; indices are renumbered in that order."""
        remap = {g: i for i, g in enumerate(keep)}
        seen: dict[tuple[int, ...], Hyperedge] = {}
        for e in self.edges:
            sub = tuple(sorted(remap[i] for i in e.indices if i in remap))
            seen.setdefault(sub, Hyperedge(sub, e.witness))
        ground = [self.ground[i] for i in keep]
        if isinstance(self.ground, PointSet):
            ground = PointSet(ground)
        return RangeSpace(ground, tuple(seen.values()))


# Exact angular order on integer direction vectors, angles taken in (0, 2*pi].

def _half(ux: int, uy: int) -> int:
    return 0 if (uy > 0 or (uy == 0 and ux < 0)) else 1


def angle_cmp(u, v) -> int:
    hu, hv = _half(u[0], u[1]), _half(v[0], v[1])
    if hu != hv:
        return -1 if hu < hv else 1
    c = u[0] * v[1] - u[1] * v[0]
    return (c < 0) - (c > 0)


def _float_angle(ux: int, uy: int) -> float:
    a = math.atan2(uy, ux)
    return a + _TWO_PI if a <= 0 else a


def sort_by_angle(items: list) -> list:
    """Sort tuples whose first two entries are an integer direction vector.

    A float ``atan2`` pass does the bulk of the work; an insertion pass with
    the exact comparator then repairs any local misordering.
    """
    big = any(max(abs(t[0]), abs(t[1])).bit_length() > 1000 for t in items)
    if big:
        return sorted(items, key=cmp_to_key(angle_cmp))
    items = sorted(items, key=lambda t: _float_angle(t[0], t[1]))
    for i in range(1, len(items)):
        j = i
        while j > 0 and angle_cmp(items[j], items[j - 1]) < 0:
            items[j], items[j - 1] = items[j - 1], items[j]
            j -= 1
    return items


class _Sweep:
    """Integer coordinates and the angularly sorted swap events of a point set."""

    def __init__(self, P: PointSet):
        xs, ys, scale = P.integer_coords
        self.n = len(P)
        self.xs, self.ys, self.scale = xs, ys, scale
        events = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                dx, dy = xs[j] - xs[i], ys[j] - ys[i]
                events.append((-dy, dx, i, j))
                events.append((dy, -dx, i, j))
        self.events = sort_by_angle(events)

    def masks(self, members: Sequence[int] | None = None, size: int | None = None) -> dict:
        """Map each realizable subset of ``members`` to the data that built it.

        With ``size`` given only subsets of that cardinality are collected.
        Bits refer to indices of the full point set.
        """
        n = self.n
        members = list(range(n)) if members is None else list(members)
        m = len(members)
        xs, ys = self.xs, self.ys
        inm = bytearray(n)
        for i in members:
            inm[i] = 1
        order = sorted(members, key=lambda i: (-xs[i], -ys[i]))
        pos = [0] * n
        prefix = [0] * (m + 1)
        acc = 0
        for r, i in enumerate(order):
            pos[i] = r
            acc |= 1 << i
            prefix[r + 1] = acc
        found: dict[int, tuple] = {}
        sizes = range(m + 1) if size is None else ([size] if 0 <= size <= m else [])
        for s in sizes:
            upper = order[s - 1] if s > 0 else None
            lower = order[s] if s < m else None
            found.setdefault(prefix[s], ("init", upper, lower))
        if size is not None and not sizes:
            return found
        want = -1 if size is None else size
        for ux, uy, a, b in self.events:
            if not (inm[a] and inm[b]):
                continue
            pa, pb = pos[a], pos[b]
            if pa > pb:
                a, b, pa, pb = b, a, pb, pa
            if pb != pa + 1:
                raise InvariantError("swap event on non-adjacent points")
            order[pa], order[pb] = b, a
            pos[b], pos[a] = pa, pb
            new = prefix[pb] ^ (1 << a) ^ (1 << b)
            prefix[pb] = new
            if (want < 0 or pb == want) and new not in found:
                found[new] = (ux, uy, b, a)
        return found

    def witness(self, gen: tuple, members: Sequence[int] | None = None) -> HalfPlane:
        xs, scale = self.xs, self.scale
        members = range(self.n) if members is None else members
        if gen[0] == "init":
            _, upper, lower = gen
            if upper is None:
                return HalfPlane(scale, 0, max((xs[i] for i in members), default=0) + 1)
            if lower is None:
                return HalfPlane(scale, 0, min(xs[i] for i in members))
            if xs[upper] != xs[lower]:
                return HalfPlane(2 * scale, 0, xs[upper] + xs[lower])
            return self._tilted(1, 0, upper, lower, members)
        ux, uy, inc, exc = gen
        return self._tilted(ux, uy, inc, exc, members)

    def _tilted(self, ux, uy, inc, exc, members) -> HalfPlane:
        # Points with u.p > u.inc = u.exc, plus inc.  Tilt the normal towards
        # inc - exc by lam, small enough that no other point changes side.
        xs, ys, scale = self.xs, self.ys, self.scale
        mx2, my2 = xs[inc] + xs[exc], ys[inc] + ys[exc]
        vx, vy = xs[inc] - xs[exc], ys[inc] - ys[exc]
        lam = Fraction(1)
        for p in members:
            if p == inc or p == exc:
                continue
            px, py = 2 * xs[p] - mx2, 2 * ys[p] - my2
            U = ux * px + uy * py
            V = vx * px + vy * py
            if U == 0:
                raise GeneralPositionError("collinear points in sweep")
            if V != 0:
                lam = min(lam, Fraction(abs(U), 2 * abs(V)))
        wx, wy = ux + lam * vx, uy + lam * vy
        return HalfPlane(2 * wx * scale, 2 * wy * scale, wx * mx2 + wy * my2)


@lru_cache(maxsize=64)
def _sweep(P: PointSet) -> _Sweep:
    return _Sweep(P)


def sweep_for(P) -> _Sweep:
    P = as_point_set(P)
    if not in_general_position(P):
        raise GeneralPositionError("hyperedge enumeration needs general position")
    return _sweep(P)


def hyperedge_masks(P, size: int | None = None) -> list[int]:
    """Bitmasks of every distinct subset ``P ∩ h`` (optionally of one size)."""
    return list(sweep_for(P).masks(size=size))


def enumerate_hyperedges(P) -> RangeSpace:
    """All distinct subsets cut from ``P`` by closed half-planes, with witnesses.

    The empty set and ``P`` itself are included.
    """
    P = as_point_set(P)
    sw = sweep_for(P)
    edges = tuple(Hyperedge(indices_of(m), sw.witness(g)) for m, g in sw.masks().items())
    return RangeSpace(P, edges)


def hyperedges_of_size(P, t: int) -> list[Hyperedge]:
    if t < 0:
        raise ValueError("t must be non-negative")
    sw = sweep_for(P)
    return [Hyperedge(indices_of(m), sw.witness(g)) for m, g in sw.masks(size=t).items()]


def realizable_subsets(P) -> set[int]:
    """Masks of all subsets cut by half-planes, for any point set.

    Unlike the sweep this tolerates collinear points: it sorts once per open
    arc between consecutive critical directions.  Cubic in ``n``; meant for
    small inputs and for checking perturbations.
    """
    P = as_point_set(P)
    xs, ys, _ = P.integer_coords
    n = len(P)
    out = {0, (1 << n) - 1}
    dirs = set()
    for i in range(n):
        for j in range(i + 1, n):
            dx, dy = xs[j] - xs[i], ys[j] - ys[i]
            g = math.gcd(dx, dy)
            dirs.add((-dy // g, dx // g))
            dirs.add((dy // g, -dx // g))
    crit = sorted(dirs, key=cmp_to_key(angle_cmp))
    generic = []
    if not crit:
        generic.append((1, 0))
    for k, u in enumerate(crit):
        v = crit[(k + 1) % len(crit)]
        if len(crit) == 1:
            generic.append((-u[1], u[0]))
        elif u[0] * v[1] - u[1] * v[0] > 0:
            lu, lv = abs(u[0]) + abs(u[1]), abs(v[0]) + abs(v[1])
            generic.append((u[0] * lv + v[0] * lu, u[1] * lv + v[1] * lu))
        else:
            generic.append((-u[1], u[0]))
    for gx, gy in generic:
        order = sorted(range(n), key=lambda i: -(gx * xs[i] + gy * ys[i]))
        acc = 0
        for i in order:
            acc |= 1 << i
            out.add(acc)
    return out


def depth(H: Iterable[HalfPlane], p: Point) -> int:
    return sum(1 for h in H if h.contains(p))


# Dual space: half-planes as ground set, one hyperedge per arrangement face.

@dataclass(frozen=True)
class Sample:
    """A representative of one face of the boundary-line arrangement.

    ``mask`` is the set of half-planes containing the representative.  The
    concrete point is ``base`` moved by an infinitesimal step to ``side`` of
    line ``line`` (``side == 0`` means ``base`` itself); see :func:`sample_point`.
    """

    mask: int
    base: Point
    line: int | None
    side: int


def _homog_sign(h: HalfPlane, X: int, Y: int, W: int) -> int:
    v = h.a * X + h.b * Y - h.c * W
    return (v > 0) - (v < 0)


def arrangement_samples(H: Sequence[HalfPlane]) -> list[Sample]:
    """Candidate points meeting every vertex, edge and cell of the arrangement.

    Every vertex is taken; every edge (a piece of a boundary line between
    consecutive vertices, or an unbounded piece) contributes one interior
    point plus its two infinitesimal offsets across the line.  Each cell is
    bounded by at least one edge, so the offsets reach every cell.
    """
    H = list(H)
    n = len(H)
    if n == 0:
        return [Sample(0, Point(0, 0), None, 0)]
    params: list[list[Fraction]] = [[] for _ in range(n)]
    samples: list[Sample] = []
    seen_vertices = set()
    for i in range(n):
        hi = H[i]
        for j in range(i + 1, n):
            hj = H[j]
            D = hi.a * hj.b - hj.a * hi.b
            if D == 0:
                continue
            X = hi.c * hj.b - hj.c * hi.b
            Y = hi.a * hj.c - hj.a * hi.c
            if D < 0:
                X, Y, D = -X, -Y, -D
            v = Point(Fraction(X, D), Fraction(Y, D))
            params[i].append(-hi.b * v.x + hi.a * v.y)
            params[j].append(-hj.b * v.x + hj.a * v.y)
            if v not in seen_vertices:
                seen_vertices.add(v)
                m = 0
                for k, h in enumerate(H):
                    if _homog_sign(h, X, Y, D) >= 0:
                        m |= 1 << k
                samples.append(Sample(m, v, None, 0))
    for i, hi in enumerate(H):
        ts = sorted(set(params[i]))
        if ts:
            cand = [ts[0] - 1] + [(s + t) / 2 for s, t in zip(ts, ts[1:])] + [ts[-1] + 1]
        else:
            cand = [Fraction(0)]
        N = hi.a * hi.a + hi.b * hi.b
        for t in cand:
            X = hi.c * hi.a * t.denominator - t.numerator * hi.b
            Y = hi.c * hi.b * t.denominator + t.numerator * hi.a
            W = N * t.denominator
            e = Point(Fraction(X, W), Fraction(Y, W))
            base = 0
            plus = 0
            minus = 0
            for k, h in enumerate(H):
                s = _homog_sign(h, X, Y, W)
                bit = 1 << k
                if s > 0:
                    base |= bit
                    plus |= bit
                    minus |= bit
                elif s == 0:
                    base |= bit
                    dot = h.a * hi.a + h.b * hi.b
                    if dot > 0:
                        plus |= bit
                    elif dot < 0:
                        minus |= bit
            samples.append(Sample(base, e, i, 0))
            samples.append(Sample(plus, e, i, 1))
            samples.append(Sample(minus, e, i, -1))
    return samples


def sample_point(H: Sequence[HalfPlane], s: Sample) -> Point:
    """A concrete point with exactly the containment pattern ``s.mask``."""
    if s.side == 0:
        return s.base
    hi = H[s.line]
    delta = Fraction(1)
    for h in H:
        val = h.slack(s.base)
        dot = h.a * hi.a + h.b * hi.b
        if val != 0 and dot != 0:
            delta = min(delta, abs(val) / (2 * abs(dot)))
    step = s.side * delta
    return Point(s.base.x + step * hi.a, s.base.y + step * hi.b)


def halfplane_range_space(H: Sequence[HalfPlane]) -> RangeSpace:
    """Dual range space: hyperedges are the sets ``{h in H : p in h}``."""
    H = list(H)
    seen: dict[int, Sample] = {}
    for s in arrangement_samples(H):
        seen.setdefault(s.mask, s)
    edges = tuple(Hyperedge(indices_of(m), sample_point(H, s)) for m, s in seen.items())
    return RangeSpace(H, edges)
