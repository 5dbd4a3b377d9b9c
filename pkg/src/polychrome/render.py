"""SVG drawings of point sets and half-plane families."""

from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Sequence

from .geom import HalfPlane, Point, convex_hull

PALETTE = ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e",
           "#e6ab02", "#a6761d", "#666666", "#1f78b4", "#b2df8a"]
SVG_NS = "http://www.w3.org/2000/svg"


def _color(c: int | None) -> str:
    return "#000000" if c is None else PALETTE[(c - 1) % len(PALETTE)]


class _Frame:
    """Maps plane coordinates into a square viewport with y pointing up."""

    def __init__(self, pts: Sequence[Point], size: int = 600, margin: int = 30):
        xs = [float(p.x) for p in pts] or [0.0]
        ys = [float(p.y) for p in pts] or [0.0]
        self.x0, self.x1 = min(xs), max(xs)
        self.y0, self.y1 = min(ys), max(ys)
        span = max(self.x1 - self.x0, self.y1 - self.y0) or 1.0
        self.scale = (size - 2 * margin) / span
        self.size, self.margin = size, margin

    def __call__(self, x: float, y: float) -> tuple[str, str]:
        sx = self.margin + (x - self.x0) * self.scale
        sy = self.size - self.margin - (y - self.y0) * self.scale
        return f"{sx:.3f}", f"{sy:.3f}"


def _root(size: int) -> ET.Element:
    return ET.Element("svg", {"xmlns": SVG_NS, "version": "1.1",
                              "width": str(size), "height": str(size),
                              "viewBox": f"0 0 {size} {size}"})


def _clip_line(h: HalfPlane, frame: _Frame):
    """Endpoints of the boundary of ``h`` inside the frame's bounding box, padded."""
    pad = 0.1 * max(frame.x1 - frame.x0, frame.y1 - frame.y0, 1.0)
    x0, x1, y0, y1 = frame.x0 - pad, frame.x1 + pad, frame.y0 - pad, frame.y1 + pad
    a, b, c = float(h.a), float(h.b), float(h.c)
    hits = []
    if b:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 <= y <= y1:
                hits.append((x, y))
    if a:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 <= x <= x1:
                hits.append((x, y))
    return hits[:2] if len(hits) >= 2 else None


def render_points(points: Sequence[Point], colors: Sequence[int] | None = None,
                  groups: dict[str, Sequence[int]] | None = None,
                  halfplane: HalfPlane | None = None, size: int = 600) -> str:
    """Points colored by class with their hull; ``groups`` names subsets of indices."""
    points = list(points)
    frame = _Frame(points, size)
    root = _root(size)
    if len(points) >= 3:
        hull = convex_hull(points)
        coords = " ".join(",".join(frame(float(points[i].x), float(points[i].y))) for i in hull)
        ET.SubElement(root, "polygon", {"class": "hull", "points": coords,
                                        "fill": "none", "stroke": "#bbbbbb"})
    if halfplane is not None:
        seg = _clip_line(halfplane, frame)
        if seg:
            (ax, ay), (bx, by) = seg
            p1, p2 = frame(ax, ay), frame(bx, by)
            ET.SubElement(root, "line", {"class": "range", "x1": p1[0], "y1": p1[1],
                                         "x2": p2[0], "y2": p2[1], "stroke": "#444444",
                                         "stroke-dasharray": "6,4"})
    if groups is None:
        groups = {"points": range(len(points))}
    for name, idx in groups.items():
        g = ET.SubElement(root, "g", {"id": name, "class": name})
        for i in idx:
            p = points[i]
            cx, cy = frame(float(p.x), float(p.y))
            attrs = {"cx": cx, "cy": cy, "r": "5",
                     "fill": _color(colors[i] if colors else None),
                     "data-index": str(i)}
            if halfplane is not None and halfplane.contains(p):
                attrs.update({"stroke": "#000000", "stroke-width": "2"})
            ET.SubElement(g, "circle", attrs)
    return ET.tostring(root, encoding="unicode") + "\n"


def render_halfplanes(H: Sequence[HalfPlane], colors: Sequence[int] | None = None,
                      size: int = 600) -> str:
    """Boundary lines of ``H`` with a short tick on the inner side of each."""
    H = list(H)
    verts = []
    for i, h in enumerate(H):
        for g in H[i + 1:]:
            D = h.a * g.b - g.a * h.b
            if D:
                verts.append(Point(Fraction(h.c * g.b - g.c * h.b, D),
                                   Fraction(h.a * g.c - g.a * h.c, D)))
    if not verts:
        verts = [Point(-1, -1), Point(1, 1)]
    frame = _Frame(verts, size)
    root = _root(size)
    g = ET.SubElement(root, "g", {"id": "halfplanes", "class": "halfplanes"})
    for i, h in enumerate(H):
        seg = _clip_line(h, frame)
        if not seg:
            continue
        (ax, ay), (bx, by) = seg
        p1, p2 = frame(ax, ay), frame(bx, by)
        ET.SubElement(g, "line", {"x1": p1[0], "y1": p1[1], "x2": p2[0], "y2": p2[1],
                                  "stroke": _color(colors[i] if colors else None),
                                  "data-index": str(i)})
        mx, my = (ax + bx) / 2, (ay + by) / 2
        norm = (float(h.a) ** 2 + float(h.b) ** 2) ** 0.5
        step = 12 / frame.scale / norm
        q1, q2 = frame(mx, my), frame(mx + float(h.a) * step, my + float(h.b) * step)
        ET.SubElement(g, "line", {"x1": q1[0], "y1": q1[1], "x2": q2[0], "y2": q2[1],
                                  "stroke": _color(colors[i] if colors else None),
                                  "class": "inner-side"})
    return ET.tostring(root, encoding="unicode") + "\n"
