"""JSON instance and result files with exact rational strings."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .geom import HalfPlane, Point, PointSet


def rational_str(v) -> str:
    return str(Fraction(v))


def parse_rational(s) -> Fraction:
    if isinstance(s, bool) or isinstance(s, float):
        raise ValueError(f"expected an exact rational, got {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {s!r}") from exc


@dataclass
class Instance:
    kind: str  # "points" or "halfplanes"
    elements: list
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in ("points", "halfplanes"):
            raise ValueError(f"unknown instance kind {self.kind!r}")

    def points(self) -> PointSet:
        if self.kind != "points":
            raise ValueError("instance does not hold points")
        return PointSet(self.elements)

    def halfplanes(self) -> list[HalfPlane]:
        if self.kind != "halfplanes":
            raise ValueError("instance does not hold half-planes")
        return list(self.elements)

    def to_json(self) -> dict:
        if self.kind == "points":
            elems = [[rational_str(p.x), rational_str(p.y)] for p in self.elements]
        else:
            elems = [[rational_str(h.a), rational_str(h.b), rational_str(h.c)] for h in self.elements]
        return {"kind": self.kind, "elements": elems, "metadata": self.metadata}

    @classmethod
    def from_json(cls, data: dict) -> Instance:
        if not isinstance(data, dict) or "kind" not in data or "elements" not in data:
            raise ValueError("instance needs 'kind' and 'elements'")
        kind = data["kind"]
        width = {"points": 2, "halfplanes": 3}.get(kind)
        if width is None:
            raise ValueError(f"unknown instance kind {kind!r}")
        elems = []
        for e in data["elements"]:
            if not isinstance(e, (list, tuple)) or len(e) != width:
                raise ValueError(f"{kind} entries need {width} coordinates: {e!r}")
            vals = [parse_rational(v) for v in e]
            elems.append(Point(*vals) if kind == "points" else HalfPlane(*vals))
        return cls(kind, elems, dict(data.get("metadata", {})))


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str):
    with open(path) as f:
        try:
            return json.load(f)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from exc


def load_instance(path: str) -> Instance:
    return Instance.from_json(read_json(path))


def point_json(p: Point) -> list[str]:
    return [rational_str(p.x), rational_str(p.y)]


def halfplane_json(h: HalfPlane) -> list[str]:
    return [rational_str(h.a), rational_str(h.b), rational_str(h.c)]
