from __future__ import annotations

import json
import random
import subprocess
import sys
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from polychrome.cli import main
from polychrome.geom import HalfPlane, Point
from polychrome.serialize import Instance, dumps, parse_rational

from helpers import random_family, random_gp_points, random_non_covering

TRIPOD = [HalfPlane(1, 0, -1), HalfPlane(-1, 1, -1), HalfPlane(-1, -1, -1)]


def _write(path, inst: Instance):
    path.write_text(dumps(inst.to_json()))
    return str(path)


def _call(*argv) -> int:
    return main([str(a) for a in argv])


def _run(argv, capsys):
    code = _call(*argv)
    out = capsys.readouterr().out
    return code, out


def test_color_points_thirty(tmp_path, capsys):
    f = _write(tmp_path / "p.json", Instance("points", list(random_gp_points(random.Random(1), 30))))
    code, out = _run(["color-points", f, "-k", 3], capsys)
    res = json.loads(out)
    assert code == 0 and res["verdict"] == {"ok": True, "threshold": 5}
    assert len(res["certificates"]["hitting_sets"]) == 2


def test_color_points_k1(tmp_path, capsys):
    f = _write(tmp_path / "p.json", Instance("points", list(random_gp_points(random.Random(2), 8))))
    code, out = _run(["color-points", f, "-k", 1], capsys)
    assert json.loads(out)["coloring"] == [1] * 8


def test_collinear_needs_perturb(tmp_path, capsys):
    f = _write(tmp_path / "c.json", Instance("points", [Point(i, 2 * i) for i in range(5)]))
    code, _ = _run(["color-points", f, "-k", 2], capsys)
    assert code == 2
    code, out = _run(["color-points", f, "-k", 2, "--perturb", "--seed", 4], capsys)
    res = json.loads(out)
    assert code == 0 and res["perturbed"] and res["verdict"]["ok"]


def test_color_halfplanes_cover_trace(tmp_path, capsys):
    H = TRIPOD + random_non_covering(random.Random(3), 6)
    f = _write(tmp_path / "h.json", Instance("halfplanes", H))
    code, out = _run(["color-halfplanes", f, "-k", 2, "--method", "3k2"], capsys)
    res = json.loads(out)
    assert code == 0 and res["certificates"]["peeling"]["layers"]
    assert res["verdict"]["threshold"] == 4


def test_color_halfplanes_4k3(tmp_path, capsys):
    f = _write(tmp_path / "h.json", Instance("halfplanes", random_family(random.Random(4), 15)))
    code, out = _run(["color-halfplanes", f, "-k", 2, "--method", "4k3"], capsys)
    assert code == 0 and json.loads(out)["verdict"] == {"ok": True, "threshold": 5}
    code, out = _run(["color-halfplanes", f, "-k", 1], capsys)
    assert json.loads(out)["coloring"] == [1] * 15


def test_lowerbound_then_exhaustive_verify(tmp_path, capsys):
    out_file = tmp_path / "lb.json"
    assert _call("gen-lowerbound", "-n", "10", "-k", "3", "-o", str(out_file)) == 0
    code, out = _run(["verify", out_file, "--verify", "exhaustive"], capsys)
    assert code == 0 and json.loads(out)["best_threshold"] == 5


def test_budget_exit_code(tmp_path, capsys):
    out_file = tmp_path / "lb.json"
    _call("gen-lowerbound", "-n", "10", "-k", "3", "-o", str(out_file))
    code, _ = _run(["verify", out_file, "--verify", "exhaustive", "--budget", "100"], capsys)
    assert code == 3


def test_epsnet_hundred(tmp_path, capsys):
    f = _write(tmp_path / "p.json", Instance("points", list(random_gp_points(random.Random(5), 100))))
    code, out = _run(["epsnet", f, "--eps", "1/10"], capsys)
    res = json.loads(out)
    assert code == 0 and len(res["net"]["indices"]) <= 19 and res["verdict"]["ok"]


def test_verify_result_file_and_tampering(tmp_path, capsys):
    f = _write(tmp_path / "p.json", Instance("points", list(random_gp_points(random.Random(6), 20))))
    r = tmp_path / "r.json"
    assert _call("color-points", f, "-k", 3, "-o", str(r)) == 0
    code, out = _run(["verify", f, r], capsys)
    assert code == 0 and json.loads(out)["matches_recorded"]
    res = json.loads(r.read_text())
    res["coloring"] = [1] * 20
    r.write_text(json.dumps(res))
    code, out = _run(["verify", f, r], capsys)
    assert code == 1 and not json.loads(out)["verdict"]["ok"]


def test_render_lowerbound(tmp_path, capsys):
    lb = tmp_path / "lb.json"
    _call("gen-lowerbound", "-n", "10", "-k", "3", "-o", str(lb))
    svg = tmp_path / "fig.svg"
    assert _call("render", str(lb), "--halfplane", "0,1,1/2", "-o", str(svg)) == 0
    root = ET.parse(svg).getroot()
    groups = {g.get("id"): g for g in root.iter("{http://www.w3.org/2000/svg}g")}
    assert set(groups) == {"curve", "bulk"}
    assert len(list(groups["curve"])) == 5 and len(list(groups["bulk"])) == 5


def test_svg_flag_for_halfplanes(tmp_path):
    f = _write(tmp_path / "h.json", Instance("halfplanes", random_family(random.Random(7), 8)))
    svg = tmp_path / "h.svg"
    assert _call("color-halfplanes", f, "-k", 2, "-o", str(tmp_path / "r.json"), "--svg", str(svg)) == 0
    ET.parse(svg)


def test_bad_input_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "points", "elements": [[0.5, 1]]}')
    assert _call("color-points", str(bad), "-k", 2) == 2
    bad.write_text("not json")
    assert _call("color-points", str(bad), "-k", 2) == 2
    assert _call("color-points", str(tmp_path / "missing.json"), "-k", 2) == 2


def test_deterministic_output(tmp_path):
    f = _write(tmp_path / "h.json", Instance("halfplanes", random_family(random.Random(8), 12)))
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        _call("color-halfplanes", f, "-k", 3, "--seed", "2", "-o", str(out))
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "polychrome", "gen-lowerbound", "-n", "5", "-k", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["kind"] == "points"


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)


@settings(max_examples=50)
@given(st.lists(st.tuples(rationals, rationals), max_size=8, unique=True))
def test_points_round_trip(coords):
    inst = Instance("points", [Point(x, y) for x, y in coords], {"note": "x"})
    again = Instance.from_json(json.loads(dumps(inst.to_json())))
    assert again == inst


@settings(max_examples=50)
@given(st.lists(st.tuples(rationals, rationals, rationals).filter(lambda t: t[0] or t[1]), max_size=8))
def test_halfplanes_round_trip(triples):
    inst = Instance("halfplanes", [HalfPlane(*t) for t in triples])
    assert Instance.from_json(json.loads(dumps(inst.to_json()))) == inst


def test_parse_rational():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational(7) == 7
    for bad in (0.5, True, "x", "1/0"):
        with pytest.raises(ValueError):
            parse_rational(bad)
