"""Command-line entry point ``polychrome``.

Exit codes: 0 success, 1 verification failure, 2 bad input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import oracle
from .chromatic_halfplanes import color_halfplanes_3k2, color_halfplanes_4k3
from .chromatic_points import Coloring, color_points
from .construct import gen_lower_bound
from .epsnet import EpsNet, epsnet_halfplanes, epsnet_points
from .errors import BudgetExceeded, GeneralPositionError, InvariantError, PerturbationError
from .geom import HalfPlane, PointSet, in_general_position, perturb_to_general_position
from .ranges import Hyperedge
from .render import render_halfplanes, render_points
from .serialize import (
    Instance,
    dumps,
    halfplane_json,
    load_instance,
    parse_rational,
    point_json,
    rational_str,
    read_json,
    write_atomic,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _violation_json(v) -> dict:
    if v is None:
        return {"ok": True}
    out = {"ok": False, "kind": v.kind}
    if v.missing is not None:
        out["missing_color"] = v.missing
    w = v.witness
    if isinstance(w, Hyperedge):
        out["edge"] = list(w.indices)
        if isinstance(w.witness, HalfPlane):
            out["halfplane"] = halfplane_json(w.witness)
    else:
        out["point"] = point_json(w)
    return out


def _threshold(kind: str, k: int, method: str | None) -> int:
    if kind == "points":
        return 2 * k - 1
    return 3 * k - 2 if method == "3k2" else 4 * k - 3


def _check_coloring(inst: Instance, chi: Coloring, m: int) -> dict:
    if inst.kind == "points":
        v = oracle.verify_point_coloring(inst.points(), chi, m)
    else:
        v = oracle.verify_halfplane_coloring(inst.halfplanes(), chi, m)
    verdict = _violation_json(v)
    verdict["threshold"] = m
    return verdict


def _check_net(inst: Instance, net: EpsNet) -> dict:
    ground = inst.points() if inst.kind == "points" else inst.halfplanes()
    return _violation_json(oracle.verify_epsnet(ground, net))


def _points_for_coloring(inst: Instance, args) -> PointSet:
    P = inst.points()
    if in_general_position(P):
        return P
    if not args.perturb:
        raise GeneralPositionError("points are not in general position (use --perturb)")
    return perturb_to_general_position(P, seed=args.seed)


def _emit(args, result: dict):
    text = dumps(result)
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)


def _maybe_svg(args, inst: Instance, colors):
    if getattr(args, "svg", None):
        write_atomic(args.svg, _render(inst, colors))


def _render(inst: Instance, colors, halfplane: HalfPlane | None = None) -> str:
    if inst.kind == "halfplanes":
        return render_halfplanes(inst.halfplanes(), colors)
    pts = inst.points()
    groups = None
    curve = inst.metadata.get("curve_indices")
    if curve is not None:
        curve = [int(i) for i in curve]
        rest = sorted(set(range(len(pts))) - set(curve))
        groups = {"curve": curve, "bulk": rest}
    return render_points(pts, colors, groups, halfplane)


def cmd_color_points(args) -> int:
    inst = load_instance(args.instance)
    if inst.kind != "points":
        raise InputError("color-points needs a points instance")
    P = _points_for_coloring(inst, args)
    chi = color_points(P, args.k)
    verdict = _check_coloring(inst, chi, 2 * args.k - 1)
    result = {
        "command": "color-points",
        "k": args.k,
        "coloring": list(chi.colors),
        "empty_classes": list(chi.empty_classes),
        "perturbed": P != inst.points(),
        "seed": args.seed,
        "certificates": {"hitting_sets": [{"t": h.t, "indices": list(h.indices)}
                                          for h in chi.levels]},
        "verdict": verdict,
    }
    _emit(args, result)
    _maybe_svg(args, inst, chi.colors)
    return EXIT_OK if verdict["ok"] else EXIT_VIOLATION


def cmd_color_halfplanes(args) -> int:
    inst = load_instance(args.instance)
    if inst.kind != "halfplanes":
        raise InputError("color-halfplanes needs a halfplanes instance")
    H = inst.halfplanes()
    colorer = color_halfplanes_3k2 if args.method == "3k2" else color_halfplanes_4k3
    chi = colorer(H, args.k, seed=args.seed)
    certs = {}
    if chi.trace is not None:
        tr = chi.trace
        certs["peeling"] = {
            "layers": [list(layer) for layer in tr.layers],
            "residual": list(tr.residual),
            "witness": point_json(tr.witness) if tr.witness is not None else None,
        }
    verdict = _check_coloring(inst, chi, _threshold("halfplanes", args.k, args.method))
    result = {
        "command": "color-halfplanes",
        "k": args.k,
        "method": args.method,
        "seed": args.seed,
        "coloring": list(chi.colors),
        "certificates": certs,
        "verdict": verdict,
    }
    _emit(args, result)
    _maybe_svg(args, inst, chi.colors)
    return EXIT_OK if verdict["ok"] else EXIT_VIOLATION


def _net_json(net: EpsNet) -> dict:
    return {
        "indices": list(net.indices),
        "k": net.k,
        "dropped": net.dropped,
        "branch": net.branch,
        "size_bound": rational_str(net.size_bound) if net.size_bound is not None else None,
        "strict": net.strict,
        "bound_guaranteed": net.bound_guaranteed,
    }


def cmd_epsnet(args) -> int:
    inst = load_instance(args.instance)
    eps = parse_rational(args.eps)
    if inst.kind == "points":
        P = _points_for_coloring(inst, args)
        net = epsnet_points(P, eps)
    else:
        net = epsnet_halfplanes(inst.halfplanes(), eps, seed=args.seed)
    verdict = _check_net(inst, net)
    size_ok = net.size_bound is None or (
        len(net) < net.size_bound if net.strict else len(net) <= net.size_bound)
    verdict["size_ok"] = bool(size_ok) or not net.bound_guaranteed
    result = {"command": "epsnet", "eps": rational_str(eps), "seed": args.seed,
              "net": _net_json(net), "verdict": verdict}
    _emit(args, result)
    if args.svg:
        colors = [2 if i in set(net.indices) else 1 for i in range(len(inst.elements))]
        write_atomic(args.svg, _render(inst, colors))
    return EXIT_OK if verdict["ok"] and verdict["size_ok"] else EXIT_VIOLATION


def cmd_gen_lowerbound(args) -> int:
    lb = gen_lower_bound(args.n, args.k)
    inst = Instance("points", list(lb.points), {
        "generator": "lower-bound",
        "k": args.k,
        "curve_indices": list(lb.curve_indices),
        "separators": [halfplane_json(h) for h in lb.halfplanes],
    })
    _emit(args, inst.to_json())
    if args.svg:
        write_atomic(args.svg, _render(inst, None))
    return EXIT_OK


def _result_coloring(result: dict) -> Coloring:
    return Coloring(tuple(int(c) for c in result["coloring"]), int(result["k"]))


def cmd_verify(args) -> int:
    inst = load_instance(args.instance)
    out: dict = {"command": "verify"}
    ok = True
    if args.result:
        result = read_json(args.result)
        if "coloring" in result:
            chi = _result_coloring(result)
            m = _threshold(inst.kind, chi.k, result.get("method"))
            verdict = _check_coloring(inst, chi, m)
        elif "net" in result:
            n = result["net"]
            net = EpsNet(tuple(n["indices"]), parse_rational(result["eps"]))
            verdict = _check_net(inst, net)
        else:
            raise InputError("result holds neither a coloring nor a net")
        out["verdict"] = verdict
        recorded = result.get("verdict", {}).get("ok")
        out["matches_recorded"] = recorded is None or recorded == verdict["ok"]
        ok = verdict["ok"] and out["matches_recorded"]
    if args.verify == "exhaustive":
        if inst.kind != "points":
            raise InputError("exhaustive threshold search needs a points instance")
        k = args.k if args.k is not None else inst.metadata.get("k")
        if k is None:
            raise InputError("exhaustive search needs --k or a 'k' in the metadata")
        k = int(k)
        best = oracle.exhaustive_best_threshold(inst.points(), k, budget=args.budget)
        out["k"] = k
        out["best_threshold"] = best
        out["guaranteed_threshold"] = 2 * k - 1
        ok = ok and best <= 2 * k - 1
    _emit(args, out)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_render(args) -> int:
    inst = load_instance(args.instance)
    colors = None
    if args.result:
        result = read_json(args.result)
        if "coloring" in result:
            colors = [int(c) for c in result["coloring"]]
        elif "net" in result:
            chosen = set(result["net"]["indices"])
            colors = [2 if i in chosen else 1 for i in range(len(inst.elements))]
    h = None
    if args.halfplane:
        parts = args.halfplane.split(",")
        if len(parts) != 3:
            raise InputError("--halfplane expects a,b,c")
        h = HalfPlane(*(parse_rational(p) for p in parts))
    svg = _render(inst, colors, h)
    if args.output:
        write_atomic(args.output, svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polychrome",
                                description="Polychromatic colorings and epsilon-nets for half-planes.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, svg=True):
        sp.add_argument("-o", "--output", help="write JSON here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)
        if svg:
            sp.add_argument("--svg", help="also write an SVG drawing")

    sp = sub.add_parser("color-points", help="color points so big half-planes see every color")
    sp.add_argument("instance")
    sp.add_argument("-k", type=_positive_int, required=True)
    sp.add_argument("--perturb", action="store_true", help="perturb degenerate input first")
    common(sp)
    sp.set_defaults(func=cmd_color_points)

    sp = sub.add_parser("color-halfplanes", help="color half-planes so deep points see every color")
    sp.add_argument("instance")
    sp.add_argument("-k", type=_positive_int, required=True)
    sp.add_argument("--method", choices=["3k2", "4k3"], default="3k2")
    common(sp)
    sp.set_defaults(func=cmd_color_halfplanes)

    sp = sub.add_parser("epsnet", help="small epsilon-net from a coloring")
    sp.add_argument("instance")
    sp.add_argument("--eps", required=True, help="rational such as 1/10")
    sp.add_argument("--perturb", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_epsnet)

    sp = sub.add_parser("gen-lowerbound", help="instance needing 2k-1 points per half-plane")
    sp.add_argument("-n", type=_positive_int, required=True)
    sp.add_argument("-k", type=_positive_int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_gen_lowerbound)

    sp = sub.add_parser("verify", help="re-check a result, or search thresholds exhaustively")
    sp.add_argument("instance")
    sp.add_argument("result", nargs="?")
    sp.add_argument("--verify", choices=["fast", "exhaustive"], default="fast")
    sp.add_argument("-k", type=_positive_int)
    sp.add_argument("--budget", type=int, default=None,
                    help="max colorings to try (default from POLYCHROME_BUDGET)")
    common(sp, svg=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("render", help="draw an instance and optional result as SVG")
    sp.add_argument("instance")
    sp.add_argument("result", nargs="?")
    sp.add_argument("--halfplane", help="a,b,c of a half-plane a*x+b*y>=c to highlight")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, KeyError, TypeError, OSError, PerturbationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
