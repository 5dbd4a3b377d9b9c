"""Why 2k - 2 is not enough: points on a parabola plus a crowd below it."""

from polychrome import color_points, exhaustive_best_threshold, gen_lower_bound, verify_point_coloring
from polychrome.construct import certify_lower_bound
from polychrome.render import render_points

inst = gen_lower_bound(10, 3)
print("curve points:", [str(inst.points[i]) for i in inst.curve_indices])
print("bulk points: ", [str(p) for i, p in enumerate(inst.points) if i not in inst.curve_indices])

# each separator holds all curve points but one, and nothing else
for i, h in zip(inst.curve_indices, inst.halfplanes):
    inside = [j for j, p in enumerate(inst.points) if h.contains(p)]
    print(f"  {h}: skips curve point {i}, holds {inside}")

# no 3-coloring makes every 4-point half-plane polychromatic
print("best threshold over all 3**10 colorings:", exhaustive_best_threshold(inst.points, 3))
print("certificate:", "ok" if certify_lower_bound(inst) is None else "FAILED")

chi = color_points(inst.points, 3)
print("our coloring at 5:", verify_point_coloring(inst.points, chi, 5) or "ok")

groups = {"curve": inst.curve_indices,
          "bulk": [i for i in range(len(inst.points)) if i not in inst.curve_indices]}
with open("lower_bound.svg", "w") as f:
    f.write(render_points(inst.points, chi.colors, groups, inst.halfplanes[2]))
print("wrote lower_bound.svg")
