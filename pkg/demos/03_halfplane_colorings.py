"""Coloring half-planes so deep points are covered by every color."""

import random

from polychrome import HalfPlane, color_halfplanes_3k2, color_halfplanes_4k3, covers_plane, verify_halfplane_coloring
from polychrome.construct import random_halfplanes

rng = random.Random(3)

# three half-planes that cover the plane, and no two of them do
tripod = [HalfPlane(1, 0, -1), HalfPlane(-1, 1, -1), HalfPlane(-1, -1, -1)]
print("tripod covers:", covers_plane(tripod).cover_subset)
print("two of them leave", covers_plane(tripod[:2]).witness_point, "uncovered")

H = tripod + random_halfplanes(17, rng=rng)
k = 3

chi = color_halfplanes_3k2(H, k)
tr = chi.trace
print("peeled layers:", tr.layers)
print("residual:", tr.residual, "uncovered witness:", tr.witness)
print("3k-2 =", 3 * k - 2, "->", verify_halfplane_coloring(H, chi, 3 * k - 2) or "ok")

# splitting into upper and lower half-planes costs more colors of depth
chi4 = color_halfplanes_4k3(H, k)
print("4k-3 =", 4 * k - 3, "->", verify_halfplane_coloring(H, chi4, 4 * k - 3) or "ok")
