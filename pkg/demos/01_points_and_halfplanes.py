"""Coloring points so that every big half-plane sees every color."""

import random

from polychrome import color_points, enumerate_hyperedges, minimal_hitting_set, verify_point_coloring
from polychrome.construct import random_general_position

rng = random.Random(7)
P = random_general_position(25, -100, 100, rng=rng)

# every subset a closed half-plane can cut out, empty and full set included
space = enumerate_hyperedges(P)
print(len(P), "points,", len(space.edges), "distinct half-plane cuts")

# hull vertices hitting every 5-point cut, each cut met once or twice
N = minimal_hitting_set(P, 5)
print("hitting set for 5-point cuts:", N.indices)

k = 4
chi = color_points(P, k)
print("colors:", chi.colors)
for level in chi.levels:
    print(f"  cuts of size {level.t} hit by {level.indices}")

# 2k - 1 points per half-plane suffice
print("threshold", 2 * k - 1, "->", verify_point_coloring(P, chi, 2 * k - 1) or "ok")
# one fewer is not guaranteed here
v = verify_point_coloring(P, chi, 2 * k - 2)
print("threshold", 2 * k - 2, "->", "ok" if v is None else f"edge {v.witness.indices} misses color {v.missing}")
