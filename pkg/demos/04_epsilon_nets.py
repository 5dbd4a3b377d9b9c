"""Small epsilon-nets read off a coloring's smallest color class."""

import random
from fractions import Fraction

from polychrome import epsnet_halfplanes, epsnet_points, verify_epsnet
from polychrome.construct import random_general_position
from polychrome.geom import HalfPlane

rng = random.Random(11)
P = random_general_position(100, rng=rng)

for eps in (Fraction(1, 4), Fraction(1, 6), Fraction(1, 10)):
    net = epsnet_points(P, eps)
    print(f"eps={eps}: k={net.k}, |net|={len(net)} (< {2 / eps}), valid={verify_epsnet(P, net) is None}")

# half-planes all missing the origin: dualize and reuse the point nets
H = []
while len(H) < 40:
    a, b = rng.randint(-6, 6), rng.randint(-6, 6)
    if (a, b) != (0, 0):
        h = HalfPlane(a, b, rng.randint(1, 12))
        if h.boundary not in {g.boundary for g in H}:
            H.append(h)
net = epsnet_halfplanes(H, Fraction(1, 4))
print("dual net:", net.branch, len(net), "half-planes, valid:", verify_epsnet(H, net) is None)

# add a covering triple and the net collapses to it
H2 = H + [HalfPlane(1, 0, -1), HalfPlane(-1, 1, -1), HalfPlane(-1, -1, -1)]
net = epsnet_halfplanes(H2, Fraction(1, 4))
print("covering family:", net.branch, net.indices)
