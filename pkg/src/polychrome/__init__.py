"""Polychromatic colorings of points and half-planes, with exact verifiers."""

from .chromatic_halfplanes import (
    CoverCertificate,
    PeelingTrace,
    color_halfplanes_3k2,
    color_halfplanes_4k3,
    covers_plane,
    find_cover_subset,
    peel_covers,
    uncovered_point,
)
from .chromatic_points import Coloring, HittingSet, color_points, minimal_hitting_set, threshold_for
from .construct import LowerBoundInstance, certify_lower_bound, gen_lower_bound
from .epsnet import EpsNet, epsnet_generic, epsnet_halfplanes, epsnet_points
from .errors import BudgetExceeded, GeneralPositionError, InvariantError, PerturbationError
from .geom import (
    HalfPlane,
    Line,
    Point,
    PointSet,
    RadonPartition,
    convex_hull,
    halfplane_contains,
    in_convex_hull,
    in_general_position,
    orientation,
    perturb_to_general_position,
    polar_dual_line,
    polar_dual_point,
    radon_partition,
    segment_meets_line,
    side_of,
    standard_dual_line,
    standard_dual_point,
)
from .oracle import (
    Violation,
    exhaustive_best_threshold,
    pair_hyperedges,
    verify_epsnet,
    verify_halfplane_coloring,
    verify_point_coloring,
)
from .ranges import (
    Hyperedge,
    RangeSpace,
    depth,
    enumerate_hyperedges,
    halfplane_range_space,
    hyperedges_of_size,
)

__version__ = "0.1.0"
