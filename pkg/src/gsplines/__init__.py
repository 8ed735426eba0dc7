"""Generalized splines on edge-labeled graphs over Z, Z/mZ and Z[x]."""

from .automorphism import Automorphism
from .errors import (
    BudgetExceeded,
    CrtInconsistency,
    CrtInfeasible,
    DisconnectedPair,
    GraphError,
    InvalidAutomorphism,
    InvalidIsomorphism,
    MembershipUndecided,
    MoreThanTwoSides,
    NonPrincipalIntersection,
    NotACutVertex,
    NotInSum,
    ParseError,
    PastingEquationFails,
    RingMismatch,
    SplineError,
    UnsupportedRing,
)
from .graph import (
    EdgeLabeledGraph,
    enumerate_paths,
    pairwise_intersections,
    path_ideal,
    path_ideals,
    paths_intersection_ideal,
)
from .ideals import (
    Ideal,
    Membership,
    Verdict,
    crt_solve,
    decompose_into_sum,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_subset,
    ideal_sum,
)
from .iso import LabeledIso, transport_spline, verify_iso
from .rings import Ring, RingValue
from .spline import (
    Spline,
    build_cycle_spline,
    build_path_spline,
    build_spline,
    build_spline_crt,
    build_tree_spline,
    verify_spline,
)
from .udp import (
    PastingDecomposition,
    brute_force_udp,
    build_pasted_spline,
    check_pasting_equation,
    cut_decompositions,
    find_cut_decomposition,
    verify_non_udp_witness,
)

__version__ = "0.1.0"

__all__ = [
    "LabeledIso",
    "transport_spline",
    "verify_iso",
    "Ring",
    "RingValue",
    "Automorphism",
    "BudgetExceeded",
    "CrtInconsistency",
    "CrtInfeasible",
    "DisconnectedPair",
    "EdgeLabeledGraph",
    "GraphError",
    "Ideal",
    "InvalidAutomorphism",
    "InvalidIsomorphism",
    "Membership",
    "MembershipUndecided",
    "MoreThanTwoSides",
    "NonPrincipalIntersection",
    "NotACutVertex",
    "NotInSum",
    "ParseError",
    "PastingDecomposition",
    "PastingEquationFails",
    "RingMismatch",
    "Spline",
    "SplineError",
    "UnsupportedRing",
    "Verdict",
    "brute_force_udp",
    "build_cycle_spline",
    "build_pasted_spline",
    "build_path_spline",
    "build_spline",
    "build_spline_crt",
    "build_tree_spline",
    "check_pasting_equation",
    "crt_solve",
    "cut_decompositions",
    "decompose_into_sum",
    "enumerate_paths",
    "find_cut_decomposition",
    "ideal_contains",
    "ideal_equal",
    "ideal_intersect",
    "ideal_subset",
    "ideal_sum",
    "pairwise_intersections",
    "path_ideal",
    "path_ideals",
    "paths_intersection_ideal",
    "verify_non_udp_witness",
    "verify_spline",
]
