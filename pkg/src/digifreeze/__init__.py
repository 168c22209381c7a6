"""Freezing sets for digital images in Z^2: constructions from thick convex
disks and an exhaustive verifier for freezing-ness and minimality."""

__version__ = "0.1.0"

from .lattice import DigitalImage, adjacent, components, is_connected, neighborhood, projection, shortest_paths
from .digital_map import DigitalMap, close_neighbor_witness, compose_check, fix, is_continuous
from .curves import (
    Disk,
    boundary,
    classify_curve,
    disk_from_curve,
    disk_from_points,
    is_convex,
    is_thick,
    jordan_split,
    maximal_segments,
    vertex_angles,
)
from .construct import (
    DiskDecomposition,
    freezing_set_c1_disk,
    freezing_set_c1_union,
    freezing_set_c2_disk,
    freezing_set_c2_union,
    suggest_decomposition,
)
from .verify import (
    Budget,
    Verdict,
    close_neighbors,
    enumerate_continuous_maps,
    is_freezing_set,
    is_minimal_freezing_set,
    minimize,
    propagate,
    required_points,
)

__all__ = [
    "DigitalImage",
    "adjacent",
    "components",
    "is_connected",
    "neighborhood",
    "projection",
    "shortest_paths",
    "DigitalMap",
    "close_neighbor_witness",
    "compose_check",
    "fix",
    "is_continuous",
    "Disk",
    "boundary",
    "classify_curve",
    "disk_from_curve",
    "disk_from_points",
    "is_convex",
    "is_thick",
    "jordan_split",
    "maximal_segments",
    "vertex_angles",
    "DiskDecomposition",
    "freezing_set_c1_disk",
    "freezing_set_c1_union",
    "freezing_set_c2_disk",
    "freezing_set_c2_union",
    "suggest_decomposition",
    "Budget",
    "Verdict",
    "close_neighbors",
    "enumerate_continuous_maps",
    "is_freezing_set",
    "is_minimal_freezing_set",
    "minimize",
    "propagate",
    "required_points",
]
