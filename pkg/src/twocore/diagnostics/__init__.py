"""Executable versions of the structural arguments: forest coloring, cuts, flows, sprinkling."""

from .cuts import CutWitness, find_balanced_cut, witness
from .flow import edge_disjoint_paths
from .forest import (
    BLACK,
    GRAY,
    PURPLE,
    RED,
    ColoredForest,
    Orientation,
    Segment,
    StructureError,
    UpstreamReport,
    check_segments,
    color_forest,
    orient_forest,
    random_rooted_forest,
    upstream_counts,
    verify_lemma6,
)
from .sprinkling import (
    SeedCoreReport,
    SprinklingBound,
    seed_core_experiment,
    short_path_length,
    sprinkling_bound,
)

__all__ = [
    "BLACK", "GRAY", "PURPLE", "RED", "ColoredForest", "CutWitness",
    "Orientation", "Segment", "SeedCoreReport", "SprinklingBound", "StructureError", "UpstreamReport",
    "check_segments", "color_forest", "edge_disjoint_paths", "find_balanced_cut",
    "orient_forest", "random_rooted_forest", "seed_core_experiment", "short_path_length",
    "sprinkling_bound", "upstream_counts", "verify_lemma6", "witness",
]
