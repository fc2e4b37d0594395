"""Local estimation of the 2-core and its giant component in percolated graphs."""

from .cores import CoreResult, c2_ell_set, coreness, er_branching_oracle, two_core
from .estimator import Ball, EstimateReport, classify, estimate, explore_ball, sample_size, sweep
from .generators import (
    GeneratorSpec,
    configuration_model,
    disjoint_regular,
    erdos_renyi,
    household_triangle,
    random_regular,
)
from .graph import (
    ComponentLabeling,
    Graph,
    bfs_distances,
    connected_components,
    disjoint_union,
    dump_edge_list,
    induced_subgraph,
    load_edge_list,
)
from .percolation import PercolationCoupling, draw_coupling, percolate_at, sprinkle

__version__ = "0.1.0"
