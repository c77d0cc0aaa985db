"""Bounds and estimates for the modified Gromov-Hausdorff distance between
the shortest-path metric spaces of unweighted undirected graphs.

The certified lower bound comes from threshold obstructions that no
mapping between the spaces can avoid; the upper bound from sampling
greedily built low-distortion mappings. estimate_mgh combines both into a
report with the midpoint estimate and quality metrics.
"""

__version__ = "0.1.0"

from .estimator import BoundsReport, baseline_lower, estimate_mgh
from .graph_io import (
    FORMATS,
    MODELS,
    DroppedEdgeWarning,
    GeneratorSpec,
    GraphFormatError,
    generate,
    read_graph,
    sample_spec,
    write_graph,
)
from .lower_bound import (
    build_difference_set,
    find_bounded_curvature,
    find_least_bounded_row,
    find_lower_bound,
    has_unmatchable_row,
    solve_feasible_assignment,
    solve_feasible_assignment_hist,
    verify_lower_bound,
)
from .metric import (
    Curvature,
    DisconnectedGraphWarning,
    DistanceMatrix,
    Graph,
    MetricError,
    diameter,
    metric_from_graph,
    validate,
)
from .upper_bound import decide_sample_size, find_upper_bound, sample_small_distortion

__all__ = [
    "__version__",
    "BoundsReport",
    "baseline_lower",
    "estimate_mgh",
    "FORMATS",
    "MODELS",
    "DroppedEdgeWarning",
    "GeneratorSpec",
    "GraphFormatError",
    "generate",
    "read_graph",
    "sample_spec",
    "write_graph",
    "build_difference_set",
    "find_bounded_curvature",
    "find_least_bounded_row",
    "find_lower_bound",
    "has_unmatchable_row",
    "solve_feasible_assignment",
    "solve_feasible_assignment_hist",
    "verify_lower_bound",
    "Curvature",
    "DisconnectedGraphWarning",
    "DistanceMatrix",
    "Graph",
    "MetricError",
    "diameter",
    "metric_from_graph",
    "validate",
    "decide_sample_size",
    "find_upper_bound",
    "sample_small_distortion",
]
