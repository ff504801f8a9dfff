"""Approximate minimum-weight vertex covers via crown kernelization.

The pipeline: solve the vertex cover LP in half-integral form with one
max-flow computation, peel off the forced and excluded vertices (the crown
kernel), hand the dense kernel to a maximum independent set oracle, and
lift the complement back to a cover of the original graph. An oracle that
is (1-eps)-accurate on the kernel yields a (1+eps)-approximate cover.
"""

from .approx import (
    ApproxResult,
    CheckResult,
    KernelStats,
    VerificationReport,
    approx_vc,
    exact_vc,
    matching_2approx_vc,
    verify_result,
)
from .errors import (
    CrownCoverError,
    CrownViolation,
    DuplicateVertexLine,
    EdgeCountMismatch,
    InconsistentCut,
    InvalidEdge,
    InvalidParameter,
    InvalidSet,
    InvalidShape,
    InvalidSwapSize,
    InvalidWeight,
    MissingHeader,
    NotACover,
    ParseError,
    TooLarge,
)
from .flow import FlowNetwork, build_bipartite_double
from .geometry import (
    Disk,
    Rect,
    ShapeSet,
    build_shape_set,
    disk,
    disks_intersect,
    generate_instance,
    intersection_graph,
    rect,
    rects_intersect,
    restrict_shapes,
)
from .graph import (
    VertexSet,
    WeightedGraph,
    build_graph,
    complement_set,
    induced_subgraph,
    is_independent_set,
    is_vertex_cover,
    random_gnp_graph,
    vertex_set,
)
from .halfint import HalfIntegralSolution, half_integral_solution, lp_value
from .ioformats import (
    parse_graph,
    parse_instance,
    parse_result,
    parse_shapes,
    write_graph,
    write_result,
    write_shapes,
)
from .kernelize import (
    CrownPartition,
    Kernel,
    kernel_density_check,
    kernelize,
    lift,
    partition,
)
from .oracles import (
    DEFAULT_BRUTE_CAP,
    ExactOracle,
    GreedyOracle,
    LocalSearchOracle,
    default_brute_cap,
    epsilon_to_swap_size,
    exact_is,
    greedy_is,
    local_search_is,
    make_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxResult",
    "CheckResult",
    "CrownCoverError",
    "CrownPartition",
    "CrownViolation",
    "DEFAULT_BRUTE_CAP",
    "Disk",
    "DuplicateVertexLine",
    "EdgeCountMismatch",
    "ExactOracle",
    "FlowNetwork",
    "GreedyOracle",
    "HalfIntegralSolution",
    "InconsistentCut",
    "InvalidEdge",
    "InvalidParameter",
    "InvalidSet",
    "InvalidShape",
    "InvalidSwapSize",
    "InvalidWeight",
    "Kernel",
    "KernelStats",
    "LocalSearchOracle",
    "MissingHeader",
    "NotACover",
    "ParseError",
    "Rect",
    "ShapeSet",
    "TooLarge",
    "VerificationReport",
    "VertexSet",
    "WeightedGraph",
    "approx_vc",
    "build_bipartite_double",
    "build_graph",
    "build_shape_set",
    "complement_set",
    "default_brute_cap",
    "disk",
    "disks_intersect",
    "epsilon_to_swap_size",
    "exact_is",
    "exact_vc",
    "generate_instance",
    "greedy_is",
    "half_integral_solution",
    "induced_subgraph",
    "intersection_graph",
    "is_independent_set",
    "is_vertex_cover",
    "kernel_density_check",
    "kernelize",
    "lift",
    "local_search_is",
    "lp_value",
    "make_oracle",
    "matching_2approx_vc",
    "parse_graph",
    "parse_instance",
    "parse_result",
    "parse_shapes",
    "partition",
    "random_gnp_graph",
    "rect",
    "rects_intersect",
    "restrict_shapes",
    "vertex_set",
    "verify_result",
    "write_graph",
    "write_result",
    "write_shapes",
]
