"""Most reliable source-sink paths when edge failures share a hidden discrete state."""

from .approx import ApproxResult, approx_solve_basic, approx_solve_pruned, coarsen, prune_below
from .bounds import edge_g_cost, f_value, g_value, lower_bound_dp, sandwich_certificate
from .errors import (
    DecompositionError,
    InfeasibleFlowError,
    InputError,
    PrecisionError,
    ReliapathError,
    ResourceLimitError,
    StructureError,
)
from .exact_dp import IntegerCostNetwork, dominance_prune, dp_solve, quantize_exact
from .model import (
    IMPOSSIBLE,
    Edge,
    Network,
    Path,
    conditional_path_reliability,
    edge_log_reliability,
    path_reliability,
    topo_order,
    validate_network,
)
from .oracle import SolveResult, brute_force_best, enumerate_paths
from .rounding import (
    Flow,
    PathDistribution,
    decompose_flow,
    mix_paths,
    relaxed_objective,
    rounding_certificate,
    sample_path,
    validate_flow,
)

__version__ = "0.1.0"
