"""Sorting networks and staircase Young tableaux.

Exact hook-length combinatorics, uniform random sampling through the
corner-removal chain, the bijection with sorting networks, space-time pattern
occurrences, and geometric realizability with a non-realizability certificate.
"""

__version__ = "0.1.0"

from .tableaux import (
    Box,
    SkewFilling,
    StandardTableau,
    YoungDiagram,
    cohook,
    corner_probability_ratio,
    corner_removal_distribution,
    corners,
    dimension,
    enumerate_syt,
    hook_length,
    identically_ordered,
    subdiagram,
    subtableau,
)
from .edelman_greene import (
    SortingNetwork,
    eg_forward,
    eg_forward_states,
    eg_inverse,
    render_wiring_diagram,
    validate_network,
)
from .sampling import (
    SeededRng,
    ShrinkingChain,
    chain_log_probability,
    sample_batch,
    sample_network_batch,
    sample_random_network,
    sample_uniform_syt,
)
from .patterns import (
    Pattern,
    Window,
    count_disjoint_exact,
    count_disjoint_greedy,
    find_occurrences,
    is_pattern,
    occurs_at,
)
from .geometry import (
    GeneralPositionError,
    PointConfiguration,
    batch_realize,
    certify_nonrealizable,
    derive_nonrealizable_networks,
    goodman_pollack_pattern,
    gp_check,
    realize_network,
    rotate_sweep_start,
    sample_random_configuration,
    validate_general_position,
)
from .experiments import (
    DiagonalMotifLayout,
    ExperimentReport,
    canonical_motif,
    experiment_stationarity,
    experiment_theorem1,
    experiment_theorem2,
    experiment_theorem3,
)

__all__ = [
    "Box",
    "DiagonalMotifLayout",
    "ExperimentReport",
    "GeneralPositionError",
    "Pattern",
    "PointConfiguration",
    "SeededRng",
    "ShrinkingChain",
    "SkewFilling",
    "SortingNetwork",
    "StandardTableau",
    "Window",
    "YoungDiagram",
    "batch_realize",
    "canonical_motif",
    "certify_nonrealizable",
    "chain_log_probability",
    "cohook",
    "corner_probability_ratio",
    "corner_removal_distribution",
    "corners",
    "count_disjoint_exact",
    "count_disjoint_greedy",
    "derive_nonrealizable_networks",
    "dimension",
    "eg_forward",
    "eg_forward_states",
    "eg_inverse",
    "enumerate_syt",
    "experiment_stationarity",
    "experiment_theorem1",
    "experiment_theorem2",
    "experiment_theorem3",
    "find_occurrences",
    "goodman_pollack_pattern",
    "gp_check",
    "hook_length",
    "identically_ordered",
    "is_pattern",
    "occurs_at",
    "realize_network",
    "render_wiring_diagram",
    "rotate_sweep_start",
    "sample_batch",
    "sample_network_batch",
    "sample_random_configuration",
    "sample_random_network",
    "sample_uniform_syt",
    "subdiagram",
    "subtableau",
    "validate_general_position",
    "validate_network",
]
