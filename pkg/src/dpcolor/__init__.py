"""DP-coloring of derangement correspondence assignments.

Main entry points: :func:`dp_color` colors an instance whose twisted edges
are bidirected and whose straight part is kernel-perfect, :func:`check_hypotheses`
reports whether an instance qualifies, and the :mod:`dpcolor.oracle` module
answers the same questions by exhaustive search.
"""

from .coloring import (
    Certificate,
    HypothesisReport,
    Mode,
    build_split_biorientation,
    check_hypotheses,
    dp_color,
    verify_coloring,
)
from .correspondence import (
    CorrespondenceInstance,
    EdgeClass,
    classify_edge,
    identity_matching,
    is_derangement_assignment,
    is_partial_derangement,
    restrict,
    straight_subgraph,
    twisted_subgraph,
    validate_instance,
)
from .errors import (
    DPColorError,
    HypothesisViolationError,
    MalformedInputError,
    OddCycleError,
    ResourceLimitError,
)
from .graph import Biorientation, Direction, Edge, Multigraph, strongly_connected_components
from .kernels import (
    brute_force_kernel,
    find_odd_directed_cycle,
    is_kernel,
    is_kernel_perfect,
    richardson_kernel,
)
from .oracle import SearchBudget, brute_force_color, count_colorings, is_f_choosable
from .signed import (
    SignedGraph,
    color_signed,
    negative_subgraph,
    positive_subgraph,
    reduce_to_correspondence,
    verify_signed_coloring,
)

__version__ = "0.1.0"
