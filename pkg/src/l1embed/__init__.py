"""Exact l1-embeddability of finite metric spaces.

Decides the least dimension ``m`` with an isometric embedding into
``(R^m, l1)`` by three independent routes (Gromov-Hausdorff distances to
simplices, graph colorings, nesting-hypergraph coloring) and returns explicit
rational coordinates. All arithmetic is exact.
"""
from .chromatic import (
    ColoringResult,
    chromatic_number,
    chromatic_via_gh,
    clique_cover_number,
    clique_cover_via_gh,
    is_proper_coloring,
)
from .cuts import (
    Cut,
    CutDecomposition,
    all_cuts,
    cut_metric,
    decompose,
    evaluate_decomposition,
    feasibility_lp,
    is_in_cut_cone,
)
from .estimator import L1Embedding
from .exceptions import (
    BudgetExceeded,
    DisagreementDetected,
    InternalConsistencyError,
    L1EmbedError,
    MetricError,
    NotInCutCone,
    ParameterError,
)
from .gh import (
    Correspondence,
    GHResult,
    borsuk_partition_exists,
    distortion,
    gh_distance_exact,
    gh_simplex_closed_form,
    verify_borsuk_theorem,
)
from .l1dim import (
    Budgets,
    L1Report,
    cross_validate,
    embed_from_coloring,
    embeddable_in_dim,
    l1_dimension_via_coloring,
    l1_dimension_via_gh,
)
from .metric import (
    FiniteMetricSpace,
    FinitePseudometricSpace,
    SimpleGraph,
    TwoDistanceParams,
    complement,
    diam,
    simplex,
    two_distance_from_graph,
    validate_metric,
)
from .nesting import (
    NestingHypergraph,
    build_nesting_hypergraph,
    enumerate_graph_family,
    hypergraph_chromatic_number,
    hypergraph_colorable,
)

__version__ = "0.1.0"
