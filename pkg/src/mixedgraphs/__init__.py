"""Exact desk-scale toolkit for colored mixed graphs.

Colored mixed graphs carry m arc colors and n edge colors; their
homomorphisms must preserve direction and color exactly.  The package
computes chromatic numbers and homomorphisms exactly, builds the
extremal constructions that make the standard bounds tight, derives
acyclic colorings from layered homomorphisms, samples random complete
targets with strong adjacency properties, and evaluates every
closed-form bound in exact integer arithmetic.
"""

from .bounds import (
    BoundReport,
    DegreeBounds,
    acyclic_upper_from_arb,
    acyclic_upper_from_chi,
    arb_upper_from_chi,
    ceil_log,
    counting_inequality_check,
    degree_bounds,
    nr_upper,
    planar_upper,
)
from .constructions import (
    HkGraph,
    build_hk,
    build_special_gadget,
    hk_acyclic_coloring,
)
from .core import (
    ARC_IN,
    ARC_OUT,
    EDGE,
    ColorSignature,
    MixedGraph,
    NeighborhoodQuery,
    PropertySpec,
    RelationKind,
    arc_in,
    arc_out,
    common_neighborhood,
    degeneracy_ordering,
    edge,
    is_special_2path,
    require_rich_signature,
    special_pairs,
)
from .decomposition import (
    AcyclicResult,
    ExactUnavailableError,
    ForestDecomposition,
    ProductColoringResult,
    acyclic_chromatic_number,
    acyclic_from_homomorphisms,
    check_acyclic_coloring,
    check_forest_decomposition,
    digit_graphs,
    greedy_forests,
    nash_williams_density,
)
from .fileio import (
    FormatError,
    GraphDocument,
    dump,
    dumps,
    dumps_mapping,
    load,
    loads,
    loads_mapping,
)
from .solver import (
    BudgetExceededError,
    ChromaticResult,
    Homomorphism,
    Partition,
    check_homomorphism,
    check_partition,
    chromatic_number,
    find_homomorphism,
    quotient,
    special_clique,
)
from .targets import (
    CompleteMixedTarget,
    GreedyEmbedding,
    GreedyStep,
    PropertyViolatedError,
    QViolation,
    check_property_q,
    extend_regular,
    greedy_homomorphism,
    lemma_parameters,
    paley_tournament,
    sample_complete,
    search_q_target,
)

__version__ = "0.1.0"

__all__ = [
    "ARC_IN",
    "ARC_OUT",
    "EDGE",
    "AcyclicResult",
    "BoundReport",
    "BudgetExceededError",
    "ChromaticResult",
    "ColorSignature",
    "CompleteMixedTarget",
    "DegreeBounds",
    "ExactUnavailableError",
    "ForestDecomposition",
    "FormatError",
    "GraphDocument",
    "GreedyEmbedding",
    "GreedyStep",
    "HkGraph",
    "Homomorphism",
    "MixedGraph",
    "NeighborhoodQuery",
    "Partition",
    "ProductColoringResult",
    "PropertySpec",
    "PropertyViolatedError",
    "QViolation",
    "RelationKind",
    "acyclic_chromatic_number",
    "acyclic_from_homomorphisms",
    "acyclic_upper_from_arb",
    "acyclic_upper_from_chi",
    "arb_upper_from_chi",
    "arc_in",
    "arc_out",
    "build_hk",
    "build_special_gadget",
    "ceil_log",
    "check_acyclic_coloring",
    "check_forest_decomposition",
    "check_homomorphism",
    "check_partition",
    "check_property_q",
    "chromatic_number",
    "common_neighborhood",
    "counting_inequality_check",
    "degeneracy_ordering",
    "degree_bounds",
    "digit_graphs",
    "dump",
    "dumps",
    "dumps_mapping",
    "edge",
    "extend_regular",
    "find_homomorphism",
    "greedy_forests",
    "greedy_homomorphism",
    "hk_acyclic_coloring",
    "is_special_2path",
    "lemma_parameters",
    "load",
    "loads",
    "loads_mapping",
    "nash_williams_density",
    "nr_upper",
    "paley_tournament",
    "planar_upper",
    "quotient",
    "require_rich_signature",
    "sample_complete",
    "search_q_target",
    "special_clique",
    "special_pairs",
]
