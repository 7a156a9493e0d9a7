"""Homotopy types of simplicial complexes arising from forests.

Build a complex from a graph, multidigraph or interval set, decompose it by
domination into a wedge of spheres, and check the answer against integral
homology.
"""
from .constructors import (
    ComplexKind,
    build,
    dominance_complex,
    edge_cover_complex,
    edge_dominance_complex,
    independence_complex,
    interval_order_complex,
    matching_complex,
    oriented_forest_complex,
    reduce_doscremo,
    reduce_scremo,
)
from .engine import (
    CONTRACTIBLE,
    Exhaustive,
    HomotopyType,
    analyze,
    dominates,
    family_strategy,
    find_domination_pair,
    format_trace,
    homotopy_type,
    suspend_type,
    wedge_type,
)
from .errors import (
    CertificationError,
    GrapesError,
    InputError,
    InternalConsistencyError,
    ResourceError,
)
from .graphs import (
    Graph,
    Interval,
    IntervalSet,
    Multidigraph,
    closed_neighborhood,
    contract_arc,
    forest_invariants,
    interval_overlap_graph,
    invariants,
    is_forest,
    leaves,
    line_dual,
    underlying_graph,
)
from .homology import reduced_homology, smith_normal_form, verify
from .simplicial import SimplicialComplex

__version__ = "0.1.0"

__all__ = [
    "CONTRACTIBLE",
    "CertificationError",
    "ComplexKind",
    "Exhaustive",
    "GrapesError",
    "Graph",
    "HomotopyType",
    "InputError",
    "InternalConsistencyError",
    "Interval",
    "IntervalSet",
    "Multidigraph",
    "ResourceError",
    "SimplicialComplex",
    "analyze",
    "build",
    "closed_neighborhood",
    "contract_arc",
    "dominance_complex",
    "dominates",
    "edge_cover_complex",
    "edge_dominance_complex",
    "family_strategy",
    "find_domination_pair",
    "forest_invariants",
    "format_trace",
    "homotopy_type",
    "independence_complex",
    "interval_order_complex",
    "interval_overlap_graph",
    "invariants",
    "is_forest",
    "leaves",
    "line_dual",
    "matching_complex",
    "oriented_forest_complex",
    "reduce_doscremo",
    "reduce_scremo",
    "reduced_homology",
    "smith_normal_form",
    "suspend_type",
    "underlying_graph",
    "verify",
    "wedge_type",
]
