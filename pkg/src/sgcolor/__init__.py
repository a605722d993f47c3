"""Proper edge coloring of signed graphs.

Core data model and switching theory live in :mod:`sgcolor.graphs`, the
incidence coloring model in :mod:`sgcolor.coloring`, the exact solver in
:mod:`sgcolor.solver`, constructive book-graph colorings in
:mod:`sgcolor.book`, and the small complete-graph classification in
:mod:`sgcolor.complete`.
"""

from .coloring import (
    CGraph,
    ColorSet,
    ColoringError,
    IncidenceColoring,
    c_graph,
    color_set,
    count_pm_a_colorings,
    edge_assignment,
    from_unsigned,
    is_proper,
    transport,
    violations,
)
from .graphs import (
    CycleWitness,
    GraphError,
    SignedGraph,
    automorphisms,
    build_graph,
    is_balanced,
    negative_cycle,
    switch,
    switching_equivalent,
    switching_isomorphic,
)
from .solver import SolveResult, chromatic_index, exists_coloring, signed_cycle_index

__all__ = [
    "CGraph",
    "ColorSet",
    "ColoringError",
    "CycleWitness",
    "GraphError",
    "IncidenceColoring",
    "SignedGraph",
    "SolveResult",
    "automorphisms",
    "build_graph",
    "c_graph",
    "chromatic_index",
    "color_set",
    "count_pm_a_colorings",
    "edge_assignment",
    "exists_coloring",
    "from_unsigned",
    "is_balanced",
    "is_proper",
    "negative_cycle",
    "signed_cycle_index",
    "switch",
    "switching_equivalent",
    "switching_isomorphic",
    "transport",
    "violations",
]

__version__ = "0.1.0"
