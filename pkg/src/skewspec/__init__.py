"""Skew spectra of oriented graphs.

Core objects: :class:`Graph`, :class:`OrientedGraph`, and
:class:`Spectrum`.  The package computes skew spectra and energies,
decides switching equivalence with explicit witnesses, tests uniform
cycle orientation against the spectral characterization, builds the
bipartite-aware oriented Cartesian product with its closed-form
spectrum, and generates certified maximum-skew-energy families.
"""

from .catalog import complete, complete_bipartite, cycle, hypercube, path
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DuplicateEdgeError,
    GraphMismatchError,
    InvalidBipartitionError,
    NotACycleError,
    NotAntisymmetricError,
    NotBipartiteError,
    NotRegularError,
    NotSymmetricError,
    OddCycleError,
    ParseError,
    SelfLoopError,
    SkewspecError,
    VertexOutOfRangeError,
)
from .families import (
    BASE_NAMES,
    ORDER_CAP,
    FamilyResult,
    FamilySpec,
    generate_family,
    seed_orientation,
)
from .graph import (
    Bipartition,
    Graph,
    OrientedGraph,
    X,
    Y,
    adjacency_matrix,
    bipartition,
    build_graph,
    elementary_orientation,
    from_arcs,
    orient,
    skew_adjacency,
)
from .io import parse_graph, render_report, serialize_graph
from .products import (
    ProductVertexOrder,
    cartesian_product,
    oriented_product,
    predicted_product_spectrum,
    product_matrix_identity,
    product_skew_kronecker,
    product_vertex_order,
    verify_product_spectrum,
)
from .search import SearchResult, find_max_energy_orientation
from .spectra import (
    EnergyReport,
    Spectrum,
    adjacency_spectrum,
    graph_energy,
    is_gram_scalar,
    skew_energy,
    skew_gram,
    skew_spectrum,
    spectra_equal,
    spectrum_energy,
    symmetric_eigenvalues,
)
from .switching import (
    DEFAULT_CYCLE_CAP,
    CycleWalk,
    NotEquivalent,
    SwitchWitness,
    all_chordless_uniform,
    chordless_cycles,
    equivalent_to_elementary,
    is_uniformly_oriented,
    matches_adjacency_spectrum,
    switch,
    switching_equivalent,
)

__version__ = "0.1.0"

__all__ = [
    "BASE_NAMES",
    "Bipartition",
    "BudgetExceededError",
    "CapExceededError",
    "CycleWalk",
    "DEFAULT_CYCLE_CAP",
    "DuplicateEdgeError",
    "EnergyReport",
    "FamilyResult",
    "FamilySpec",
    "Graph",
    "GraphMismatchError",
    "InvalidBipartitionError",
    "NotACycleError",
    "NotAntisymmetricError",
    "NotBipartiteError",
    "NotEquivalent",
    "NotRegularError",
    "NotSymmetricError",
    "ORDER_CAP",
    "OddCycleError",
    "OrientedGraph",
    "ParseError",
    "ProductVertexOrder",
    "SearchResult",
    "SelfLoopError",
    "SkewspecError",
    "Spectrum",
    "SwitchWitness",
    "VertexOutOfRangeError",
    "X",
    "Y",
    "adjacency_matrix",
    "adjacency_spectrum",
    "all_chordless_uniform",
    "bipartition",
    "build_graph",
    "cartesian_product",
    "chordless_cycles",
    "complete",
    "complete_bipartite",
    "cycle",
    "elementary_orientation",
    "equivalent_to_elementary",
    "find_max_energy_orientation",
    "from_arcs",
    "generate_family",
    "graph_energy",
    "hypercube",
    "is_gram_scalar",
    "is_uniformly_oriented",
    "matches_adjacency_spectrum",
    "orient",
    "oriented_product",
    "parse_graph",
    "path",
    "predicted_product_spectrum",
    "product_matrix_identity",
    "product_skew_kronecker",
    "product_vertex_order",
    "render_report",
    "seed_orientation",
    "serialize_graph",
    "skew_adjacency",
    "skew_energy",
    "skew_gram",
    "skew_spectrum",
    "spectra_equal",
    "spectrum_energy",
    "switch",
    "switching_equivalent",
    "symmetric_eigenvalues",
    "verify_product_spectrum",
]
