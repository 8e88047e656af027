"""Spectral radius of the A_alpha matrix of graphs, extremal families, and checks."""

__version__ = "0.1.0"

from .canon import canonical_code, canonical_form, is_isomorphic
from .families import (
    Complete,
    Cycle,
    FamilySpec,
    PendantPathGraph,
    build,
    make_ank,
    make_basic,
    make_gnk,
    make_gpsq,
    make_smith,
    parse_family,
)
from .graph import (
    Graph,
    attach_path,
    degree,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_connected,
    new_graph,
)
from .spectral import (
    ALPHA_GRID,
    SpectralResult,
    build_alpha_matrix,
    eigen_residual,
    rayleigh_quotient,
    spectral_radius,
    spectral_radius_oracle,
)
from .structure import (
    block_decomposition,
    count_cut_vertices,
    matching_number,
    matching_number_brute,
    pendent_paths,
)

__all__ = [
    "ALPHA_GRID",
    "Complete",
    "Cycle",
    "FamilySpec",
    "Graph",
    "PendantPathGraph",
    "SpectralResult",
    "attach_path",
    "block_decomposition",
    "build",
    "build_alpha_matrix",
    "canonical_code",
    "canonical_form",
    "count_cut_vertices",
    "degree",
    "eigen_residual",
    "graph6_decode",
    "graph6_encode",
    "induced_subgraph",
    "is_connected",
    "is_isomorphic",
    "make_ank",
    "make_basic",
    "make_gnk",
    "make_gpsq",
    "make_smith",
    "matching_number",
    "matching_number_brute",
    "new_graph",
    "parse_family",
    "pendent_paths",
    "rayleigh_quotient",
    "spectral_radius",
    "spectral_radius_oracle",
]
