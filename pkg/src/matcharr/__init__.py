"""Matching arrangements of graphs: construction, intersection lattice,
characteristic polynomial, region counts and brute-force cross-checks."""

from .arrangement import (
    Arrangement,
    Hyperplane,
    arrangements_identical,
    build_graphical_arrangement,
    build_matching_arrangement,
    normal_vector,
    reconstruct_line_graph,
)
from .errors import LimitExceeded
from .graph import (
    EdgeNumbering,
    Graph,
    chromatic_polynomial,
    connected_components,
    count_acyclic_orientations,
    is_isomorphic,
    line_graph,
    parse_graph,
)
from .lattice import Flat, FlatLattice, build_flat_lattice, characteristic_polynomial, closure, region_count
from .matching import max_weight_matchings, probe_theorem2, sign_vector, symdiff_decompose
from .paths import EdgeSequence, enumerate_even_cycles, enumerate_simple_paths
from .polynomial import IntPolynomial

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "EdgeNumbering",
    "EdgeSequence",
    "Flat",
    "FlatLattice",
    "Graph",
    "Hyperplane",
    "IntPolynomial",
    "LimitExceeded",
    "arrangements_identical",
    "build_flat_lattice",
    "build_graphical_arrangement",
    "build_matching_arrangement",
    "characteristic_polynomial",
    "chromatic_polynomial",
    "closure",
    "connected_components",
    "count_acyclic_orientations",
    "enumerate_even_cycles",
    "enumerate_simple_paths",
    "is_isomorphic",
    "line_graph",
    "max_weight_matchings",
    "normal_vector",
    "parse_graph",
    "probe_theorem2",
    "reconstruct_line_graph",
    "region_count",
    "sign_vector",
    "symdiff_decompose",
]
