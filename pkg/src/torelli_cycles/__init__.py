"""Exact combinatorics of homologous multicurves and Torelli generators."""

from .cells import (
    CellPolytope, Polygon, canonical_triangulation, cell_dimension, cell_vertices, in_Cx,
    is_P_edge, pinch, traverse_edge, two_cell_boundary, weight_W)
from .dual_graph import (
    Edge, OrientedDualGraph, Vertex, Violation, WeightedCycle, contract_zero_edges, drain,
    drain_path, homology_class, is_recurrent, is_reduced, sink_subsurfaces, validate)
from .genus2 import (
    Mat2, Orbit, Slope, WeightPair, euclidean_descent, farey_tree_path, level2_member,
    mat2_apply, quotient_tree, slope_orbit, stabilizer_homology_check, twist_on_slopes)
from .homology import HomologyClass, SymplecticMatrix, intersection_form, transvection
from .twists import (
    Letter, RelativeClass, Tag, TwistWord, bounding_pair_action, is_torelli,
    lantern_matrix_check, parse_word, point_push, word_action, word_reduce)

__all__ = [
    "CellPolytope",
    "Polygon",
    "canonical_triangulation",
    "cell_dimension",
    "cell_vertices",
    "in_Cx",
    "is_P_edge",
    "pinch",
    "traverse_edge",
    "two_cell_boundary",
    "weight_W",
    "Edge",
    "OrientedDualGraph",
    "Vertex",
    "Violation",
    "WeightedCycle",
    "contract_zero_edges",
    "drain",
    "drain_path",
    "homology_class",
    "is_recurrent",
    "is_reduced",
    "sink_subsurfaces",
    "validate",
    "Mat2",
    "Orbit",
    "Slope",
    "WeightPair",
    "euclidean_descent",
    "farey_tree_path",
    "level2_member",
    "mat2_apply",
    "quotient_tree",
    "slope_orbit",
    "stabilizer_homology_check",
    "twist_on_slopes",
    "HomologyClass",
    "SymplecticMatrix",
    "intersection_form",
    "transvection",
    "Letter",
    "RelativeClass",
    "Tag",
    "TwistWord",
    "bounding_pair_action",
    "is_torelli",
    "lantern_matrix_check",
    "parse_word",
    "point_push",
    "word_action",
    "word_reduce",
]

__version__ = "0.1.0"
