"""Exact planar Turán numbers of double stars, constructions and bound checks."""

from .bounds import Bounds, BoundReport, check_consistency, conjectured_value, theorem_bounds
from .canon import canonical_form
from .constructions import (
    ConstructionReport,
    disjoint_copies,
    icosahedron,
    k2_star,
    matched_double_wheel,
    s35_construction,
    seven_vertex_triangulation,
)
from .doublestar import (
    DoubleStarPattern,
    Witness,
    backbone_feasible,
    contains_double_star,
    contains_oracle,
    is_free,
)
from .graph import Graph, degree, edges_to_set, from_edge_list, triangles_on_edge
from .graph6 import decode as graph6_decode, encode as graph6_encode
from .lemmas import lemma_suite
from .planarity import is_planar, is_planar_oracle
from .search import (
    ExactResult,
    SearchConfig,
    enumerate_maximal_planar,
    exact_planar_turan,
    naive_exact,
)

__version__ = "0.1.0"
