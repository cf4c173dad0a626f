"""Star-forest decompositions of complete (convex) geometric graphs.

Constructions, exact verifiers, the supported-edge recoloring engine with
its spanning-star descent, and exhaustive search oracles for small n.
"""

from .constructions import (
    Partition4,
    four_cluster_forests,
    k_star_forest_cover,
    star_decomposition,
    two_star_forest_cover,
)
from .forest import (
    Covering,
    Star,
    StarForest,
    ValidationReport,
    center_graph,
    center_graph_components,
    component_count,
    project_to_decomposition,
    verify_covering,
    verify_decomposition,
    verify_plane,
    verify_star_forest,
)
from .geometry import (
    ClusteredPointSet,
    Orientation,
    Point,
    PointSet,
    convex_crossing,
    gen_convex,
    gen_four_cluster,
    orientation,
    segments_cross,
)
from .recolor import (
    DescentCertificate,
    EdgeRep,
    extract_spanning_star,
    is_supported,
    make_all_supported_up_to,
    make_supported,
    move_star,
    supported_reps,
    theorem1_descent,
)
from .search import (
    SearchResult,
    decide_k_star_forest_decomposition,
    decide_plane_decomposition,
    min_k_star_forests,
    min_plane_star_forests,
)

__version__ = "0.1.0"
