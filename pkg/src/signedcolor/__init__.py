"""List coloring of signed plane graphs.

A signed graph carries a sign on every edge, and a coloring ``c`` is
proper when ``c(u) != sign(uv) * c(v)`` on every edge. The package builds
plane embeddings, augments them to near-triangulations, and colors them
from lists of size five (three on the outer cycle) with an iterative
boundary-extension solver. An exhaustive oracle checks every solver on
small inputs.
"""

from .embedding import (
    Face,
    PlaneGraph,
    boundary_cycle,
    fan_neighbors,
    find_chord,
    is_near_triangulation,
    split_along_chord,
    trace_faces,
    triangulate,
    validate_plane,
)
from .errors import (
    DanglingVertexError,
    DuplicateEdgeError,
    GraphError,
    InstanceFormatError,
    InvariantBreach,
    PreconditionError,
    RotationFormatError,
    SignedColorError,
    SignValueError,
    TooSmallError,
    UnknownFieldError,
)
from .graph_core import (
    Coloring,
    ListAssignment,
    SignedGraph,
    ViolationReport,
    as_lists,
    constant_lists,
    max_defect,
    validate_coloring,
    validate_list_coloring,
)
from .oracle import ChoosabilityResult, OracleResult, brute_force_l_coloring, check_choosability, iter_l_colorings, sandwich_check
from .signature import (
    BalanceWitness,
    SwitchSet,
    cycle_sign,
    harary_bipartition,
    is_antibalanced,
    is_balanced,
    switch,
    transport_coloring,
    transport_lists,
    walk_sign,
)
from .solver import (
    SYMMETRIC_PALETTE,
    ExtensionProblem,
    defective_four_list_color,
    degeneracy_greedy_color,
    degeneracy_order,
    extend_precoloring,
    five_list_color,
    outerplanar_three_list_color,
    symmetric_five_color,
    two_vertex_extension,
)

__version__ = "0.1.0"


def fixture_path(name: str):
    """Path of a bundled example instance, e.g. ``fixture_path("signed_k4.json")``."""
    from importlib.resources import files

    return files(__name__) / "fixtures" / name
