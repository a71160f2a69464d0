"""Metric curvatures (Menger, Haantjes) of networks, with Forman and Ollivier baselines."""

from .baselines import (
    ProbabilityMeasure,
    TransportPlan,
    exact_w1,
    forman_augmented,
    forman_reduced,
    ollivier_ricci_edge,
)
from .cycles import (
    CellAdmission,
    Cycle,
    alternative_paths,
    triangles_at_edge,
    triangles_at_vertex,
    two_cells_at_edge,
)
from .errors import DomainError, InputError, InvariantError, NetcurvError, ParseError
from .generators import LatticeSpec, erdos_renyi, figure3_graph, generate_lattice
from .graph import Graph, PathMetricResult, load_graph, parse_edge_list, parse_json, shortest_path, to_json
from .haantjes import (
    FaceWeightScheme,
    HaantjesPathInput,
    SignedCurvature,
    directed_sign_cycle,
    directional_ricci,
    haantjes_path,
    haantjes_ricci_edge,
    haantjes_scalar_vertex,
    is_strong_local_metric,
    sectional_cell,
)
from .menger import (
    GeometryModel,
    TriangleGeom,
    directed_sign_triangle,
    menger_curvature,
    menger_ricci_edge,
    menger_scalar_vertex,
)
from .triangles import aspect_ratio, excess, global_triangle_stats, triangle_haantjes, triangle_stats

__version__ = "0.1.0"
