"""Exact tropical curves in R^n: tropical area, balancing, saturated curves,
path decompositions, the saturation surgery and vertex-count certificates."""
from .core import (
    LENIENT,
    STRICT,
    Edge,
    QWeight,
    TropicalCurve,
    ValidationReport,
    Violation,
    Weight,
    canonical_weight,
    check_balancing,
    curve_area,
    edge_area,
    restrict,
    subdivide_crossings,
    union,
    validate,
)
from .certify import Certificate, Check, castelnuovo_bound, certify, first_betti, weight_bounds
from .errors import *  # noqa: F401,F403
from .geometry import (
    BoundaryHit,
    boundary_crossings,
    density_prediction,
    face_degrees,
    global_balance,
    is_saturated,
    measure_density,
    saturated_area_check,
    slice_midpoints,
)
from .paths import (
    Path,
    PathFamily,
    cover_check,
    extract_paths,
    flow_lower_bound,
    path_family_for_face,
    union_weights,
    v0_bound_check,
    v0_set,
)
from .polytope import Region, box, collar_simplex, dilated_simplex, standard_simplex
from .saturation import Decomposition, SurgeryLog, choose_collar, decompose, saturate

__version__ = "0.1.0"
