"""Exact intersection and cup product matrices of complete toric surfaces.

Build a complete 2D fan from its counterclockwise ray list (or from a
convex lattice polygon via its normal fan), then compute the
intersection product matrix and the cellular cup product matrix of the
associated surface, entirely in exact rational arithmetic, and verify
that the two are mutually inverse.
"""

from .errors import (
    AmbiguousDocumentError,
    DegeneratePolygonError,
    DuplicateRayError,
    FanError,
    GenerationFailedError,
    NotCompleteError,
    NotCounterclockwiseError,
    NotNormalizedError,
    NotPrimitiveError,
    ParseError,
    ShapeError,
    SingularMatrixError,
    SmoothVertexRequiredError,
    TooFewRaysError,
    ToricSurfError,
    UnsupportedOrientationError,
    ZeroVectorError,
)
from .lattice import (
    LatticeVector,
    UnimodularMap,
    ccw_compare,
    det2,
    ext_gcd,
    primitivize,
    unimodular_to_e1,
)
from .matrix import RationalMatrix, mat_inverse, mat_mul
from .fan import (
    Fan,
    Polygon,
    WallRelation,
    has_smooth_vertex,
    is_smooth_cone,
    multiplicity,
    normal_fan,
    normalize,
    random_complete_fan,
    validate_fan,
    wall_relation,
)
from .chow import (
    ChowPresentation,
    IntersectionTable,
    LinearForm,
    express_dropped_divisors,
    intersection_matrix,
    intersection_number,
    intersection_table,
    presentation,
    reduce_quadratic,
)
from .cellular import (
    BasisChange,
    basis_change,
    cellular_divisor_coefficients,
    cup_matrix,
    cup_matrix_smooth,
    rescale_gcd,
    smoothing_rescale,
)
from .duality import (
    BatchSummary,
    DualityReport,
    TrialFailure,
    batch_verify,
    trial_seed,
    verify_duality,
)
from .documents import (
    Document,
    FanDocument,
    PolygonDocument,
    document_to_fan,
    document_to_json,
    fraction_str,
    linear_form_str,
    load_document,
    matrix_json,
    matrix_latex,
    matrix_strings,
    matrix_table,
    parse_document,
    parse_plain,
    rays_table,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousDocumentError",
    "BasisChange",
    "BatchSummary",
    "ChowPresentation",
    "DegeneratePolygonError",
    "Document",
    "DualityReport",
    "DuplicateRayError",
    "Fan",
    "FanDocument",
    "FanError",
    "GenerationFailedError",
    "IntersectionTable",
    "LatticeVector",
    "LinearForm",
    "NotCompleteError",
    "NotCounterclockwiseError",
    "NotNormalizedError",
    "NotPrimitiveError",
    "ParseError",
    "Polygon",
    "PolygonDocument",
    "RationalMatrix",
    "ShapeError",
    "SingularMatrixError",
    "SmoothVertexRequiredError",
    "TooFewRaysError",
    "ToricSurfError",
    "TrialFailure",
    "UnimodularMap",
    "UnsupportedOrientationError",
    "WallRelation",
    "ZeroVectorError",
    "basis_change",
    "batch_verify",
    "ccw_compare",
    "cellular_divisor_coefficients",
    "cup_matrix",
    "cup_matrix_smooth",
    "det2",
    "document_to_fan",
    "document_to_json",
    "express_dropped_divisors",
    "ext_gcd",
    "fraction_str",
    "has_smooth_vertex",
    "intersection_matrix",
    "intersection_number",
    "intersection_table",
    "is_smooth_cone",
    "linear_form_str",
    "load_document",
    "mat_inverse",
    "mat_mul",
    "matrix_json",
    "matrix_latex",
    "matrix_strings",
    "matrix_table",
    "multiplicity",
    "normal_fan",
    "normalize",
    "parse_document",
    "parse_plain",
    "presentation",
    "primitivize",
    "random_complete_fan",
    "rays_table",
    "reduce_quadratic",
    "smoothing_rescale",
    "trial_seed",
    "unimodular_to_e1",
    "validate_fan",
    "verify_duality",
    "wall_relation",
]
