"""Dissimilarity structures on the SPD cone and the open bicone 0 < X < I.

Four geometries over positive-definite matrices: the affine-invariant
Riemannian distance, the Hilbert/Birkhoff projective distance of the bicone
with its tangent Finsler norm, and the bi-log-det barrier Hessian structure
with its Bregman divergences; plus the maps connecting the cone and the
bicone, closed-form constant-speed geodesics, and an executable suite for
the tight inequalities relating all of them.
"""

from .airm import (
    airm_distance,
    airm_geodesic,
    airm_metric,
    airm_norm,
    airm_pushed,
    airm_restricted,
)
from .barrier import (
    BarrierEval,
    SelfConcordanceReport,
    barrier_eval,
    barrier_metric,
    barrier_norm,
    barrier_path_length,
    bilogdet,
    bilogdet_gradient,
    bregman_bilogdet,
    bregman_complement,
    bregman_logdet,
    self_concordance_check,
    symmetrized_bregman,
)
from .bounds import (
    BoundsReport,
    VerifyConfig,
    bounds_report,
    check_lower_airm_restricted,
    check_norm_bounds,
    check_upper_airm_pushed,
    lemma_checks,
    no_lower_bound_sequence,
    no_upper_bound_sequence,
)
from .domain import (
    BiconeCoords,
    HatPair,
    SimplexPoint,
    SpdMatrix,
    VpmMatrix,
    bicone_coords,
    complement,
    embed_simplex,
    hat,
    james_differential,
    james_forward,
    james_inverse,
    scaled_james,
    trace_normalize,
)
from .errors import (
    DegenerateDirectionError,
    DegenerateGeodesicError,
    DimensionError,
    DomainError,
    GeometryError,
    IllConditionedError,
    NoConvergenceError,
    NonFiniteError,
    ParseError,
)
from .hilbert import (
    BirkhoffRatio,
    ExitTimes,
    GeodesicSpec,
    birkhoff_ratio_hat,
    birkhoff_ratio_pd,
    exit_times,
    finsler_norm,
    hilbert_distance,
    hilbert_distance_oracle,
    hilbert_distance_spread,
    hilbert_geodesic,
    hilbert_lower_bound,
    hilbert_pregeodesic,
    projective_distance,
    simplex_distance,
    simplex_geodesic,
)
from .linalg import (
    EIG_TOL,
    Spectrum,
    SymmetricMatrix,
    eigh,
    frobenius,
    generalized_eigs,
    mat_fn,
    operator_norm,
    spread,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
