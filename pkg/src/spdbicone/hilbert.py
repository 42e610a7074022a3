"""Hilbert/Birkhoff geometry of the bicone.

The Hilbert distance between bicone elements J1, J2 is

    d_H(J1, J2) = log( max(l_max(J2^-1 J1), l_max((I-J2)^-1 (I-J1)))
                     / min(l_min(J2^-1 J1), l_min((I-J2)^-1 (I-J1))) )

This module provides three independent formulations of that distance
(extremal pencil eigenvalues, matrix spread of a block logarithm, and a
cross-ratio over cone exit times), the Birkhoff ratio machinery behind them,
the induced tangent-space (Finsler) norm, constant-speed geodesics, and the
simplex specialization obtained on diagonal unit-trace matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domain import SimplexPoint, SpdMatrix, VpmMatrix, trace_normalize
from .errors import (
    DegenerateDirectionError,
    DimensionError,
    DomainError,
)
from .linalg import (
    SymmetricMatrix,
    congruence_by_inv_sqrt,
    eigh,
    generalized_eigs,
)

#: Endpoint pairs closer than this in Hilbert distance are treated as a
#: degenerate (constant) geodesic.
DEGENERATE_DISTANCE = 1e-12

#: Directions shorter than this in Frobenius norm cannot define a chord.
DEGENERATE_DIRECTION = 1e-13


@dataclass(frozen=True)
class BirkhoffRatio:
    """Infimal scale M(v, w) = inf{t > 0 : v <= t w} in a cone order.

    ``value`` is 0 exactly when v lies in the negative closed cone, in which
    case ``log_value`` is the sentinel -inf; the two fields always satisfy
    value == exp(log_value).
    """

    value: float
    log_value: float

    def __post_init__(self):
        if self.value < 0:
            raise DomainError(f"ratio must be nonnegative, got {self.value}")
        expected = math.exp(self.log_value) if self.log_value > -math.inf else 0.0
        if not math.isclose(self.value, expected, rel_tol=1e-12, abs_tol=1e-300):
            raise DomainError("value and log_value are inconsistent")


@dataclass(frozen=True)
class ExitTimes:
    """Forward/backward travel times from an interior point to the boundary."""

    forward: float
    backward: float

    def __post_init__(self):
        if self.forward <= 0 or self.backward <= 0:
            raise DomainError("exit times of an interior point must be positive")


class GeodesicSpec:
    """Precomputed endpoint data for the constant-speed bicone geodesic.

    Caches the extremal pencil ratios M >= m of the endpoint pair; the
    geodesic length is log(M / m). Immutable, safe to share across callers.
    """

    __slots__ = ("endpoint_a", "endpoint_b", "M", "m", "length")

    def __init__(self, endpoint_a: VpmMatrix, endpoint_b: VpmMatrix):
        if endpoint_a.n != endpoint_b.n:
            raise DimensionError("geodesic endpoints differ in dimension")
        big, small = _extremal_ratios(endpoint_a, endpoint_b)
        object.__setattr__(self, "endpoint_a", endpoint_a)
        object.__setattr__(self, "endpoint_b", endpoint_b)
        object.__setattr__(self, "M", big)
        object.__setattr__(self, "m", small)
        object.__setattr__(self, "length", math.log(big / small))

    def __setattr__(self, name, value):
        raise AttributeError("GeodesicSpec is immutable")

    @property
    def degenerate(self) -> bool:
        return self.length < DEGENERATE_DISTANCE


def _complement_mat(x: VpmMatrix) -> SymmetricMatrix:
    return SymmetricMatrix(np.eye(x.n) - x.mat)


def _extremal_ratios(j1: VpmMatrix, j2: VpmMatrix) -> tuple[float, float]:
    """(M, m): extremal eigenvalues over the two pencils (J1, J2), (I-J1, I-J2).

    Always evaluated through the symmetric congruence, never the
    non-symmetric product J2^{-1} J1.
    """
    w1 = generalized_eigs(j1.sym, j2.sym).eigenvalues
    w2 = generalized_eigs(_complement_mat(j1), _complement_mat(j2)).eigenvalues
    return max(w1[-1], w2[-1]), min(w1[0], w2[0])


def hilbert_distance(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Hilbert distance on the bicone via extremal pencil eigenvalues."""
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    if np.array_equal(j1.mat, j2.mat):
        return 0.0
    big, small = _extremal_ratios(j1, j2)
    return math.log(big / small)


def hilbert_distance_spread(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Hilbert distance as the spread of a block matrix logarithm.

    Builds the 2n x 2n block diagonal of the congruences
    J2^{-1/2} J1 J2^{-1/2} and (I-J2)^{-1/2} (I-J1) (I-J2)^{-1/2} and returns
    lambda_max - lambda_min of its logarithm. Kept as an independent
    formulation for cross-validation against :func:`hilbert_distance`.
    """
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    if np.array_equal(j1.mat, j2.mat):
        return 0.0
    n = j1.n
    c1 = congruence_by_inv_sqrt(j1.sym, j2.sym).mat
    c2 = congruence_by_inv_sqrt(_complement_mat(j1), _complement_mat(j2)).mat
    block = np.zeros((2 * n, 2 * n))
    block[:n, :n] = c1
    block[n:, n:] = c2
    spec = eigh(SymmetricMatrix(block))
    w = spec.eigenvalues
    if w[0] <= 0:
        raise DomainError(f"block congruence not positive definite: {w[0]:.6e}")
    logs = np.log(w)
    return float(logs[-1] - logs[0])


def birkhoff_ratio_pd(v: SymmetricMatrix, w) -> BirkhoffRatio:
    """Birkhoff ratio on the SPD cone: M(v, w) = max(0, l_max(w^{-1/2} v w^{-1/2})).

    ``w`` must be positive definite; +inf never occurs on this cone, and the
    value 0 (with log sentinel -inf) occurs exactly when v is negative
    semidefinite.
    """
    w_sym = w.sym if isinstance(w, SpdMatrix) else SymmetricMatrix(w)
    c = congruence_by_inv_sqrt(v, w_sym)
    lam_max = float(np.linalg.eigvalsh(c.mat)[-1])
    value = max(0.0, lam_max)
    return BirkhoffRatio(value=value, log_value=math.log(value) if value > 0 else -math.inf)


def birkhoff_ratio_hat(x: VpmMatrix, y: VpmMatrix) -> BirkhoffRatio:
    """Birkhoff ratio of hat embeddings on the product cone.

    M(hat X, hat Y) = max(l_max(Y^-1 X), l_max((I-Y)^-1 (I-X))); summing the
    logs of the two orders reproduces the Hilbert distance.
    """
    if x.n != y.n:
        raise DimensionError("arguments differ in dimension")
    w1 = generalized_eigs(x.sym, y.sym).eigenvalues
    w2 = generalized_eigs(_complement_mat(x), _complement_mat(y)).eigenvalues
    value = max(w1[-1], w2[-1])
    return BirkhoffRatio(value=value, log_value=math.log(value))


def _congruence_extremes(x: VpmMatrix, v: SymmetricMatrix) -> tuple[float, float, float, float]:
    """Extremal eigenvalues of A = X^{-1/2} V X^{-1/2} and the complement block B."""
    a = congruence_by_inv_sqrt(v, x.sym)
    b = congruence_by_inv_sqrt(v, _complement_mat(x))
    wa = np.linalg.eigvalsh(a.mat)
    wb = np.linalg.eigvalsh(b.mat)
    return float(wa[0]), float(wa[-1]), float(wb[0]), float(wb[-1])


def exit_times(x: VpmMatrix, v: SymmetricMatrix) -> ExitTimes:
    """How far x + t v stays inside the bicone, forward and backward.

    The reciprocals are Birkhoff ratios of the hat pair on the product cone:

        1/t+ = max(max(0, -l_min(A)), max(0, l_max(B)))
        1/t- = max(max(0, l_max(A)), max(0, -l_min(B)))

    with A = X^{-1/2} V X^{-1/2} and B = (I-X)^{-1/2} V (I-X)^{-1/2}.
    A zero direction yields (+inf, +inf).
    """
    if x.n != v.n:
        raise DimensionError("base point and direction dimensions differ")
    a_min, a_max, b_min, b_max = _congruence_extremes(x, v)
    inv_fwd = max(max(0.0, -a_min), max(0.0, b_max))
    inv_bwd = max(max(0.0, a_max), max(0.0, -b_min))
    forward = math.inf if inv_fwd == 0.0 else 1.0 / inv_fwd
    backward = math.inf if inv_bwd == 0.0 else 1.0 / inv_bwd
    return ExitTimes(forward=forward, backward=backward)


def finsler_norm(x: VpmMatrix, v: SymmetricMatrix) -> float:
    """Tangent-space norm induced by the Hilbert distance: 1/t+ + 1/t-.

    Explicitly,

        max(max(0, -l_min(A)), max(0, l_max(B)))
      + max(max(0, l_max(A)), max(0, -l_min(B)))

    which is positively homogeneous and, by the pairing of the two max terms,
    invariant under v -> -v.
    """
    if x.n != v.n:
        raise DimensionError("base point and direction dimensions differ")
    a_min, a_max, b_min, b_max = _congruence_extremes(x, v)
    return max(max(0.0, -a_min), max(0.0, b_max)) + max(
        max(0.0, a_max), max(0.0, -b_min)
    )


def hilbert_distance_oracle(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Hilbert distance through the boundary cross-ratio along the chord.

    With exit times t+ (beyond j2) and t- (behind j1) of the line
    j1 + t (j2 - j1), the distance is log(((t- + 1) t+) / (t- (t+ - 1))).
    Independent of the eigenvalue-ratio formulation; used to cross-check it.
    """
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    step = j2.mat - j1.mat
    if np.linalg.norm(step) < DEGENERATE_DIRECTION:
        raise DegenerateDirectionError("endpoints coincide; chord undefined")
    t = exit_times(j1, SymmetricMatrix(step))
    tp, tm = t.forward, t.backward
    return math.log(((tm + 1.0) * tp) / (tm * (tp - 1.0)))


def hilbert_lower_bound(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Eigenvalue-sum lower bound on the Hilbert distance.

    log((l_max(J2^-1 J1) + l_max((I-J2)^-1 (I-J1)))
        / (l_min(J2^-1 J1) + l_min((I-J2)^-1 (I-J1)))) <= d_H(J1, J2).
    """
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    w1 = generalized_eigs(j1.sym, j2.sym).eigenvalues
    w2 = generalized_eigs(_complement_mat(j1), _complement_mat(j2)).eigenvalues
    return math.log((w1[-1] + w2[-1]) / (w1[0] + w2[0]))


def hilbert_pregeodesic(j1: VpmMatrix, j2: VpmMatrix, t: float) -> VpmMatrix:
    """Straight-segment pregeodesic (1 - t) J1 + t J2 for t in [0, 1]."""
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    if not 0.0 <= t <= 1.0:
        raise DomainError(f"pregeodesic parameter {t} outside [0, 1]")
    if t == 0.0:
        return j1
    if t == 1.0:
        return j2
    return VpmMatrix((1.0 - t) * j1.mat + t * j2.mat)


def _segment_parameter(s: float, big: float, small: float) -> float:
    """Position t on the segment reached at arc-length fraction s.

    Direct substitution of the arc-length reparameterization

        t(s) = (1 - (M/m)^{1-s}) / ((M/m)^{1-s} (1/M - 1) - (1/m - 1))

    which satisfies t(1) = 0 and t(0) = 1; callers flip s to anchor
    s = 0 at the first endpoint.
    """
    ratio = (big / small) ** (1.0 - s)
    return (1.0 - ratio) / (ratio * (1.0 / big - 1.0) - (1.0 / small - 1.0))


def hilbert_geodesic(spec: GeodesicSpec, s: float) -> VpmMatrix:
    """Constant-speed geodesic point: gamma(0) = endpoint_a, gamma(1) = endpoint_b.

    Degenerate endpoint pairs (Hilbert distance below 1e-12) return the first
    endpoint.
    """
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"geodesic parameter {s} outside [0, 1]")
    if spec.degenerate:
        return spec.endpoint_a
    t = _segment_parameter(1.0 - s, spec.M, spec.m)
    return hilbert_pregeodesic(spec.endpoint_a, spec.endpoint_b, min(max(t, 0.0), 1.0))


def simplex_distance(p: SimplexPoint, q: SimplexPoint) -> float:
    """Hilbert distance of the open simplex: log(max_i p_i/q_i / min_i p_i/q_i).

    Agrees with the bicone distance of the diagonal embeddings diag(p),
    diag(q).
    """
    if p.n != q.n:
        raise DimensionError("arguments differ in dimension")
    ratios = p.probs / q.probs
    return math.log(ratios.max() / ratios.min())


def simplex_geodesic(p: SimplexPoint, q: SimplexPoint, s: float) -> SimplexPoint:
    """Constant-speed Hilbert geodesic on the simplex; gamma(0) = p, gamma(1) = q."""
    if p.n != q.n:
        raise DimensionError("arguments differ in dimension")
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"geodesic parameter {s} outside [0, 1]")
    ratios = p.probs / q.probs
    big, small = float(ratios.max()), float(ratios.min())
    if math.log(big / small) < DEGENERATE_DISTANCE:
        return p
    if s == 0.0:
        return p
    if s == 1.0:
        return q
    t = _segment_parameter(1.0 - s, big, small)
    return SimplexPoint((1.0 - t) * p.probs + t * q.probs)


def projective_distance(p1: SpdMatrix, p2: SpdMatrix) -> float:
    """Scale-invariant distance of SPD matrices: d_H of the unit-trace rescalings."""
    if p1.n != p2.n:
        raise DimensionError("arguments differ in dimension")
    if p1.n < 2:
        raise DimensionError("projective distance degenerates for n = 1")
    return hilbert_distance(trace_normalize(p1), trace_normalize(p2))
