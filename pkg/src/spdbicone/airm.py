"""Affine-invariant Riemannian metric (AIRM) on the SPD cone.

Distance sqrt(sum log^2 l_i(X2^-1 X1)), the closed-form geodesic, the trace
metric tr(X^-1 S1 X^-1 S2), and the two bicone variants: the plain
restriction to 0 < X < I and the pullback through the bicone map
X -> X (I - X)^{-1}.
"""

from __future__ import annotations

import warnings

import numpy as np

from .domain import SpdMatrix, VpmMatrix, james_inverse
from .errors import DimensionError, IllConditionedError
from .linalg import SymmetricMatrix, congruence_by_inv_sqrt, eigh, generalized_eigs, mat_fn

#: Inputs with spectral condition number above this raise IllConditionedError
#: instead of returning digits that are mostly noise.
CONDITION_LIMIT = 1e12


def _check_conditioning(*mats: SpdMatrix) -> None:
    for p in mats:
        w = np.linalg.eigvalsh(p.mat)
        kappa = w[-1] / w[0]
        if kappa > CONDITION_LIMIT:
            raise IllConditionedError(
                f"condition number {kappa:.3e} exceeds {CONDITION_LIMIT:.0e}"
            )


def airm_distance(x1: SpdMatrix, x2: SpdMatrix) -> float:
    """AIRM distance: l2 norm of the log-spectrum of the pencil (x1, x2).

    Invariant under congruence x -> A x A^T and under joint inversion.
    Computed through the symmetric congruence, never the non-symmetric
    product x2^{-1} x1.
    """
    if x1.n != x2.n:
        raise DimensionError("arguments differ in dimension")
    if np.array_equal(x1.mat, x2.mat):
        return 0.0
    _check_conditioning(x1, x2)
    w = generalized_eigs(x1.sym, x2.sym).eigenvalues
    return float(np.sqrt(np.sum(np.log(w) ** 2)))


def airm_geodesic(x1: SpdMatrix, x2: SpdMatrix, t: float) -> SpdMatrix:
    """Point at parameter t on the AIRM geodesic from x1 to x2.

    gamma(t) = x1^{1/2} (x1^{-1/2} x2 x1^{-1/2})^t x1^{1/2}. Parameters
    outside [0, 1] extrapolate the geodesic and emit a warning.
    """
    if x1.n != x2.n:
        raise DimensionError("arguments differ in dimension")
    if not 0.0 <= t <= 1.0:
        warnings.warn(f"extrapolating AIRM geodesic at t = {t}", stacklevel=2)
    if t == 0.0:
        return x1
    if t == 1.0:
        return x2
    _check_conditioning(x1, x2)
    root = mat_fn(x1.sym, "sqrt").mat
    inner = congruence_by_inv_sqrt(x2.sym, x1.sym)
    powered = mat_fn(inner, "power", exponent=t).mat
    out = root @ powered @ root
    return SpdMatrix((out + out.T) / 2.0)


def airm_metric(x: SpdMatrix, v: SymmetricMatrix, w: SymmetricMatrix) -> float:
    """Trace metric g_x(v, w) = tr(x^-1 v x^-1 w); the Hessian of -log det."""
    if not (x.n == v.n == w.n):
        raise DimensionError("arguments differ in dimension")
    s1 = np.linalg.solve(x.mat, v.mat)
    s2 = np.linalg.solve(x.mat, w.mat)
    return float(np.einsum("ij,ji->", s1, s2))


def airm_norm(x: SpdMatrix, v: SymmetricMatrix) -> float:
    """Tangent norm sqrt(g_x(v, v)) of the trace metric."""
    w = eigh(congruence_by_inv_sqrt(v, x.sym)).eigenvalues
    return float(np.sqrt(np.sum(w**2)))


def airm_restricted(x1: VpmMatrix, x2: VpmMatrix) -> float:
    """AIRM distance restricted to bicone elements."""
    return airm_distance(SpdMatrix(x1.sym), SpdMatrix(x2.sym))


def airm_pushed(x1: VpmMatrix, x2: VpmMatrix) -> float:
    """AIRM distance pulled back through the bicone map.

    Equals airm_distance(X(I-X)^{-1}, Y(I-Y)^{-1}); for n = 1 it coincides
    with the Hilbert distance of the interval (0, 1).
    """
    if x1.n != x2.n:
        raise DimensionError("arguments differ in dimension")
    return airm_distance(james_inverse(x1), james_inverse(x2))
