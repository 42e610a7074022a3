"""Bi-log-det barrier geometry of the bicone.

The potential Psi(X) = -log det X - log det(I - X) is a strictly convex
barrier blowing up at both boundary components of 0 < X < I. This module
evaluates the potential, its gradient map -X^-1 + (I-X)^-1, the Hessian
metric tr(X^-1 V X^-1 W) + tr((I-X)^-1 V (I-X)^-1 W) with its norm, the
three induced Bregman divergences, a finite-difference self-concordance
verifier, and discretized path lengths of the Hessian metric.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .domain import SpdMatrix, VpmMatrix, complement
from .errors import DimensionError, DomainError
from .hilbert import exit_times
from .linalg import SymmetricMatrix, congruence_by_inv_sqrt, eigh, generalized_eigs

#: Central-difference step for the third derivative along a line, refined by
#: one Richardson extrapolation; slack accepted on the self-concordance ratio.
FD_H_THIRD = 1e-3
FD_SLACK = 1e-3


@dataclass(frozen=True)
class BarrierEval:
    """Potential value and gradient of the barrier at a bicone point."""

    potential: float
    gradient: SymmetricMatrix
    base: VpmMatrix


@dataclass(frozen=True)
class SelfConcordanceReport:
    """Worst observed ratio |f'''| / (2 f''^{3/2}) over sampled line points."""

    max_ratio: float
    samples: int
    slack: float

    @property
    def passed(self) -> bool:
        return self.max_ratio <= 1.0 + self.slack


def bilogdet(x: VpmMatrix) -> float:
    """Barrier potential -log det X - log det(I - X), evaluated spectrally.

    One eigendecomposition gives sum_i (-log l_i - log(1 - l_i)), which is
    better conditioned near the boundary than two separate determinants.
    """
    w = eigh(x.sym).eigenvalues
    return float(-np.sum(np.log(w)) - np.sum(np.log1p(-w)))


def bilogdet_gradient(x: VpmMatrix) -> SymmetricMatrix:
    """Gradient map of the barrier: X -> -X^-1 + (I - X)^-1; zero at X = I/2."""
    spec = eigh(x.sym)
    w, u = spec.eigenvalues, spec.basis
    g = (u * (-1.0 / w + 1.0 / (1.0 - w))) @ u.T
    return SymmetricMatrix((g + g.T) / 2.0)


def barrier_eval(x: VpmMatrix) -> BarrierEval:
    """Potential and gradient bundled for one base point."""
    return BarrierEval(potential=bilogdet(x), gradient=bilogdet_gradient(x), base=x)


def barrier_metric(x: VpmMatrix, v: SymmetricMatrix, w: SymmetricMatrix) -> float:
    """Hessian metric of the barrier.

    g_X(V, W) = tr(X^-1 V X^-1 W) + tr((I-X)^-1 V (I-X)^-1 W); equals the
    trace metric at X plus the trace metric at I - X.
    """
    if not (x.n == v.n == w.n):
        raise DimensionError("arguments differ in dimension")
    comp = np.eye(x.n) - x.mat
    s1 = np.linalg.solve(x.mat, v.mat)
    s2 = np.linalg.solve(x.mat, w.mat)
    c1 = np.linalg.solve(comp, v.mat)
    c2 = np.linalg.solve(comp, w.mat)
    return float(np.einsum("ij,ji->", s1, s2) + np.einsum("ij,ji->", c1, c2))


def barrier_norm(x: VpmMatrix, v: SymmetricMatrix) -> float:
    """Tangent norm sqrt(g_X(V, V)) = sqrt(||A||_F^2 + ||B||_F^2).

    A and B are the congruences X^{-1/2} V X^{-1/2} and
    (I-X)^{-1/2} V (I-X)^{-1/2}.
    """
    if x.n != v.n:
        raise DimensionError("arguments differ in dimension")
    comp = SymmetricMatrix(np.eye(x.n) - x.mat)
    a = congruence_by_inv_sqrt(v, x.sym).mat
    b = congruence_by_inv_sqrt(v, comp).mat
    return float(np.sqrt(np.sum(a * a) + np.sum(b * b)))


def bregman_logdet(v1: SpdMatrix, v2: SpdMatrix) -> float:
    """Log-det divergence tr(V1 V2^-1) - log det(V1 V2^-1) - n.

    A spectral divergence: sum over the pencil eigenvalues l of
    l - log(l) - 1, hence nonnegative with equality only at V1 == V2.
    """
    if v1.n != v2.n:
        raise DimensionError("arguments differ in dimension")
    w = generalized_eigs(v1.sym, v2.sym).eigenvalues
    return float(np.sum(w - np.log(w) - 1.0))


def bregman_complement(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Log-det divergence of the complements: B(I - J1 : I - J2)."""
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    return bregman_logdet(
        SpdMatrix(complement(j1).sym), SpdMatrix(complement(j2).sym)
    )


def bregman_bilogdet(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Divergence of the barrier generator: B(J1:J2) + B(I-J1:I-J2).

    Asymmetric in its arguments but invariant under the complement swap
    (j1, j2) -> (I - j1, I - j2).
    """
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    return bregman_logdet(SpdMatrix(j1.sym), SpdMatrix(j2.sym)) + bregman_complement(
        j1, j2
    )


def _line_potential(x: VpmMatrix, v: SymmetricMatrix):
    """Potential along x + t v as a plain callable; caller keeps t interior."""
    base, step = x.mat, v.mat

    def f(t: float) -> float:
        m = base + t * step
        w = np.linalg.eigvalsh(m)
        if w[0] <= 0.0 or w[-1] >= 1.0:
            raise DomainError(f"line point at t = {t} left the bicone")
        return float(-np.sum(np.log(w)) - np.sum(np.log1p(-w)))

    return f


def _second_derivative(f, t: float, h: float) -> float:
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h)


def _third_derivative(f, t: float, h: float) -> float:
    return (f(t + 2 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2 * h)) / (
        2.0 * h**3
    )


def self_concordance_check(
    x: VpmMatrix, v: SymmetricMatrix, samples: int = 9
) -> SelfConcordanceReport:
    """Check |f'''(t)| <= 2 f''(t)^{3/2} for f(t) = Psi(x + t v) numerically.

    Samples t on a uniform grid covering 80% of the chord through x in
    direction v. The third derivative uses central differences at two step
    sizes combined by Richardson extrapolation; the test passes when the
    worst ratio stays below 1 + FD_SLACK.
    """
    if x.n != v.n:
        raise DimensionError("arguments differ in dimension")
    if np.linalg.norm(v.mat) == 0.0:
        raise DomainError("direction must be nonzero")
    if samples < 1:
        raise DomainError("need at least one sample")
    t = exit_times(x, v)
    lo, hi = -0.8 * t.backward, 0.8 * t.forward
    f = _line_potential(x, v)
    grid = np.linspace(lo, hi, samples) if samples > 1 else np.array([0.0])
    margin = 0.2 * min(t.backward, t.forward)
    h3 = min(FD_H_THIRD, margin / 4.0)
    h2 = min(1e-4, margin / 4.0)
    worst = 0.0
    for ti in grid:
        d2 = _second_derivative(f, ti, h2)
        coarse = _third_derivative(f, ti, h3)
        fine = _third_derivative(f, ti, h3 / 2.0)
        d3 = (4.0 * fine - coarse) / 3.0
        worst = max(worst, abs(d3) / (2.0 * d2**1.5))
    return SelfConcordanceReport(max_ratio=worst, samples=len(grid), slack=FD_SLACK)


def barrier_path_length(path: list[VpmMatrix]) -> float:
    """Midpoint-rule estimate of the Hessian-metric length of a polygonal path.

    Sums ||P_{i+1} - P_i|| measured in the barrier metric at each segment
    midpoint; refines toward the true length under subdivision. The path
    needs at least two points, all interior.
    """
    if len(path) < 2:
        raise DomainError("path needs at least two points")
    n = path[0].n
    total = 0.0
    for a, b in zip(path[:-1], path[1:]):
        if a.n != n or b.n != n:
            raise DimensionError("path points differ in dimension")
        mid = VpmMatrix((a.mat + b.mat) / 2.0)
        total += barrier_norm(mid, SymmetricMatrix(b.mat - a.mat))
    return total


def symmetrized_bregman(j1: VpmMatrix, j2: VpmMatrix) -> float:
    """Trace pairing <j2 - j1, grad Psi(j2) - grad Psi(j1)>.

    Its square root upper-bounds the Hessian-metric length of the straight
    segment between the two points.
    """
    if j1.n != j2.n:
        raise DimensionError("arguments differ in dimension")
    dg = bilogdet_gradient(j2).mat - bilogdet_gradient(j1).mat
    return float(np.einsum("ij,ji->", j2.mat - j1.mat, dg))
