"""Shared random generators for the test suite."""

import numpy as np

from spdbicone import SpdMatrix, SymmetricMatrix, VpmMatrix
from spdbicone.domain import SimplexPoint


def rand_sym(rng, n, unit=False):
    a = rng.standard_normal((n, n))
    s = (a + a.T) / 2.0
    if unit:
        s /= np.linalg.norm(s)
    return SymmetricMatrix(s)


def rand_spd(rng, n, kappa_max=None):
    """Random SPD matrix; with kappa_max, eigenvalues are drawn log-uniform."""
    if kappa_max is None:
        g = rng.standard_normal((n, n))
        return SpdMatrix(g.T @ g + 0.05 * np.eye(n))
    u = rand_orthogonal(rng, n)
    half = np.log10(kappa_max) / 2.0
    w = 10.0 ** rng.uniform(-half, half, size=n)
    return SpdMatrix((u * w) @ u.T)


def rand_vpm(rng, n):
    p = rand_spd(rng, n)
    x = np.linalg.solve(np.eye(n) + p.mat, p.mat)
    return VpmMatrix((x + x.T) / 2.0)


def rand_interior_vpm(rng, n, lo=0.1, hi=0.9):
    """Bicone element with spectrum compressed into [lo, hi]."""
    x = rand_vpm(rng, n)
    w, u = np.linalg.eigh(x.mat)
    w = lo + (hi - lo) * w
    return VpmMatrix((u * w) @ u.T)


def rand_simplex(rng, n, floor=1e-4):
    p = rng.dirichlet(np.ones(n))
    p = np.maximum(p, floor)
    return SimplexPoint(p / p.sum())


def rand_orthogonal(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def rand_gl(rng, n, max_cond=50.0):
    """Random invertible matrix with bounded condition number."""
    u = rand_orthogonal(rng, n)
    v = rand_orthogonal(rng, n)
    s = rng.uniform(1.0, max_cond ** 0.5, size=n)
    return (u * s) @ v
