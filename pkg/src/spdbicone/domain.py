"""The SPD cone, the open bicone 0 < X < I, and all maps between them.

The bicone (after James's variance-precision model, VPM) is the image of the
SPD cone under X -> X(I+X)^{-1}. The module provides the validated matrix
types, the forward/inverse/differential of that map, the hat embedding into
the product cone, complement, simplex/trace-normalized embeddings and the
cylindrical chart of the 2x2 bicone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .linalg import EIG_TOL, SymmetricMatrix, eigh

#: Elementwise tolerance for exact-by-construction identities such as
#: "the two hat components sum to the identity".
PAIR_ATOL = 1e-12


def _as_symmetric(value) -> SymmetricMatrix:
    if isinstance(value, SymmetricMatrix):
        return value
    return SymmetricMatrix(value)


class SpdMatrix:
    """Symmetric matrix with strictly positive spectrum (margin EIG_TOL)."""

    __slots__ = ("sym",)

    def __init__(self, value, tol: float = EIG_TOL):
        sym = _as_symmetric(value)
        lam_min = float(np.linalg.eigvalsh(sym.mat)[0])
        if lam_min <= tol:
            raise DomainError(
                f"matrix is not positive definite: smallest eigenvalue "
                f"{lam_min:.6e} <= {tol:.0e}"
            )
        object.__setattr__(self, "sym", sym)

    def __setattr__(self, name, value):
        raise AttributeError("SpdMatrix is immutable")

    @property
    def mat(self) -> np.ndarray:
        return self.sym.mat

    @property
    def n(self) -> int:
        return self.sym.n

    def __repr__(self) -> str:
        return f"SpdMatrix(n={self.n})"


class VpmMatrix:
    """Symmetric matrix with spectrum inside the open interval (0, 1).

    Membership uses the open margins (EIG_TOL, 1 - EIG_TOL). Elements of the
    bicone; closed-boundary matrices (zero or unit eigenvalues) are rejected.
    """

    __slots__ = ("sym",)

    def __init__(self, value, tol: float = EIG_TOL):
        sym = _as_symmetric(value)
        w = np.linalg.eigvalsh(sym.mat)
        if w[0] <= tol or w[-1] >= 1.0 - tol:
            raise DomainError(
                f"eigenvalues [{w[0]:.6e}, {w[-1]:.6e}] outside the open "
                f"interval ({tol:.0e}, 1 - {tol:.0e})"
            )
        object.__setattr__(self, "sym", sym)

    def __setattr__(self, name, value):
        raise AttributeError("VpmMatrix is immutable")

    @property
    def mat(self) -> np.ndarray:
        return self.sym.mat

    @property
    def n(self) -> int:
        return self.sym.n

    def __repr__(self) -> str:
        return f"VpmMatrix(n={self.n})"


class HatPair:
    """Pair (X, I - X) of SPD matrices; the hat embedding of a bicone point."""

    __slots__ = ("first", "second")

    def __init__(self, first: SpdMatrix, second: SpdMatrix):
        if first.n != second.n:
            raise DimensionError("hat pair components differ in dimension")
        gap = np.abs(first.mat + second.mat - np.eye(first.n)).max()
        if gap > PAIR_ATOL:
            raise DomainError(f"components do not sum to I: max deviation {gap:.3e}")
        object.__setattr__(self, "first", first)
        object.__setattr__(self, "second", second)

    def __setattr__(self, name, value):
        raise AttributeError("HatPair is immutable")

    @property
    def n(self) -> int:
        return self.first.n


class SimplexPoint:
    """Point of the open probability simplex: positive coordinates summing to 1."""

    __slots__ = ("probs",)

    def __init__(self, probs, tol: float = EIG_TOL):
        p = np.array(probs, dtype=float)
        if p.ndim != 1 or p.shape[0] < 1:
            raise DimensionError("simplex point must be a 1-d array")
        if not np.all(np.isfinite(p)):
            raise DomainError("simplex point contains non-finite entries")
        if np.any(p <= tol) or np.any(p >= 1.0 - tol):
            raise DomainError(
                f"coordinates must lie in ({tol:.0e}, 1 - {tol:.0e}), "
                f"got range [{p.min():.6e}, {p.max():.6e}]"
            )
        if abs(p.sum() - 1.0) > PAIR_ATOL:
            raise DomainError(f"coordinates sum to {p.sum()!r}, expected 1")
        p.setflags(write=False)
        object.__setattr__(self, "probs", p)

    def __setattr__(self, name, value):
        raise AttributeError("SimplexPoint is immutable")

    @property
    def n(self) -> int:
        return self.probs.shape[0]

    def __repr__(self) -> str:
        return f"SimplexPoint({np.array2string(self.probs, precision=6)})"


@dataclass(frozen=True)
class BiconeCoords:
    """Cylindrical coordinates (r, theta, z) of a 2x2 bicone element.

    The Cartesian point (r cos theta, r sin theta, z) lies strictly inside
    the unit Lorentz bicone: |z| + r < 1.
    """

    r: float
    theta: float
    z: float

    def __post_init__(self):
        if self.r < 0:
            raise DomainError(f"radius must be nonnegative, got {self.r}")
        if abs(self.z) + self.r >= 1.0:
            raise DomainError(
                f"point outside the unit bicone: |z| + r = {abs(self.z) + self.r}"
            )

    def cartesian(self) -> tuple[float, float, float]:
        return (self.r * np.cos(self.theta), self.r * np.sin(self.theta), self.z)


def _symmetrized(a: np.ndarray) -> np.ndarray:
    return (a + a.T) / 2.0


def james_forward(p: SpdMatrix) -> VpmMatrix:
    """Map the SPD cone onto the bicone: P -> P (I + P)^{-1}.

    Acts on the spectrum as lambda -> lambda / (1 + lambda), so the image has
    eigenvalues in (0, 1).
    """
    n = p.n
    x = np.linalg.solve(np.eye(n) + p.mat, p.mat)
    return VpmMatrix(_symmetrized(x))


def james_inverse(x: VpmMatrix) -> SpdMatrix:
    """Inverse bicone map: X -> X (I - X)^{-1}."""
    n = x.n
    p = np.linalg.solve(np.eye(n) - x.mat, x.mat)
    return SpdMatrix(_symmetrized(p))


def james_differential(p: SpdMatrix, v: SymmetricMatrix) -> SymmetricMatrix:
    """Differential of the bicone map at P: V -> (I + P)^{-1} V (I + P)^{-1}."""
    if p.n != v.n:
        raise DimensionError("base point and tangent vector dimensions differ")
    a = np.linalg.inv(np.eye(p.n) + p.mat)
    return SymmetricMatrix(_symmetrized(a @ v.mat @ a))


def complement(x: VpmMatrix) -> VpmMatrix:
    """The involution X -> I - X of the bicone."""
    return VpmMatrix(_symmetrized(np.eye(x.n) - x.mat))


def hat(x: VpmMatrix) -> HatPair:
    """Hat embedding X -> (X, I - X) into the product of two SPD cones."""
    return HatPair(SpdMatrix(x.sym), SpdMatrix(np.eye(x.n) - x.mat))


def embed_simplex(p: SimplexPoint) -> VpmMatrix:
    """Embed a simplex point as the diagonal, unit-trace bicone element diag(p)."""
    if p.n < 2:
        raise DimensionError("simplex embedding requires n >= 2")
    return VpmMatrix(np.diag(p.probs))


def trace_normalize(p: SpdMatrix) -> VpmMatrix:
    """Scale an SPD matrix to unit trace; the result lies in the bicone.

    Undefined for n = 1, where the normalization collapses to the scalar 1
    on the bicone boundary.
    """
    if p.n < 2:
        raise DimensionError("trace normalization degenerates for n = 1")
    return VpmMatrix(p.mat / np.trace(p.mat))


def scaled_james(p: SpdMatrix, lam: float) -> SymmetricMatrix:
    """Scaled bicone map P -> lam * P (I + P)^{-1}, spectrum in (0, lam)."""
    if lam <= 0:
        raise DomainError(f"scale must be positive, got {lam}")
    return SymmetricMatrix(lam * james_forward(p).mat)


#: Radii below which the polar angle of the 2x2 chart is reported as 0.
THETA_DEGENERATE_R = 1e-12


def bicone_coords(j: VpmMatrix) -> BiconeCoords:
    """Cylindrical polar chart of the 2x2 bicone.

    For J = [[a, c], [c, b]] with eigenvalues l1 <= l2:

        r     = |l1 - l2| / (1 + l1 + l2 + l1*l2)
        theta = atan2(2c, a - b)     (0 when r is numerically zero)
        z     = (l1*l2 - 1) / (1 + l1 + l2 + l1*l2)

    The radius is kept nonnegative with the eigenvalue-order sign folded into
    theta via the two-argument arctangent, which is also well defined at a = b.
    """
    if j.n != 2:
        raise DimensionError(f"bicone chart is defined for n = 2, got n = {j.n}")
    a, b, c = j.mat[0, 0], j.mat[1, 1], j.mat[0, 1]
    disc = np.hypot(a - b, 2.0 * c)
    half_sum = (a + b) / 2.0
    l1, l2 = half_sum - disc / 2.0, half_sum + disc / 2.0
    den = 1.0 + l1 + l2 + l1 * l2
    r = abs(l1 - l2) / den
    theta = 0.0 if r < THETA_DEGENERATE_R else float(np.arctan2(2.0 * c, a - b))
    z = (l1 * l2 - 1.0) / den
    return BiconeCoords(r=float(r), theta=theta, z=float(z))


def spectrum_of(x) -> np.ndarray:
    """Sorted eigenvalues of a wrapped matrix (SpdMatrix, VpmMatrix or raw)."""
    sym = x.sym if hasattr(x, "sym") else _as_symmetric(x)
    return eigh(sym).eigenvalues
