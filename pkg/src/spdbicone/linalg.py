"""Dense symmetric linear-algebra kernel.

Everything downstream (cone/bicone maps, distances, divergences) is built on
the eigendecomposition of real symmetric matrices: matrix functions, norms,
the spread functional and generalized (pencil) eigenvalues all live here.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError, DomainError, NoConvergenceError, NonFiniteError

#: Default eigenvalue tolerance. Definiteness and membership checks use a
#: strict inequality with this margin.
EIG_TOL = 1e-10

#: Relative Frobenius asymmetry above which an input is rejected instead of
#: being silently symmetrized.
ASYMMETRY_RTOL = 1e-8


class SymmetricMatrix:
    """Dense n-by-n real symmetric matrix.

    The stored matrix is ``(M + M.T) / 2``; inputs whose asymmetry exceeds
    ``ASYMMETRY_RTOL`` in relative Frobenius norm are rejected rather than
    silently repaired. Entries must be finite. Instances are immutable.
    """

    __slots__ = ("mat",)

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionError(f"expected a square matrix, got shape {a.shape}")
        if a.shape[0] < 1:
            raise DimensionError("matrix dimension must be at least 1")
        if not np.all(np.isfinite(a)):
            raise NonFiniteError("matrix contains non-finite entries")
        scale = np.linalg.norm(a)
        skew = np.linalg.norm(a - a.T)
        if skew > ASYMMETRY_RTOL * max(scale, 1e-300):
            raise DomainError(
                f"matrix is not symmetric: ||M - M.T||_F = {skew:.3e} "
                f"exceeds {ASYMMETRY_RTOL:.0e} * ||M||_F"
            )
        m = (a + a.T) / 2.0
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    def __setattr__(self, name, value):
        raise AttributeError("SymmetricMatrix is immutable")

    @property
    def n(self) -> int:
        return self.mat.shape[0]

    def __repr__(self) -> str:
        return f"SymmetricMatrix(n={self.n})"


class Spectrum:
    """Eigenvalues sorted ascending, with an optional orthonormal basis.

    When ``basis`` is present its columns are unit eigenvectors matching the
    eigenvalue order, with the sign convention that each column's
    largest-magnitude component is positive.
    """

    __slots__ = ("eigenvalues", "basis")

    def __init__(self, eigenvalues, basis=None):
        w = np.asarray(eigenvalues, dtype=float)
        if w.ndim != 1:
            raise DimensionError("eigenvalues must be a 1-d array")
        if np.any(np.diff(w) < 0):
            raise DomainError("eigenvalues must be sorted ascending")
        n = w.shape[0]
        if basis is not None:
            basis = np.asarray(basis, dtype=float)
            if basis.shape != (n, n):
                raise DimensionError("basis shape does not match eigenvalue count")
            ortho = np.linalg.norm(basis.T @ basis - np.eye(n))
            if ortho > EIG_TOL * n:
                raise DomainError(f"basis not orthonormal: residual {ortho:.3e}")
            basis = basis.copy()
            basis.setflags(write=False)
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "basis", basis)

    def __setattr__(self, name, value):
        raise AttributeError("Spectrum is immutable")

    @property
    def min(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def max(self) -> float:
        return float(self.eigenvalues[-1])

    def __repr__(self) -> str:
        return f"Spectrum({np.array2string(self.eigenvalues, precision=6)})"


def _fix_signs(basis: np.ndarray) -> np.ndarray:
    """Make each column's largest-magnitude component positive (first on tie)."""
    idx = np.argmax(np.abs(basis), axis=0)
    signs = np.sign(basis[idx, np.arange(basis.shape[1])])
    signs[signs == 0] = 1.0
    return basis * signs


def eigh(m: SymmetricMatrix) -> Spectrum:
    """Full eigendecomposition of a symmetric matrix.

    Returns eigenvalues ascending together with an orthonormal eigenbasis
    whose column signs are deterministic, so repeated runs are reproducible.

    Raises
    ------
    NoConvergenceError
        If the underlying LAPACK solver fails to converge.
    """
    try:
        w, u = np.linalg.eigh(m.mat)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver failed: {exc}") from exc
    u = _fix_signs(u)
    spectrum = Spectrum(w, u)
    residual = np.linalg.norm(u @ np.diag(w) @ u.T - m.mat)
    bound = EIG_TOL * m.n * max(1.0, np.linalg.norm(m.mat))
    if residual > bound:
        raise NoConvergenceError(
            f"eigendecomposition residual {residual:.3e} exceeds {bound:.3e}"
        )
    return spectrum


_FN_NEEDS_POSITIVE = {"sqrt", "inv_sqrt", "log", "power", "inverse"}


def _scalar_fn(tag: str, exponent: float | None):
    if tag == "sqrt":
        return np.sqrt
    if tag == "inv_sqrt":
        return lambda w: 1.0 / np.sqrt(w)
    if tag == "log":
        return np.log
    if tag == "exp":
        return np.exp
    if tag == "inverse":
        return lambda w: 1.0 / w
    if tag == "power":
        if exponent is None:
            raise DomainError("mat_fn power requires an exponent")
        return lambda w: np.power(w, exponent)
    raise DomainError(f"unknown matrix function tag {tag!r}")


def mat_fn(
    m: SymmetricMatrix,
    fn: str,
    exponent: float | None = None,
    tol: float = EIG_TOL,
) -> SymmetricMatrix:
    """Apply a scalar function to the spectrum: U diag(f(w)) U^T.

    ``fn`` is one of ``sqrt``, ``inv_sqrt``, ``log``, ``exp``, ``power``
    (with ``exponent``) or ``inverse``. All tags except ``exp`` require a
    strictly positive spectrum.
    """
    spec = eigh(m)
    w = spec.eigenvalues
    if fn in _FN_NEEDS_POSITIVE and w[0] <= tol:
        raise DomainError(
            f"mat_fn({fn!r}) requires positive eigenvalues, got {w[0]:.6e}"
        )
    f = _scalar_fn(fn, exponent)
    u = spec.basis
    out = (u * f(w)) @ u.T
    return SymmetricMatrix((out + out.T) / 2.0)


def spread(m: SymmetricMatrix) -> float:
    """Spectral spread: largest minus smallest eigenvalue."""
    spec = eigh(m)
    return spec.max - spec.min


def frobenius(m: SymmetricMatrix) -> float:
    """Frobenius norm; equals the l2 norm of the spectrum for symmetric input."""
    return float(np.linalg.norm(m.mat))


def operator_norm(m: SymmetricMatrix) -> float:
    """Operator (spectral) norm: largest absolute eigenvalue."""
    w = eigh(m).eigenvalues
    return float(max(abs(w[0]), abs(w[-1])))


def _inv_sqrt_factor(b: SymmetricMatrix, tol: float) -> np.ndarray:
    spec = eigh(b)
    w = spec.eigenvalues
    if w[0] <= tol:
        raise DomainError(
            f"matrix is not positive definite: smallest eigenvalue {w[0]:.6e}"
        )
    u = spec.basis
    return (u / np.sqrt(w)) @ u.T


def congruence_by_inv_sqrt(
    a: SymmetricMatrix, b: SymmetricMatrix, tol: float = EIG_TOL
) -> SymmetricMatrix:
    """Form the symmetric congruence b^{-1/2} a b^{-1/2}; b must be SPD."""
    r = _inv_sqrt_factor(b, tol)
    c = r @ a.mat @ r
    return SymmetricMatrix((c + c.T) / 2.0)


def generalized_eigs(
    a: SymmetricMatrix, b: SymmetricMatrix, tol: float = EIG_TOL
) -> Spectrum:
    """Real eigenvalues of the pencil (a, b), i.e. of b^{-1} a, for SPD b.

    Computed through the symmetric congruence b^{-1/2} a b^{-1/2} so the
    spectrum is guaranteed real; the non-symmetric product b^{-1} a is never
    formed. The returned spectrum carries no basis.
    """
    c = congruence_by_inv_sqrt(a, b, tol)
    return Spectrum(eigh(c).eigenvalues)
