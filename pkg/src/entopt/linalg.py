"""Dense linear algebra for 4x4 Hermitian operators and real 3x3 couplings."""

from __future__ import annotations

import numpy as np

# Shared tolerances; solvers and tests must agree on these.
HERMITICITY_RTOL = 1e-12
EIGEN_RESIDUAL_RTOL = 1e-10
SVD_RTOL = 1e-12
# Partial-transpose eigenvalues above this floor count as non-negative.
PSD_EIGENVALUE_FLOOR = -1e-12


class NonHermitianError(ValueError):
    """Raised when a matrix fails the Hermiticity check."""


def hermiticity_defect(m) -> float:
    """Largest absolute deviation of M from its conjugate transpose."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - m.conj().T)))


def require_hermitian(m, rtol: float = HERMITICITY_RTOL) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonHermitianError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonHermitianError("matrix has non-finite entries")
    scale = float(np.max(np.abs(m)))
    defect = hermiticity_defect(m)
    if defect > rtol * scale:
        raise NonHermitianError(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds {rtol:.1e} * {scale:.3e}"
        )
    return m


def hermitian_eigen(m, rtol: float = HERMITICITY_RTOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns (values, vectors) with values ascending and vectors as orthonormal
    columns. Non-Hermitian input is rejected with the measured defect norm.
    """
    m = require_hermitian(m, rtol)
    return np.linalg.eigh((m + m.conj().T) / 2.0)


def hermitian_expm(m) -> np.ndarray:
    """exp(M) for Hermitian M, computed as V diag(e^lambda) V^dagger."""
    values, vectors = hermitian_eigen(m)
    e = (vectors * np.exp(values)) @ vectors.conj().T
    return (e + e.conj().T) / 2.0


def svd3(j):
    """Singular value decomposition of a real 3x3 matrix as U @ J @ W = diag(sigma).

    sigma is non-negative and sorted descending; U and W are orthogonal with
    determinant +1 or -1. Ties between equal singular values keep the
    underlying solver's deterministic column order.
    """
    j = np.asarray(j, dtype=float)
    if j.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {j.shape}")
    if not np.all(np.isfinite(j)):
        raise ValueError("coupling matrix has non-finite entries")
    u, sigma, vh = np.linalg.svd(j)
    return u.T, sigma, vh.T
