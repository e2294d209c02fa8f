"""Entanglement quantifiers on two-qubit density matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import PSD_EIGENVALUE_FLOOR, hermitian_eigen
from .spin_model import SIGMA_Y

_SYSY = np.kron(SIGMA_Y, SIGMA_Y)


def partial_transpose(rho) -> np.ndarray:
    """Transpose the first qubit's indices; involutive and trace preserving."""
    r = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    return np.ascontiguousarray(r.transpose(2, 1, 0, 3)).reshape(4, 4)


def min_pt_eigenvalue(rho) -> float:
    values, _ = hermitian_eigen(partial_transpose(rho))
    return float(values[0])


def negativity(rho) -> float:
    """max(-2 lambda_min, 0) over the partial-transpose spectrum.

    The partial transpose of a two-qubit state has at most one negative
    eigenvalue, so this equals the trace-norm definition ||rho^T1||_1 - 1.
    """
    lam = min_pt_eigenvalue(rho)
    if lam < PSD_EIGENVALUE_FLOOR:
        return -2.0 * lam
    return 0.0


def concurrence(rho) -> float:
    """Wootters concurrence from the spin-flipped state rho~.

    The square roots of the eigenvalues of rho @ rho~ are the singular values
    of sqrt(rho~) sqrt(rho), with sqrt(rho) exact in rho's eigenbasis. Taking
    them from one SVD keeps the computation deterministic and avoids the
    precision loss of rooting near-zero eigenvalues.
    """
    rho = np.asarray(rho, dtype=complex)
    values, vectors = hermitian_eigen(rho)
    s = np.sqrt(np.clip(values, 0.0, None))  # roundoff can leave tiny negatives
    sqrt_rho = (vectors * s) @ vectors.conj().T
    m = _SYSY @ sqrt_rho.conj() @ _SYSY @ sqrt_rho
    r = np.linalg.svd(m, compute_uv=False)
    return float(max(0.0, r[0] - r[1] - r[2] - r[3]))


def pi_measure(rho) -> float:
    """Determinant-based quantifier: 2 |det rho^T1|^(1/4) when rho^T1 < 0, else 0."""
    pt = partial_transpose(rho)
    values, _ = hermitian_eigen(pt)
    if values[0] >= PSD_EIGENVALUE_FLOOR:
        return 0.0
    det = float(np.real(np.linalg.det(pt)))
    return 2.0 * abs(det) ** 0.25


def necessary_condition(rho, atol: float = 1e-12) -> bool:
    """Eigenvalue-ordering witness: lam1 >= lam3 + 2 sqrt(lam2 lam4) >= 3 lam4.

    The lam_i are the state's eigenvalues in non-ascending order. Any state
    with nonzero negativity satisfies both inequalities; separable states may
    fail them.
    """
    values, _ = hermitian_eigen(rho)
    l4, l3, l2, l1 = np.clip(values, 0.0, None)
    mid = l3 + 2.0 * np.sqrt(l2 * l4)
    return bool(l1 + atol >= mid and mid + atol >= 3.0 * l4)


@dataclass(frozen=True)
class EntanglementReport:
    negativity: float
    concurrence: float
    pi: float
    min_pt_eigenvalue: float


def entanglement_report(rho) -> EntanglementReport:
    return EntanglementReport(
        negativity=negativity(rho),
        concurrence=concurrence(rho),
        pi=pi_measure(rho),
        min_pt_eigenvalue=min_pt_eigenvalue(rho),
    )
