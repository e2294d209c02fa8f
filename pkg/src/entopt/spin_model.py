"""Two-qubit Hamiltonians and the rotation of arbitrary couplings to diagonal XYZ form."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import hermitian_eigen, svd3

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
IDENTITY_2 = np.eye(2, dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

# Precomputed tensor-product bases for fast Hamiltonian assembly.
_PAIR_BASIS = np.array([[np.kron(a, b) for b in PAULI] for a in PAULI])
_SPIN1_BASIS = np.array([np.kron(s, IDENTITY_2) for s in PAULI])
_SPIN2_BASIS = np.array([np.kron(IDENTITY_2, s) for s in PAULI])

_CANONICAL_ATOL = 1e-12


def _as_coupling_matrix(j) -> np.ndarray:
    j = np.asarray(j, dtype=float)
    if j.shape == (3,):
        j = np.diag(j)
    if j.shape != (3, 3):
        raise ValueError(f"coupling must be a 3x3 matrix or a 3-vector, got shape {j.shape}")
    if not np.all(np.isfinite(j)):
        raise ValueError("coupling has non-finite entries")
    return j


def build_hamiltonian(j, h1=(0.0, 0.0, 0.0), h2=(0.0, 0.0, 0.0)) -> np.ndarray:
    """Assemble sum_ij J_ij s1^i s2^j + sum_i (h1^i s1^i + h2^i s2^i).

    Basis ordering is |00>, |01>, |10>, |11> with sigma^z |0> = +|0>. A
    length-3 coupling is treated as the diagonal (Jx, Jy, Jz).
    """
    j = _as_coupling_matrix(j)
    h = np.tensordot(j, _PAIR_BASIS, axes=([0, 1], [0, 1]))
    h1 = np.asarray(h1, dtype=float)
    h2 = np.asarray(h2, dtype=float)
    if np.any(h1) or np.any(h2):
        h = h + np.tensordot(h1, _SPIN1_BASIS, axes=(0, 0))
        h = h + np.tensordot(h2, _SPIN2_BASIS, axes=(0, 0))
    return h


@dataclass
class LocalField:
    """Local field vectors on the two spins, with the mean/imbalance views."""

    h1: np.ndarray
    h2: np.ndarray

    def __post_init__(self):
        self.h1 = np.asarray(self.h1, dtype=float)
        self.h2 = np.asarray(self.h2, dtype=float)
        if self.h1.shape != (3,) or self.h2.shape != (3,):
            raise ValueError("local fields must be length-3 vectors")
        if not (np.all(np.isfinite(self.h1)) and np.all(np.isfinite(self.h2))):
            raise ValueError("local fields must be finite")

    @classmethod
    def opposed_z(cls, h: float) -> "LocalField":
        return cls(np.array([0.0, 0.0, h]), np.array([0.0, 0.0, -h]))

    @property
    def h(self) -> float:
        return 0.5 * (np.linalg.norm(self.h1) + np.linalg.norm(self.h2))

    @property
    def zeta(self) -> float:
        """Imbalance (|h1|-|h2|)/(|h1|+|h2|); 0 for vanishing fields."""
        m1 = np.linalg.norm(self.h1)
        m2 = np.linalg.norm(self.h2)
        total = m1 + m2
        if total == 0.0:
            return 0.0
        return (m1 - m2) / total


def is_canonical_diagonal(jx: float, jy: float, jz: float, atol: float = _CANONICAL_ATOL) -> bool:
    """True when either {jx, jy} >= jz >= 0 or 0 >= jz >= {jx, jy}, with |jz| minimal."""
    if abs(jz) > min(abs(jx), abs(jy)) + atol:
        return False
    afm = jx >= jz - atol and jy >= jz - atol and jz >= -atol
    fm = jz <= atol and jz >= jx - atol and jz >= jy - atol
    return afm or fm


@dataclass(eq=False)
class CanonicalCoupling:
    """Diagonal XYZ coupling plus the spin rotations that produced it.

    The rotations satisfy diag(jx, jy, jz) = r1 @ J @ r2.T with
    det r1 = det r2 = +1.
    """

    jx: float
    jy: float
    jz: float
    r1: np.ndarray = field(default_factory=lambda: np.eye(3))
    r2: np.ndarray = field(default_factory=lambda: np.eye(3))

    @classmethod
    def from_diagonal(cls, jx: float, jy: float, jz: float) -> "CanonicalCoupling":
        if not is_canonical_diagonal(jx, jy, jz):
            raise ValueError(
                f"({jx}, {jy}, {jz}) is not a canonical diagonal coupling; "
                "run canonicalize() first"
            )
        return cls(float(jx), float(jy), float(jz))

    @property
    def diagonal(self) -> np.ndarray:
        return np.array([self.jx, self.jy, self.jz])

    @property
    def sign_class(self) -> str:
        """'afm' for the all-non-negative class, 'fm' for the all-non-positive one."""
        return "fm" if min(self.jx, self.jy, self.jz) < 0 else "afm"

    @property
    def interaction_energies(self) -> np.ndarray:
        """The four XYZ interaction eigenvalues in fixed Bell-state order."""
        jx, jy, jz = self.jx, self.jy, self.jz
        return np.array([-jx - jy - jz, jx + jy - jz, jx - jy + jz, -jx + jy + jz])

    @property
    def ground_degeneracy(self) -> int:
        e = self.interaction_energies
        scale = max(1.0, float(np.max(np.abs(e))))
        return int(np.sum(e <= e.min() + 1e-12 * scale))


_BELL_STATES = np.array(
    [
        [0.0, 1.0, -1.0, 0.0],  # singlet (|01> - |10>)/sqrt(2)
        [0.0, 1.0, 1.0, 0.0],  # (|01> + |10>)/sqrt(2)
        [1.0, 0.0, 0.0, 1.0],  # (|00> + |11>)/sqrt(2)
        [1.0, 0.0, 0.0, -1.0],  # (|00> - |11>)/sqrt(2)
    ],
    dtype=complex,
) / np.sqrt(2.0)


@dataclass
class InteractionEigensystem:
    """Interaction eigenvalues paired with their Bell eigenstates."""

    energies: np.ndarray
    states: np.ndarray  # rows match energies
    ground_energy: float
    ground_degeneracy: int

    @property
    def degeneracy_tag(self) -> str:
        return {1: "nondegenerate", 2: "doubly_degenerate", 3: "triply_degenerate"}.get(
            self.ground_degeneracy, f"{self.ground_degeneracy}-fold"
        )


def interaction_eigensystem(c: CanonicalCoupling) -> InteractionEigensystem:
    """Spectrum of the diagonal XYZ interaction; the eigenstates are the Bell states."""
    energies = c.interaction_energies
    return InteractionEigensystem(
        energies=energies,
        states=_BELL_STATES.copy(),
        ground_energy=float(energies.min()),
        ground_degeneracy=c.ground_degeneracy,
    )


def canonicalize(j) -> CanonicalCoupling:
    """Rotate an arbitrary coupling matrix to a diagonal XYZ interaction.

    The two local rotations leave the interaction spectrum unchanged. The
    diagonal values all share one sign: non-negative when det J >= 0
    (antiferromagnetic class, det J = 0 included), non-positive otherwise
    (ferromagnetic class). |jz| is the least of the three magnitudes and
    jx >= jy; ties between equal singular values follow the underlying SVD's
    deterministic order.
    """
    j = _as_coupling_matrix(j)
    u, sigma, w = svd3(j)
    r1 = u.copy()
    r2 = w.T.copy()
    d = sigma.copy()
    # Inversions cannot be realized by spin rotations; trade them for a sign
    # on the smallest singular value.
    if np.linalg.det(r1) < 0:
        r1[2, :] *= -1.0
        d[2] *= -1.0
    if np.linalg.det(r2) < 0:
        r2[2, :] *= -1.0
        d[2] *= -1.0
    if np.linalg.det(j) < 0:
        # Rotate spin 1 by pi about z: flips the x and y couplings.
        r1 = np.diag([-1.0, -1.0, 1.0]) @ r1
        d[0] *= -1.0
        d[1] *= -1.0
        # Swap the x and y axes on both spins (det +1 via the z sign flip)
        # so that |jz| stays minimal and jx >= jy.
        swap = np.array([[0.0, 1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, -1.0]])
        r1 = swap @ r1
        r2 = swap @ r2
        d = np.array([d[1], d[0], d[2]])
    else:
        d = np.abs(d)  # det J = 0 may leave a -0.0 in the z slot
    return CanonicalCoupling(float(d[0]), float(d[1]), float(d[2]), r1, r2)


def spectral_norm(j) -> float:
    """Largest absolute interaction eigenvalue (the operator 2-norm of H_int)."""
    values, _ = hermitian_eigen(build_hamiltonian(j))
    return float(np.max(np.abs(values)))
