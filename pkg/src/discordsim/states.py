"""Two-qubit density matrices and the amplitude-damping channel.

Basis conventions are fixed once and used everywhere: single-qubit basis
{|1>, |0>} (excited first), two-qubit basis {|11>, |10>, |01>, |00>}.
The channel is the operator-sum realization of the exact single-qubit decay
map: populations scale by chi**2, coherences by chi, with chi allowed to be
negative in the oscillatory reservoir regime.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .linalg import jacobi_eigh

__all__ = [
    "Qubit",
    "DensityMatrix",
    "KrausPair",
    "single_qubit_evolve",
    "amplitude_damping_kraus",
    "two_qubit_evolve",
    "tensor",
    "partial_trace",
    "excited_state",
    "ground_state",
    "pure_state",
]

_HERMITICITY_TOL = 1e-12
_TRACE_TOL = 1e-12
_POSITIVITY_TOL = 1e-10
_CHI_TOL = 1e-12


class Qubit(enum.Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True)
class DensityMatrix:
    """Validated 2x2 or 4x4 density matrix in the fixed basis order.

    Construction checks hermiticity and unit trace to 1e-12 and positivity to
    -1e-10 on the eigenvalues.  Entries are stored exactly as given (read-only);
    eigenvalue consumers clip round-off negatives at the point of use.
    """

    mat: np.ndarray

    def __post_init__(self):
        m = np.array(self.mat, dtype=complex)
        if m.shape not in ((2, 2), (4, 4)):
            raise ValueError(f"density matrix must be 2x2 or 4x4, got shape {m.shape}")
        herm_err = np.max(np.abs(m - m.conj().T))
        if herm_err > _HERMITICITY_TOL:
            raise ValueError(f"matrix is not Hermitian (max asymmetry {herm_err:.3e})")
        trace_err = abs(m.trace() - 1.0)
        if trace_err > _TRACE_TOL:
            raise ValueError(f"trace must be 1 (off by {trace_err:.3e})")
        w = jacobi_eigh(m)[0]
        if w[0] < -_POSITIVITY_TOL:
            raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {w[0]:.3e})")
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def eigenvalues(self) -> np.ndarray:
        """Ascending eigenvalues with (-1e-10, 0) round-off clipped to zero."""
        w = jacobi_eigh(self.mat)[0]
        return np.clip(w, 0.0, None)


@dataclass(frozen=True)
class KrausPair:
    """Operator-sum pair for the single-qubit decay map."""

    k0: np.ndarray
    k1: np.ndarray

    def __post_init__(self):
        completeness = self.k0.conj().T @ self.k0 + self.k1.conj().T @ self.k1
        err = np.max(np.abs(completeness - np.eye(2)))
        if err > 1e-12:
            raise ValueError(f"Kraus pair is not trace preserving (defect {err:.3e})")


def _check_chi(chi: float) -> float:
    chi = float(chi)
    if abs(chi) > 1.0 + _CHI_TOL:
        raise ValueError(f"|chi| must be <= 1, got {chi}")
    return min(1.0, max(-1.0, chi))


def pure_state(amplitudes) -> DensityMatrix:
    """Projector onto a normalized state vector (2 or 4 amplitudes)."""
    v = np.asarray(amplitudes, dtype=complex)
    v = v / np.linalg.norm(v)
    return DensityMatrix(np.outer(v, v.conj()))


def excited_state() -> DensityMatrix:
    return DensityMatrix(np.diag([1.0, 0.0]).astype(complex))


def ground_state() -> DensityMatrix:
    return DensityMatrix(np.diag([0.0, 1.0]).astype(complex))


def single_qubit_evolve(rho0: DensityMatrix, chi: float) -> DensityMatrix:
    """Exact single-qubit decay map.

    Excited population scales by chi**2, both coherences by chi, and the
    ground population absorbs the difference.
    """
    chi = _check_chi(chi)
    if rho0.dim != 2:
        raise ValueError("single_qubit_evolve expects a 2x2 state")
    m = rho0.mat
    out = np.array(
        [
            [m[0, 0] * chi * chi, m[0, 1] * chi],
            [m[1, 0] * chi, 1.0 - m[0, 0] * chi * chi],
        ],
        dtype=complex,
    )
    return DensityMatrix(out)


def amplitude_damping_kraus(chi: float) -> KrausPair:
    """Kraus pair realizing the decay map as a completely positive channel.

    k0 = diag(chi, 1) keeps the sign of chi so coherences flip sign with it;
    k1 transfers the lost excited population |1> -> |0>.
    """
    chi = _check_chi(chi)
    k0 = np.array([[chi, 0.0], [0.0, 1.0]], dtype=complex)
    k1 = np.zeros((2, 2), dtype=complex)
    k1[1, 0] = np.sqrt(max(0.0, 1.0 - chi * chi))
    return KrausPair(k0, k1)


def apply_kraus(pair: KrausPair, rho: DensityMatrix) -> DensityMatrix:
    """k0 rho k0^dag + k1 rho k1^dag."""
    m = rho.mat
    out = pair.k0 @ m @ pair.k0.conj().T + pair.k1 @ m @ pair.k1.conj().T
    return DensityMatrix(out)


def two_qubit_evolve(rho0: DensityMatrix, chi_a: float, chi_b: float) -> DensityMatrix:
    """Independent-reservoir channel on a 4x4 state.

    Applies the tensor products of the single-qubit Kraus operators for
    amplitude chi_a on qubit A and chi_b on qubit B.
    """
    if rho0.dim != 4:
        raise ValueError("two_qubit_evolve expects a 4x4 state")
    ka = amplitude_damping_kraus(chi_a)
    kb = amplitude_damping_kraus(chi_b)
    m = rho0.mat
    out = np.zeros((4, 4), dtype=complex)
    for ki in (ka.k0, ka.k1):
        for kj in (kb.k0, kb.k1):
            op = np.kron(ki, kj)
            out += op @ m @ op.conj().T
    return DensityMatrix(out)


def tensor(rho_a: DensityMatrix, rho_b: DensityMatrix) -> DensityMatrix:
    """Kronecker product of two single-qubit states in the fixed basis order."""
    if rho_a.dim != 2 or rho_b.dim != 2:
        raise ValueError("tensor expects two 2x2 states")
    return DensityMatrix(np.kron(rho_a.mat, rho_b.mat))


def partial_trace(rho: DensityMatrix, keep: Qubit) -> DensityMatrix:
    """Reduced state of one qubit of a 4x4 state."""
    if rho.dim != 4:
        raise ValueError("partial_trace expects a 4x4 state")
    t = rho.mat.reshape(2, 2, 2, 2)  # indices (a, b, a', b')
    if keep is Qubit.A:
        out = np.einsum("abcb->ac", t)
    else:
        out = np.einsum("abad->bd", t)
    return DensityMatrix(out)
