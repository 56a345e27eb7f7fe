"""Small fixed-size Hermitian eigensolvers.

Everything downstream works with 2x2 and 4x4 complex Hermitian matrices, so
a cyclic Jacobi sweep is used instead of a general-purpose LAPACK driver:
it is unconditionally convergent at these sizes and its accuracy is easy to
reason about (off-diagonal mass shrinks below a fixed fraction of the matrix
norm).
"""

import numpy as np

# Off-diagonal Frobenius mass at convergence, relative to the matrix norm.
# For unit-trace density matrices this is an absolute 1e-13 within a factor 2.
_JACOBI_TOL = 1e-13
_MAX_SWEEPS = 60


def _offdiag_norm(a: np.ndarray) -> float:
    mask = ~np.eye(a.shape[0], dtype=bool)
    return float(np.linalg.norm(a[mask]))


def jacobi_eigh(mat: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.

    Parameters
    ----------
    mat : (n, n) complex Hermitian array.

    Returns
    -------
    (eigenvalues, eigenvectors) with eigenvalues ascending and
    ``eigenvectors[:, k]`` the unit eigenvector for eigenvalue k, so that
    ``mat ~= V @ diag(w) @ V.conj().T``.
    """
    a = np.array(mat, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v

    for _ in range(_MAX_SWEEPS):
        if _offdiag_norm(a) <= _JACOBI_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                # Unitary 2x2 rotation zeroing the (p, q) entry: factor the
                # phase out of a_pq, then apply the real Jacobi angle.
                phase = apq / abs(apq)
                tau = (aqq - app) / (2.0 * abs(apq))
                t = np.sign(tau) / (abs(tau) + np.hypot(1.0, tau)) if tau != 0 else 1.0
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # Columns p, q of the similarity transform.
                col_p = a[:, p] * c - a[:, q] * s * np.conj(phase)
                col_q = a[:, p] * s * phase + a[:, q] * c
                a[:, p] = col_p
                a[:, q] = col_q
                row_p = a[p, :] * c - a[q, :] * s * phase
                row_q = a[p, :] * s * np.conj(phase) + a[q, :] * c
                a[p, :] = row_p
                a[q, :] = row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                vcol_p = v[:, p] * c - v[:, q] * s * np.conj(phase)
                vcol_q = v[:, p] * s * phase + v[:, q] * c
                v[:, p] = vcol_p
                v[:, q] = vcol_q
    else:
        raise RuntimeError("Jacobi sweep failed to converge")

    w = a.diagonal().real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def jacobi_eigvalsh(mat: np.ndarray) -> np.ndarray:
    """Ascending eigenvalues of a complex Hermitian matrix."""
    return jacobi_eigh(mat)[0]


def eigvals_2x2_hermitian(a00: float, a11: float, a01: complex) -> tuple[float, float]:
    """Closed-form eigenvalues (ascending) of [[a00, a01], [conj(a01), a11]]."""
    mean = 0.5 * (a00 + a11)
    disc = np.hypot(0.5 * (a00 - a11), abs(a01))
    return mean - disc, mean + disc


def hermitian_sqrt(mat: np.ndarray) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix.

    Eigenvalues in (-1e-10, 0) count as Jacobi round-off and are clipped
    to zero; anything more negative is a caller bug.
    """
    w, v = jacobi_eigh(mat)
    if w[0] < -1e-10:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {w[0]:.3e})")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T
