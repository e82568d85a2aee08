"""Dense complex linear algebra for the small matrices (d <= 4) used everywhere else."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import NoConvergenceError, NotHermitianError

DEFAULT_HERMITICITY_TOL = 1e-10


class EigenResult(NamedTuple):
    """Spectral decomposition of a Hermitian matrix.

    ``eigenvalues`` is real and sorted ascending; column ``eigenvectors[:, i]``
    belongs to ``eigenvalues[i]``, and the eigenvector matrix is unitary.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def dagger(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return a.conj().T


def hermiticity_defect(a: np.ndarray) -> float:
    """Max-norm distance of ``a`` from its conjugate transpose."""
    return float(np.abs(a - a.conj().T).max())


def kron(a, b) -> np.ndarray:
    """Kronecker product: entry ((i*rb + k), (j*cb + l)) equals a[i, j] * b[k, l]."""
    am = np.asarray(a, dtype=complex)
    bm = np.asarray(b, dtype=complex)
    if am.ndim != 2 or bm.ndim != 2:
        raise ValueError("kron expects two 2-D matrices")
    return np.kron(am, bm)


def hermitian_eigen(a, tol: float = DEFAULT_HERMITICITY_TOL) -> EigenResult:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a Hermitian matrix.

    Raises NotHermitianError if ``a`` deviates from Hermiticity by more than
    ``tol`` in max-norm, and NoConvergenceError if the iteration fails.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    defect = hermiticity_defect(m)
    if defect > tol:
        raise NotHermitianError(
            f"hermiticity defect {defect:.3e} exceeds tolerance {tol:.1e}"
        )
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver did not converge: {exc}") from exc
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return EigenResult(eigenvalues, eigenvectors)
