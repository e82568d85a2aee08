"""Validated density matrices and the maps between qutrit and two-qubit carriers.

A density matrix is Hermitian, positive semidefinite and has unit trace.
Validation runs once at construction; the eigenvalues found there are kept on
the instance so entropy comes for free afterwards.

Two carrier changes are provided for three-level states: ``embed_qutrit``
places a 3x3 state into the upper-left block of a 4x4 two-qubit state (fourth
row and column zero), and ``qubit_portrait`` collapses a 3x3 state onto a
single qubit by merging its first two levels.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    DimensionMismatchError,
    NotHermitianError,
    NotPositiveError,
    SupportLeakError,
    TraceNotOneError,
)

DEFAULT_HERM_TOL = 1e-10
DEFAULT_PSD_TOL = 1e-9
DEFAULT_TRACE_TOL = 1e-9


class DensityMatrix:
    """A validated quantum state.

    The wrapped matrix and its eigenvalues are stored read-only; all
    operations on states return new instances. Instances are safe to share
    across threads.

    Attributes:
        mat: the validated d x d complex matrix (read-only).
        dim: d.
        eigenvalues: ascending real eigenvalues found during validation.
        tol_herm, tol_psd, tol_trace: the tolerances the state was checked at.
    """

    __slots__ = ("mat", "dim", "eigenvalues", "tol_herm", "tol_psd", "tol_trace")

    def __init__(
        self,
        mat,
        *,
        tol_herm: float = DEFAULT_HERM_TOL,
        tol_psd: float = DEFAULT_PSD_TOL,
        tol_trace: float = DEFAULT_TRACE_TOL,
    ):
        m = np.array(mat, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatchError(f"expected a square matrix, got shape {m.shape}")
        if not np.isfinite(m).all():
            raise ValueError("matrix entries must be finite")
        defect = float(np.abs(m - m.conj().T).max())
        if defect > tol_herm:
            raise NotHermitianError(
                f"hermiticity defect {defect:.3e} exceeds tolerance {tol_herm:.1e}"
            )
        eigenvalues = np.linalg.eigvalsh(m)
        if eigenvalues[0] < -tol_psd:
            raise NotPositiveError(
                f"eigenvalue {eigenvalues[0]:.6e} below -{tol_psd:.1e}",
                eigenvalue=float(eigenvalues[0]),
            )
        trace = float(m.trace().real)
        if abs(trace - 1.0) > tol_trace:
            raise TraceNotOneError(f"trace {trace!r} differs from 1 beyond {tol_trace:.1e}")
        m.setflags(write=False)
        eigenvalues.setflags(write=False)
        self.mat = m
        self.dim = m.shape[0]
        self.eigenvalues = eigenvalues
        self.tol_herm = tol_herm
        self.tol_psd = tol_psd
        self.tol_trace = tol_trace

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim})"


def validate_density(
    mat, tol_herm: float = DEFAULT_HERM_TOL, tol_psd: float = DEFAULT_PSD_TOL
) -> DensityMatrix:
    """Check Hermiticity, positivity and unit trace; return the wrapped state."""
    return DensityMatrix(mat, tol_herm=tol_herm, tol_psd=tol_psd)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy -sum(w * ln w) over the eigenvalues, in nats.

    Eigenvalues in [-tol_psd, 0) are rounding noise (validation rejects
    anything lower) and count as 0, with the convention 0 * ln 0 = 0.
    """
    w = rho.eigenvalues
    positive = w[w > 0.0]
    return float(-(positive * np.log(positive)).sum())


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2), between 1/d (maximally mixed) and 1 (pure)."""
    return float((rho.mat @ rho.mat).trace().real)


def is_pure(rho: DensityMatrix, tol: float = 1e-9) -> bool:
    """True when Tr(rho^2) >= 1 - tol."""
    return purity(rho) >= 1.0 - tol


def qubit_portrait(rho3: DensityMatrix) -> DensityMatrix:
    """Qubit obtained from a qutrit by merging levels 1 and 2.

    The result is [[r11 + r22, r13], [r31, r33]]; it is always a valid
    state, so a validation failure here is an internal error.
    """
    if rho3.dim != 3:
        raise DimensionMismatchError(f"portrait needs a 3x3 state, got dim {rho3.dim}")
    m = rho3.mat
    sigma = np.array(
        [[m[0, 0] + m[1, 1], m[0, 2]], [m[2, 0], m[2, 2]]], dtype=complex
    )
    return DensityMatrix(sigma)


def embed_qutrit(rho3: DensityMatrix) -> DensityMatrix:
    """Place a qutrit into a two-qubit carrier: upper-left 3x3 block, rest zero."""
    if rho3.dim != 3:
        raise DimensionMismatchError(f"embedding needs a 3x3 state, got dim {rho3.dim}")
    m4 = np.zeros((4, 4), dtype=complex)
    m4[:3, :3] = rho3.mat
    return DensityMatrix(m4)


def extract_qutrit(rho4: DensityMatrix, tol: float = DEFAULT_PSD_TOL) -> DensityMatrix:
    """Inverse of ``embed_qutrit``: recover the 3x3 block of a 4x4 state.

    Raises SupportLeakError when the fourth row or column carries weight
    above ``tol``, which signals that the state left the embedded subspace.
    """
    if rho4.dim != 4:
        raise DimensionMismatchError(f"extraction needs a 4x4 state, got dim {rho4.dim}")
    m = rho4.mat
    residual = float(max(np.abs(m[3, :]).max(), np.abs(m[:, 3]).max()))
    if residual > tol:
        raise SupportLeakError(
            f"fourth row/column carries weight {residual:.3e} above {tol:.1e}",
            residual=residual,
        )
    return DensityMatrix(np.array(m[:3, :3]))


def random_density(dim: int, seed) -> DensityMatrix:
    """Full-rank random state rho = G G^dag / Tr(G G^dag), G complex standard normal.

    ``seed`` may be an integer or a numpy Generator; a fixed integer seed
    reproduces the same state.
    """
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    m = g @ g.conj().T
    return DensityMatrix(m / m.trace().real)
