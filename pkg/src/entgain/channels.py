"""Quantum channels in Kraus form, and the amplitude damping channel in particular.

A channel acts as rho -> sum_k A_k rho A_k^dag with the completeness relation
sum_k A_k^dag A_k = I. Amplitude damping with strength gamma in [0, 1] is the
qubit channel

    [[r11, r12],        [[r11 + g*r22,     sqrt(1-g)*r12],
     [r21, r22]]   ->    [sqrt(1-g)*r21,   (1-g)*r22   ]]

with Kraus operators A0 = [[1, 0], [0, sqrt(1-g)]] and A1 = [[0, sqrt(g)], [0, 0]].
It models energy loss toward the first basis state, which it leaves fixed.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import (
    DimensionMismatchError,
    GammaOutOfRangeError,
    InternalNumericalError,
    NotHermitianError,
    NotPositiveError,
    NotTracePreservingError,
    TraceNotOneError,
)
from .states import DensityMatrix

_VALIDATION_ERRORS = (NotHermitianError, NotPositiveError, TraceNotOneError, ValueError)

DEFAULT_COMPLETENESS_TOL = 1e-10


def check_gamma(gamma: float) -> float:
    """Validate a damping strength; returns it as float."""
    g = float(gamma)
    if not 0.0 <= g <= 1.0:
        raise GammaOutOfRangeError(f"damping strength must be in [0, 1], got {g!r}")
    return g


class KrausChannel:
    """A trace-preserving channel given by its Kraus operators.

    Completeness is checked at construction; the operators are stored
    read-only. Operators map ``in_dim`` to ``out_dim``.
    """

    __slots__ = ("in_dim", "out_dim", "ops")

    def __init__(self, ops, tol: float = DEFAULT_COMPLETENESS_TOL):
        mats = tuple(np.array(op, dtype=complex) for op in ops)
        if not mats:
            raise DimensionMismatchError("a channel needs at least one Kraus operator")
        shape = mats[0].shape
        if len(shape) != 2:
            raise DimensionMismatchError("Kraus operators must be 2-D matrices")
        for m in mats:
            if m.shape != shape:
                raise DimensionMismatchError(
                    f"Kraus operators disagree in shape: {m.shape} vs {shape}"
                )
        out_dim, in_dim = shape
        completeness = sum(m.conj().T @ m for m in mats)
        defect = float(np.abs(completeness - np.eye(in_dim)).max())
        if defect > tol:
            raise NotTracePreservingError(
                f"completeness defect {defect:.3e} exceeds tolerance {tol:.1e}"
            )
        for m in mats:
            m.setflags(write=False)
        self.in_dim = in_dim
        self.out_dim = out_dim
        self.ops = mats

    def __repr__(self) -> str:
        return f"KrausChannel(in_dim={self.in_dim}, out_dim={self.out_dim}, n_ops={len(self.ops)})"


def validate_channel(ops, tol: float = DEFAULT_COMPLETENESS_TOL) -> KrausChannel:
    """Build a channel from operators, failing loudly if completeness breaks."""
    return KrausChannel(ops, tol=tol)


def amplitude_damping(gamma: float) -> KrausChannel:
    """The qubit amplitude damping channel with strength gamma in [0, 1]."""
    g = check_gamma(gamma)
    a0 = np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - g)]], dtype=complex)
    a1 = np.array([[0.0, math.sqrt(g)], [0.0, 0.0]], dtype=complex)
    return KrausChannel((a0, a1))


def apply_channel(ch: KrausChannel, rho: DensityMatrix) -> DensityMatrix:
    """sum_k A_k rho A_k^dag, revalidated as a state.

    A validation failure of the output means floating point went bad and is
    raised as InternalNumericalError instead of being returned silently.
    """
    if rho.dim != ch.in_dim:
        raise DimensionMismatchError(
            f"channel expects dimension {ch.in_dim}, state has {rho.dim}"
        )
    first = ch.ops[0]
    out = first @ rho.mat @ first.conj().T
    for a in ch.ops[1:]:
        out += a @ rho.mat @ a.conj().T
    try:
        return DensityMatrix(out)
    except _VALIDATION_ERRORS as exc:
        raise InternalNumericalError(f"channel output failed validation: {exc}") from exc


def amplitude_damping_closed_form(gamma: float, rho2: DensityMatrix) -> DensityMatrix:
    """Entrywise form of amplitude damping on a qubit.

    Must agree with applying the Kraus operators to machine precision.
    """
    g = check_gamma(gamma)
    if rho2.dim != 2:
        raise DimensionMismatchError(f"closed form needs a qubit state, got dim {rho2.dim}")
    s = math.sqrt(1.0 - g)
    m = rho2.mat
    out = np.array(
        [[m[0, 0] + g * m[1, 1], s * m[0, 1]], [s * m[1, 0], (1.0 - g) * m[1, 1]]],
        dtype=complex,
    )
    try:
        return DensityMatrix(out)
    except _VALIDATION_ERRORS as exc:
        raise InternalNumericalError(f"closed-form output failed validation: {exc}") from exc


def tensor_with_identity(ch: KrausChannel, d_left: int) -> KrausChannel:
    """Extend a channel to act on the right factor of a d_left x in_dim system.

    The Kraus operators become kron(I_{d_left}, A_k), so completeness carries over.
    """
    if d_left < 1:
        raise ValueError(f"left dimension must be at least 1, got {d_left}")
    eye = np.eye(d_left)
    return KrausChannel(tuple(np.kron(eye, a) for a in ch.ops))
