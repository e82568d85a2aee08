"""Entropy gain under a channel on the right factor, and its lower bound.

For a state rho in the two-term product form with data (alpha, h1, h2) and a
channel W on the right qubit, the entropy gain of Id (x) W obeys

    S((Id (x) W)(rho)) - S(rho)  >=  sum_j alpha[j,j] * S(W(|h_j><h_j|)).

Both sides are computed here, together with the specialization to amplitude
damping: the induced entrywise map on an embedded qutrit, the normalized
upper 2x2 conditional block (pure exactly when the minor condition holds,
which is why both sides vanish at gamma = 0), and gamma sweeps over a grid.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .channels import (
    KrausChannel,
    amplitude_damping,
    apply_channel,
    check_gamma,
    tensor_with_identity,
)
from .decomposition import TensorDecomposition, reconstruct
from .errors import DimensionMismatchError, ZeroWeightError
from .states import DensityMatrix, von_neumann_entropy

DEFAULT_SLACK_TOL = 1e-8
DEFAULT_GAMMA_GRID: tuple[float, ...] = tuple(i / 10 for i in range(11))

_WEIGHT_FLOOR = 1e-12


class BoundReport(NamedTuple):
    """Both sides of the gain inequality for one state and one channel."""

    lhs: float
    rhs: float
    slack: float
    holds: bool
    tol: float


class SweepRow(NamedTuple):
    """One gamma point of a sweep; lhs = entropy_out - entropy_in."""

    gamma: float
    entropy_in: float
    entropy_out: float
    lhs: float
    rhs: float
    slack: float


def entropy_gain(ch: KrausChannel, rho: DensityMatrix) -> float:
    """S((Id (x) ch)(rho)) - S(rho) for a state on a d_left x in_dim system."""
    if ch.in_dim != ch.out_dim or rho.dim % ch.in_dim != 0:
        raise DimensionMismatchError(
            f"state of dimension {rho.dim} does not factor over channel dimension "
            f"{ch.in_dim}x{ch.out_dim}"
        )
    d_left = rho.dim // ch.in_dim
    out = apply_channel(tensor_with_identity(ch, d_left), rho)
    return von_neumann_entropy(out) - von_neumann_entropy(rho)


def _bound_terms(dec: TensorDecomposition):
    """Weights alpha[j,j] with the projector states |h_j><h_j|, built once."""
    return tuple(
        (float(dec.alpha[j, j].real), DensityMatrix(np.outer(h, h.conj())))
        for j, h in ((0, dec.h1), (1, dec.h2))
    )


def _bound_from_terms(terms, ch: KrausChannel) -> float:
    return float(
        sum(w * von_neumann_entropy(apply_channel(ch, p)) for w, p in terms)
    )


def gain_lower_bound(dec: TensorDecomposition, ch: KrausChannel) -> float:
    """sum_j alpha[j,j] * S(ch(|h_j><h_j|)), the guaranteed entropy gain.

    Works for any qubit channel; for amplitude damping the h2 = (1, 0) term
    vanishes because the first basis state is a fixed point.
    """
    if ch.in_dim != 2:
        raise DimensionMismatchError(
            f"the bound is over qubit channels, got input dimension {ch.in_dim}"
        )
    return _bound_from_terms(_bound_terms(dec), ch)


def verify_bound(
    dec: TensorDecomposition, ch: KrausChannel, tol: float = DEFAULT_SLACK_TOL
) -> BoundReport:
    """Evaluate both sides on the reconstructed state; holds iff slack >= -tol."""
    lhs = entropy_gain(ch, reconstruct(dec))
    rhs = gain_lower_bound(dec, ch)
    slack = lhs - rhs
    return BoundReport(lhs, rhs, slack, slack >= -tol, tol)


def induced_qutrit_map(gamma: float, rho3: DensityMatrix) -> DensityMatrix:
    """Entrywise action of damping the second qubit, seen on the embedded qutrit.

    With s = sqrt(1 - gamma):

        [[r11 + g*r22, s*r12,      r13  ],
         [s*r21,       (1-g)*r22,  s*r23],
         [r31,         s*r32,      r33  ]]

    Equals the embed -> (Id (x) damping) -> extract path to machine precision.
    At gamma = 1 this is the qubit portrait padded with a zero row and column.
    """
    g = check_gamma(gamma)
    if rho3.dim != 3:
        raise DimensionMismatchError(f"induced map needs a 3x3 state, got dim {rho3.dim}")
    s = np.sqrt(1.0 - g)
    m = rho3.mat
    out = np.array(
        [
            [m[0, 0] + g * m[1, 1], s * m[0, 1], m[0, 2]],
            [s * m[1, 0], (1.0 - g) * m[1, 1], s * m[1, 2]],
            [m[2, 0], s * m[2, 1], m[2, 2]],
        ],
        dtype=complex,
    )
    return DensityMatrix(out)


def conditional_qubit_state(rho3: DensityMatrix) -> DensityMatrix:
    """Upper-left 2x2 block normalized by r11 + r22.

    For states extracted from a decomposable two-qubit state this equals
    |h1><h1| and is pure. Raises ZeroWeightError when the block carries
    (numerically) no weight.
    """
    if rho3.dim != 3:
        raise DimensionMismatchError(
            f"conditional state needs a 3x3 state, got dim {rho3.dim}"
        )
    m = rho3.mat
    weight = float((m[0, 0] + m[1, 1]).real)
    if weight <= _WEIGHT_FLOOR:
        raise ZeroWeightError(f"block weight {weight:.3e} is below {_WEIGHT_FLOOR:.1e}")
    return DensityMatrix(np.array(m[:2, :2]) / weight)


def gamma_sweep(
    dec: TensorDecomposition, grid: Sequence[float] = DEFAULT_GAMMA_GRID
) -> list[SweepRow]:
    """Evaluate both sides of the bound for each damping strength in ``grid``."""
    rho = reconstruct(dec)
    entropy_in = von_neumann_entropy(rho)
    terms = _bound_terms(dec)
    rows = []
    for gamma in grid:
        ch = amplitude_damping(gamma)
        out = apply_channel(tensor_with_identity(ch, 2), rho)
        entropy_out = von_neumann_entropy(out)
        lhs = entropy_out - entropy_in
        rhs = _bound_from_terms(terms, ch)
        rows.append(SweepRow(float(gamma), entropy_in, entropy_out, lhs, rhs, lhs - rhs))
    return rows
