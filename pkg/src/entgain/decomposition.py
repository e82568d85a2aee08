"""Two-term tensor-product structure of two-qubit states with an empty fourth level.

A 4x4 state whose fourth row and column vanish may, or may not, be writable as

    rho = sum_{n,m in {1,2}} alpha[n,m] |e_n><e_m| (x) |h_n><h_m|

with (e_n) the computational qubit basis, h_n unit vectors in C^2 and alpha a
Hermitian positive semidefinite matrix of unit trace. Matching entries forces
h_2 = (1, 0) and, writing h_1 = (x, y), makes the state

    [[a11*x^2,  a11*x*cy,  a12*x,  0],
     [a11*x*y,  a11*|y|^2, a12*y,  0],
     [a21*x,    a21*cy,    a22,    0],
     [0,        0,         0,      0]]        (cy = conjugate of y)

Two consequences of this shape are checkable directly on the entries and are
necessary for decomposability:

    r11*r22 == r12*r21   and   det of the upper-left 3x3 block == 0.

``check_form_conditions`` reports the residuals of both (plus the weight
outside the 3x3 block), ``extract_decomposition`` solves the entry equations
for (alpha, h1, h2), and ``reconstruct`` maps the data back to the 4x4 state.
The conditions are not claimed to be sufficient, so extraction always ends
with a reconstruct-and-compare self check.

Gauge convention: a global phase on h1 can be absorbed into alpha[0,1], so
extraction fixes the first component of h1 to be real and nonnegative (and
yields y = 1 when x = 0). Two decompositions related by this phase freedom
reconstruct to the identical matrix.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    InconsistentEntriesError,
    InternalNumericalError,
    InvalidDecompositionError,
    NotDecomposableError,
    NotHermitianError,
    NotPositiveError,
    TraceNotOneError,
)
from .states import DensityMatrix

DEFAULT_FORM_TOL = 1e-9
SELF_CHECK_TOL = 1e-10

_ALPHA_HERM_TOL = 1e-10
_ALPHA_PSD_TOL = 1e-9
_ALPHA_TRACE_TOL = 1e-9
_UNIT_TOL = 1e-10


class TensorDecomposition:
    """The (alpha, h1, h2) data of a two-term product-form state.

    Invariants (checked at construction): alpha is 2x2 Hermitian, positive
    semidefinite within tolerance and has unit trace; h1 and h2 are unit
    vectors in C^2 whose first components are real and nonnegative. When
    produced by ``extract_decomposition``, h2 is exactly (1, 0).
    """

    __slots__ = ("alpha", "h1", "h2")

    def __init__(self, alpha, h1, h2=(1.0, 0.0)):
        a = np.array(alpha, dtype=complex)
        if a.shape != (2, 2):
            raise InvalidDecompositionError(f"alpha must be 2x2, got shape {a.shape}")
        defect = float(np.abs(a - a.conj().T).max())
        if defect > _ALPHA_HERM_TOL:
            raise InvalidDecompositionError(
                f"alpha hermiticity defect {defect:.3e} exceeds {_ALPHA_HERM_TOL:.1e}"
            )
        low = float(np.linalg.eigvalsh(a)[0])
        if low < -_ALPHA_PSD_TOL:
            raise InvalidDecompositionError(
                f"alpha eigenvalue {low:.6e} below -{_ALPHA_PSD_TOL:.1e}"
            )
        trace = float(a.trace().real)
        if abs(trace - 1.0) > _ALPHA_TRACE_TOL:
            raise InvalidDecompositionError(f"alpha trace {trace!r} is not 1")
        vecs = []
        for name, h in (("h1", h1), ("h2", h2)):
            v = np.array(h, dtype=complex).reshape(-1)
            if v.shape != (2,):
                raise InvalidDecompositionError(f"{name} must have 2 components")
            norm = float(np.linalg.norm(v))
            if abs(norm - 1.0) > _UNIT_TOL:
                raise InvalidDecompositionError(f"{name} norm {norm!r} is not 1")
            if abs(v[0].imag) > _UNIT_TOL or v[0].real < -_UNIT_TOL:
                raise InvalidDecompositionError(
                    f"{name} first component must be real and nonnegative, got {v[0]!r}"
                )
            vecs.append(v)
        for arr in (a, vecs[0], vecs[1]):
            arr.setflags(write=False)
        self.alpha = a
        self.h1 = vecs[0]
        self.h2 = vecs[1]

    def __repr__(self) -> str:
        return (
            f"TensorDecomposition(weights=({self.alpha[0, 0].real:.6g}, "
            f"{self.alpha[1, 1].real:.6g}))"
        )


class FormDiagnostics(NamedTuple):
    """Residuals of the necessary product-form conditions, and the verdict."""

    minor_residual: float
    det3_residual: float
    support_residual: float
    decomposable: bool


def check_form_conditions(
    rho4: DensityMatrix, tol: float = DEFAULT_FORM_TOL
) -> FormDiagnostics:
    """Evaluate the necessary conditions on a 4x4 state.

    minor_residual = |r11*r22 - r12*r21|, det3_residual = |det of the 3x3
    block|, support_residual = largest entry magnitude in the fourth row or
    column. The state is flagged decomposable when all are at most ``tol``.
    """
    if rho4.dim != 4:
        raise DimensionMismatchError(f"form check needs a 4x4 state, got dim {rho4.dim}")
    m = rho4.mat
    minor = float(abs(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]))
    det3 = float(abs(np.linalg.det(m[:3, :3])))
    support = float(max(np.abs(m[3, :]).max(), np.abs(m[:, 3]).max()))
    verdict = minor <= tol and det3 <= tol and support <= tol
    return FormDiagnostics(minor, det3, support, verdict)


def extract_decomposition(
    rho4: DensityMatrix, tol: float = DEFAULT_FORM_TOL
) -> TensorDecomposition:
    """Solve the entry equations of the product form for (alpha, h1, h2).

    Regular case: a11 = r11 + r22, a22 = r33, x = sqrt(r11 / a11),
    y = r21 / (a11 * x), alpha12 = r13 / x, h2 = (1, 0). Degenerate cases:
    when r11 <= tol the gauge is x = 0, y = 1 and alpha12 = r23; when
    a11 <= tol the first component carries no weight and h1 is fixed to
    (1, 0) with alpha12 = 0.

    Raises NotDecomposableError when the necessary conditions fail at
    ``tol`` and InconsistentEntriesError when they held numerically but the
    entries do not actually fit (the final reconstruct-and-compare self
    check is the arbiter, at 1e-10 in max-norm).
    """
    diagnostics = check_form_conditions(rho4, tol)
    if not diagnostics.decomposable:
        raise NotDecomposableError(
            "state fails the necessary product-form conditions: "
            f"minor {diagnostics.minor_residual:.3e}, "
            f"det3 {diagnostics.det3_residual:.3e}, "
            f"support {diagnostics.support_residual:.3e} (tol {tol:.1e})",
            diagnostics=diagnostics,
        )
    m = rho4.mat
    a11 = float((m[0, 0] + m[1, 1]).real)
    a22 = float(m[2, 2].real)
    if a11 <= tol:
        # Zero-weight first component: nothing constrains h1, but the whole
        # first block row must then be empty.
        stray = float(max(np.abs(m[:2, :2]).max(), abs(m[0, 2]), abs(m[1, 2])))
        if stray > tol:
            raise InconsistentEntriesError(
                f"first component has weight {a11:.3e} yet entries up to {stray:.3e} remain"
            )
        x, y = 1.0, 0.0 + 0.0j
        alpha12 = 0.0 + 0.0j
    elif float(m[0, 0].real) <= tol:
        # x = 0 gauge: phase of y is absorbable into alpha12, so set y = 1.
        if abs(m[0, 2]) > tol:
            raise InconsistentEntriesError(
                f"entry (1,3) should vanish when x = 0, got magnitude {abs(m[0, 2]):.3e}"
            )
        x, y = 0.0, 1.0 + 0.0j
        alpha12 = complex(m[1, 2])
    else:
        x = math.sqrt(float(m[0, 0].real) / a11)
        y = complex(m[1, 0]) / (a11 * x)
        alpha12 = complex(m[0, 2]) / x
        mismatch = abs(m[1, 2] - alpha12 * y)
        if mismatch > tol:
            raise InconsistentEntriesError(
                f"entry (2,3) disagrees with alpha12 * y by {mismatch:.3e}"
            )
        norm = math.hypot(x, abs(y))
        x, y = x / norm, y / norm
    alpha = np.array([[a11, alpha12], [alpha12.conjugate(), a22]], dtype=complex)
    try:
        dec = TensorDecomposition(alpha, (x, y), (1.0, 0.0))
    except InvalidDecompositionError as exc:
        raise InconsistentEntriesError(f"extracted data is not a valid decomposition: {exc}") from exc
    residual = float(np.abs(reconstruct(dec).mat - m).max())
    if residual > SELF_CHECK_TOL:
        raise InconsistentEntriesError(
            f"conditions held but reconstruction misses the state by {residual:.3e}"
        )
    return dec


def reconstruct(dec: TensorDecomposition) -> DensityMatrix:
    """Assemble the 4x4 state sum_{n,m} alpha[n,m] |e_n><e_m| (x) |h_n><h_m|."""
    vectors = (dec.h1, dec.h2)
    out = np.zeros((4, 4), dtype=complex)
    for n in range(2):
        for m in range(2):
            out[2 * n : 2 * n + 2, 2 * m : 2 * m + 2] = dec.alpha[n, m] * np.outer(
                vectors[n], vectors[m].conj()
            )
    try:
        return DensityMatrix(out)
    except (NotHermitianError, NotPositiveError, TraceNotOneError, ValueError) as exc:
        raise InternalNumericalError(f"reconstructed state failed validation: {exc}") from exc


def random_decomposable(seed) -> TensorDecomposition:
    """Deterministic random decomposition for a given integer seed.

    alpha = G G^dag / Tr(G G^dag) with G a 2x2 complex standard-normal draw;
    h1 = (x, e^{i phi} sqrt(1 - x^2)) with x uniform on [0, 1] and phi
    uniform on [0, 2 pi); h2 = (1, 0).
    """
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    gram = g @ g.conj().T
    alpha = gram / gram.trace().real
    x = rng.uniform(0.0, 1.0)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    y = complex(math.cos(phi), math.sin(phi)) * math.sqrt(1.0 - x * x)
    return TensorDecomposition(alpha, (x, y), (1.0, 0.0))
