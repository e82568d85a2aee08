"""Numerics for entropy-gain lower bounds of two-qubit states in tensor-product form.

The package provides validated density matrices and von Neumann entropy, the
qubit portrait of a qutrit and the qutrit <-> two-qubit embedding, Kraus
channels (amplitude damping in particular), the two-term tensor-product
decomposition of a 4x4 state with its necessary conditions, and evaluation of
both sides of the entropy-gain inequality, including gamma sweeps and Monte
Carlo verification. A CLI exposes the same operations (see ``entgain --help``).
"""

from .bounds import (
    DEFAULT_GAMMA_GRID,
    BoundReport,
    SweepRow,
    conditional_qubit_state,
    entropy_gain,
    gain_lower_bound,
    gamma_sweep,
    induced_qutrit_map,
    verify_bound,
)
from .channels import (
    KrausChannel,
    amplitude_damping,
    amplitude_damping_closed_form,
    apply_channel,
    tensor_with_identity,
    validate_channel,
)
from .decomposition import (
    FormDiagnostics,
    TensorDecomposition,
    check_form_conditions,
    extract_decomposition,
    random_decomposable,
    reconstruct,
)
from .errors import (
    DimensionMismatchError,
    EntgainError,
    GammaOutOfRangeError,
    InconsistentEntriesError,
    InternalNumericalError,
    InvalidDecompositionError,
    MatrixFileError,
    NoConvergenceError,
    NotDecomposableError,
    NotHermitianError,
    NotPositiveError,
    NotTracePreservingError,
    SupportLeakError,
    TraceNotOneError,
    ZeroWeightError,
)
from .linalg import EigenResult, dagger, hermitian_eigen, kron
from .states import (
    DensityMatrix,
    embed_qutrit,
    extract_qutrit,
    is_pure,
    purity,
    qubit_portrait,
    random_density,
    validate_density,
    von_neumann_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "DEFAULT_GAMMA_GRID",
    "DensityMatrix",
    "DimensionMismatchError",
    "EigenResult",
    "EntgainError",
    "FormDiagnostics",
    "GammaOutOfRangeError",
    "InconsistentEntriesError",
    "InternalNumericalError",
    "InvalidDecompositionError",
    "KrausChannel",
    "MatrixFileError",
    "NoConvergenceError",
    "NotDecomposableError",
    "NotHermitianError",
    "NotPositiveError",
    "NotTracePreservingError",
    "SupportLeakError",
    "SweepRow",
    "TensorDecomposition",
    "TraceNotOneError",
    "ZeroWeightError",
    "amplitude_damping",
    "amplitude_damping_closed_form",
    "apply_channel",
    "check_form_conditions",
    "conditional_qubit_state",
    "dagger",
    "embed_qutrit",
    "entropy_gain",
    "extract_decomposition",
    "extract_qutrit",
    "gain_lower_bound",
    "gamma_sweep",
    "hermitian_eigen",
    "induced_qutrit_map",
    "is_pure",
    "kron",
    "purity",
    "qubit_portrait",
    "random_decomposable",
    "random_density",
    "reconstruct",
    "tensor_with_identity",
    "validate_channel",
    "validate_density",
    "verify_bound",
    "von_neumann_entropy",
]
