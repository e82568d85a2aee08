"""Exception types shared across the package."""


class EntgainError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(EntgainError):
    """Operands have incompatible or unexpected dimensions."""


class NotHermitianError(EntgainError):
    """Matrix deviates from its conjugate transpose beyond tolerance."""


class NoConvergenceError(EntgainError):
    """The eigensolver failed to converge."""


class NotPositiveError(EntgainError):
    """Matrix has an eigenvalue below the negative tolerance."""

    def __init__(self, message: str, eigenvalue: float | None = None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class TraceNotOneError(EntgainError):
    """Matrix trace differs from 1 beyond tolerance."""


class SupportLeakError(EntgainError):
    """State has weight outside the embedded three-level subspace."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class GammaOutOfRangeError(EntgainError):
    """Damping strength outside [0, 1]."""


class NotTracePreservingError(EntgainError):
    """Kraus operators fail the completeness relation."""


class InvalidDecompositionError(EntgainError):
    """Decomposition data violates one of its invariants."""


class NotDecomposableError(EntgainError):
    """State fails the necessary conditions for a two-term product form."""

    def __init__(self, message: str, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class InconsistentEntriesError(EntgainError):
    """Necessary conditions held numerically, but the entries do not fit the product form."""


class ZeroWeightError(EntgainError):
    """Conditional state undefined: the normalizing weight is (numerically) zero."""


class InternalNumericalError(EntgainError):
    """An operation whose output is valid by construction failed revalidation."""


class MatrixFileError(EntgainError):
    """A matrix file could not be parsed."""
