"""Exception types shared across the package."""


class RakitError(Exception):
    """Base class for numerical failures raised by rakit."""


class SingularMatrixError(RakitError):
    """A factorization hit a pivot that is zero to working precision."""


class NotSPDError(RakitError):
    """Cholesky found a non-positive pivot: the matrix is not SPD."""


class SingularFunctionError(RakitError):
    """1/lam is an eigenvalue of the projected matrix to working precision,
    so the rational function cannot be evaluated."""


class IndefiniteMatrixError(RakitError):
    """Conjugate gradients met non-positive curvature: the matrix is not SPD."""


class DegenerateDenominatorError(RakitError):
    """The characteristic-polynomial denominator of an error formula vanished."""


class MatrixMarketError(ValueError):
    """Malformed Matrix Market file; carries the offending 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
