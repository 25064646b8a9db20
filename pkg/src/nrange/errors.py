"""Exception types shared across the package."""


class NRangeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidMatrix(NRangeError):
    """Input is not a finite, square complex matrix."""


class NotHermitian(NRangeError):
    """Matrix deviates from Hermitian symmetry beyond tolerance."""


class EigenFailure(NRangeError):
    """Eigenvalue iteration failed to converge."""


class ZeroMatrix(NRangeError):
    """Operation is undefined (or ambiguous) for the zero matrix."""


class DimensionMismatch(NRangeError):
    """Operands have incompatible dimensions."""


class EmptySet(NRangeError):
    """A nonempty point set was required."""


class NotContained(NRangeError):
    """A containment precondition failed."""


class AmbiguousClassification(NRangeError):
    """The two normaloid criteria disagree; tolerances are too tight
    for this input to be classified reliably."""


class NotNormal(NRangeError):
    """Matrix is not normal within tolerance."""


class InvalidSpec(NRangeError):
    """Generator specification or suite configuration is invalid."""


class ParseError(NRangeError):
    """Matrix file could not be parsed.

    Carries the 1-based line number where parsing failed.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
